"""Text-art grid maps for the maze environments.

One character per cell: ``#`` wall, ``.`` plain walkable floor, digits
``1``-``4`` rewarded floor cells belonging to path i, letters ``A``-``D``
goal cells of paths 1-4. Maps must be rectangular.
"""

import numpy as np

from ..errors import ConfigError

WALL = 0
EMPTY = 1
FLOOR = 2
GOAL = 3

_CHAR_TO_CELL = {"#": (WALL, 0), ".": (EMPTY, 0)}
for _i in range(1, 5):
    _CHAR_TO_CELL[str(_i)] = (FLOOR, _i)
    _CHAR_TO_CELL[chr(ord("A") + _i - 1)] = (GOAL, _i)

_CELL_TO_CHAR = {v: k for k, v in _CHAR_TO_CELL.items()}


def parse_grid(text):
    """Parse text art into (kinds, paths) int arrays of shape (rows, cols)."""
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ConfigError("empty grid map")
    width = len(lines[0])
    if any(len(line) != width for line in lines):
        raise ConfigError("grid map rows have unequal lengths")
    kinds = np.zeros((len(lines), width), dtype=np.int64)
    paths = np.zeros((len(lines), width), dtype=np.int64)
    for r, line in enumerate(lines):
        for c, ch in enumerate(line):
            if ch not in _CHAR_TO_CELL:
                raise ConfigError(f"unknown grid character {ch!r} at row {r}, col {c}")
            kinds[r, c], paths[r, c] = _CHAR_TO_CELL[ch]
    return kinds, paths


def render_grid(kinds, paths):
    """Inverse of parse_grid, for fixtures and debugging."""
    rows = []
    for r in range(kinds.shape[0]):
        rows.append(
            "".join(_CELL_TO_CHAR[(int(kinds[r, c]), int(paths[r, c]))]
                    for c in range(kinds.shape[1]))
        )
    return "\n".join(rows)
