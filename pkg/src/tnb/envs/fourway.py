"""4-Way Maze: a force-controlled point mass in a cross-shaped grid.

Four arms lead from the center to four goal cells. Arm i pays a one-time
floor bonus of ``floor_base * ((5-i)/4)**3`` per cell and a terminal goal
bonus of ``goal_base * ((5-i)/4)**3``, so total achievable reward strictly
decreases with i. Every step costs the alive penalty; running into a wall
costs the wall penalty. Observation is (x, y, vx, vy) in world units.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError
from . import gridmap
from .base import Environment, StepResult

DEFAULT_GRID = """\
###########
#####A#####
#####1#####
#####1#####
#####1#####
D4444.2222B
#####3#####
#####3#####
#####3#####
#####C#####
###########
"""


@dataclass
class FourwayConfig:
    grid: str = DEFAULT_GRID
    cell_size: float = 1.0
    dt: float = 0.1
    mass: float = 1.0
    force_limit: float = 1.0
    velocity_limit: float = 2.0
    alive_penalty: float = -1.0
    wall_penalty: float = -10.0
    floor_base: float = 50.0
    goal_base: float = 500.0
    horizon: int = 500

    def __post_init__(self):
        for name in ("cell_size", "dt", "mass", "force_limit", "velocity_limit"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        if self.horizon <= 0:
            raise ConfigError("horizon must be positive")


def path_fraction(path_index):
    """Cubic reward falloff for path rank i in 1..4."""
    return ((5.0 - path_index) / 4.0) ** 3


def step_reward(kind, path_index, first_visit, wall_contact, config):
    """Assemble one step's task reward; returns (reward, terminated)."""
    reward = config.alive_penalty
    terminated = False
    if wall_contact:
        reward += config.wall_penalty
    if kind == gridmap.FLOOR and first_visit:
        reward += config.floor_base * path_fraction(path_index)
    elif kind == gridmap.GOAL:
        reward += config.goal_base * path_fraction(path_index)
        terminated = True
    return reward, terminated


class FourWayMaze(Environment):
    observation_dim = 4
    action_dim = 2

    def __init__(self, config=None):
        super().__init__()
        self.config = config or FourwayConfig()
        self.kinds, self.paths = gridmap.parse_grid(self.config.grid)
        goal_cells = np.argwhere(self.kinds == gridmap.GOAL)
        if len(goal_cells) != 4:
            raise ConfigError(f"4-Way Maze needs exactly 4 goal cells, got {len(goal_cells)}")
        goal_paths = sorted(int(self.paths[r, c]) for r, c in goal_cells)
        if goal_paths != [1, 2, 3, 4]:
            raise ConfigError("goal cells must carry path indices 1..4")
        starts = np.argwhere(self.kinds == gridmap.EMPTY)
        if len(starts) != 1:
            raise ConfigError("grid must contain exactly one '.' start cell")
        self._start_cell = starts[0]
        self.horizon = self.config.horizon
        self._pos = np.zeros(2)
        self._vel = np.zeros(2)
        self._visited = set()
        self._steps = 0

    def reset(self, seed=None):
        cs = self.config.cell_size
        self._pos = np.array([
            (self._start_cell[1] + 0.5) * cs,  # x along columns
            (self._start_cell[0] + 0.5) * cs,  # y along rows
        ])
        self._vel = np.zeros(2)
        self._visited = set()
        self._steps = 0
        self._terminated = False
        return self._observe()

    def _observe(self):
        return np.array([self._pos[0], self._pos[1], self._vel[0], self._vel[1]])

    def _cell_at(self, x, y):
        cs = self.config.cell_size
        col = int(np.floor(x / cs))
        row = int(np.floor(y / cs))
        if not (0 <= row < self.kinds.shape[0] and 0 <= col < self.kinds.shape[1]):
            return None  # outside the map counts as wall
        return row, col

    def _blocked(self, x, y):
        cell = self._cell_at(x, y)
        return cell is None or self.kinds[cell] == gridmap.WALL

    def step(self, action):
        self._require_active()
        force = np.clip(self._check_action(action),
                        -self.config.force_limit, self.config.force_limit)
        cfg = self.config
        self._vel += force / cfg.mass * cfg.dt
        speed = float(np.linalg.norm(self._vel))
        if speed > cfg.velocity_limit:
            self._vel *= cfg.velocity_limit / speed

        # per-axis movement; a blocked axis keeps position and zeroes velocity
        wall_contact = False
        nx = self._pos[0] + self._vel[0] * cfg.dt
        if self._blocked(nx, self._pos[1]):
            wall_contact = True
            self._vel[0] = 0.0
        else:
            self._pos[0] = nx
        ny = self._pos[1] + self._vel[1] * cfg.dt
        if self._blocked(self._pos[0], ny):
            wall_contact = True
            self._vel[1] = 0.0
        else:
            self._pos[1] = ny

        cell = self._cell_at(self._pos[0], self._pos[1])
        kind = int(self.kinds[cell])
        path = int(self.paths[cell])
        first_visit = kind == gridmap.FLOOR and cell not in self._visited
        if first_visit:
            self._visited.add(cell)
        reward, terminated = step_reward(kind, path, first_visit, wall_contact, cfg)
        self._steps += 1
        self._terminated = terminated
        info = {
            "cell_kind": kind,
            "path_index": path if kind in (gridmap.FLOOR, gridmap.GOAL) else None,
            "goal_index": path if kind == gridmap.GOAL else None,
            "first_visit": first_visit,
            "wall_contact": wall_contact,
        }
        return StepResult(self._observe(), reward, terminated, info)
