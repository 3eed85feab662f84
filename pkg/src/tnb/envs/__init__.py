"""Benchmark environments behind one episodic interface."""

import dataclasses

from ..errors import ConfigError
from .base import Environment, StepResult
from .dmaze import DeceptiveMaze, DMazeConfig
from .fourway import FourwayConfig, FourWayMaze
from .reacher import PlanarReacher, ReacherConfig

REGISTRY = {
    "fourway": (FourwayConfig, FourWayMaze),
    "dmaze": (DMazeConfig, DeceptiveMaze),
    "reacher": (ReacherConfig, PlanarReacher),
}


def make_env(name, params=None):
    """Build an environment by registry name, validating config keys."""
    if name not in REGISTRY:
        raise ConfigError(f"unknown environment {name!r}; choices: {sorted(REGISTRY)}")
    config_cls, env_cls = REGISTRY[name]
    params = dict(params or {})
    known = {f.name for f in dataclasses.fields(config_cls)}
    unknown = set(params) - known
    if unknown:
        raise ConfigError(
            f"unknown {name} config keys: {sorted(unknown)}"
        )
    # lists from YAML stand in for tuples
    coerced = {
        k: tuple(tuple(x) if isinstance(x, list) else x for x in v) if isinstance(v, list) else v
        for k, v in params.items()
    }
    return env_cls(config_cls(**coerced))


__all__ = [
    "Environment",
    "StepResult",
    "FourWayMaze",
    "FourwayConfig",
    "DeceptiveMaze",
    "DMazeConfig",
    "PlanarReacher",
    "ReacherConfig",
    "make_env",
    "REGISTRY",
]
