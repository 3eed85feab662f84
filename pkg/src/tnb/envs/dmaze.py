"""Deceptive Maze: a continuous world where greedy distance descent fails.

The point mass starts inside a three-walled box whose opening faces away
from the goal. Reward each step is ``-distance_weight * |pos - goal|``
plus an alive penalty; reaching the goal within ``goal_radius`` adds
``goal_bonus`` and terminates. Following the distance gradient runs the
agent into the closed wall between start and goal, so solving the task
requires first moving away from the goal.
"""

from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError
from .base import Environment, StepResult

# axis-aligned wall rectangles (x0, y0, x1, y1): a box open toward -y
DEFAULT_WALLS = (
    (3.0, 6.5, 7.0, 7.0),   # top wall, between start and goal
    (3.0, 4.0, 3.5, 6.5),   # left wall
    (6.5, 4.0, 7.0, 6.5),   # right wall
)


@dataclass
class DMazeConfig:
    world_width: float = 10.0
    world_height: float = 10.0
    start: tuple = (5.0, 5.5)
    goal: tuple = (5.0, 8.5)
    goal_radius: float = 0.5
    goal_bonus: float = 500.0
    distance_weight: float = 0.1
    alive_penalty: float = -1.0
    walls: tuple = DEFAULT_WALLS
    dt: float = 0.1
    mass: float = 1.0
    force_limit: float = 1.0
    velocity_limit: float = 2.0
    horizon: int = 500

    def __post_init__(self):
        if self.goal_radius <= 0:
            raise ConfigError("goal_radius must be positive")
        if self.horizon <= 0:
            raise ConfigError("horizon must be positive")
        self.start = tuple(float(v) for v in self.start)
        self.goal = tuple(float(v) for v in self.goal)
        self.walls = tuple(tuple(float(v) for v in w) for w in self.walls)
        for w in self.walls:
            if len(w) != 4 or w[0] >= w[2] or w[1] >= w[3]:
                raise ConfigError(f"bad wall rectangle {w}")


class DeceptiveMaze(Environment):
    observation_dim = 4
    action_dim = 2

    def __init__(self, config=None):
        super().__init__()
        self.config = config or DMazeConfig()
        self.horizon = self.config.horizon
        self._goal = np.asarray(self.config.goal)
        self._pos = np.zeros(2)
        self._vel = np.zeros(2)
        self._steps = 0

    def reset(self, seed=None):
        self._pos = np.asarray(self.config.start, dtype=np.float64).copy()
        self._vel = np.zeros(2)
        self._steps = 0
        self._terminated = False
        return self._observe()

    def _observe(self):
        return np.array([self._pos[0], self._pos[1], self._vel[0], self._vel[1]])

    def _blocked(self, x, y):
        if not (0.0 <= x <= self.config.world_width and 0.0 <= y <= self.config.world_height):
            return True
        for x0, y0, x1, y1 in self.config.walls:
            if x0 <= x <= x1 and y0 <= y <= y1:
                return True
        return False

    def step(self, action):
        self._require_active()
        cfg = self.config
        force = np.clip(self._check_action(action), -cfg.force_limit, cfg.force_limit)
        self._vel += force / cfg.mass * cfg.dt
        speed = float(np.linalg.norm(self._vel))
        if speed > cfg.velocity_limit:
            self._vel *= cfg.velocity_limit / speed

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

        dist = float(np.linalg.norm(self._pos - self._goal))
        reward = -cfg.distance_weight * dist + cfg.alive_penalty
        terminated = dist < cfg.goal_radius
        if terminated:
            reward += cfg.goal_bonus
        self._steps += 1
        self._terminated = terminated
        info = {
            "distance": dist,
            "reached_goal": terminated,
            "wall_contact": wall_contact,
        }
        return StepResult(self._observe(), reward, terminated, info)
