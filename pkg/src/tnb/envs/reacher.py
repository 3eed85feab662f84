"""Planar torque-controlled reacher.

A two-link arm (point mass at each link end, no gravity) drives its tip to
a fixed target. Joint dynamics are deliberately decoupled: each joint
integrates ``acc_j = (torque_j - damping * vel_j) / inertia_j`` with
``inertia_j = mass_j * length_j**2``, a declared simplification that keeps
the task continuous and multi-solution without a physics engine. Reward is
negative tip-target distance minus a scaled sum of squared torques; coming
within ``touch_radius`` adds ``terminal_bonus`` and ends the episode.

Observation: (sin, cos of each joint angle, joint velocities, target - tip).
"""

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError
from .base import Environment, StepResult


@dataclass
class ReacherConfig:
    link_lengths: tuple = (1.0, 1.0)
    link_masses: tuple = (1.0, 1.0)
    target: tuple = (0.8, 1.1)
    rest_angles: tuple = (0.0, 0.0)
    torque_limit: float = 1.0
    torque_cost_weight: float = 0.01
    touch_radius: float = 0.15
    terminal_bonus: float = 100.0
    damping: float = 0.1
    dt: float = 0.05
    horizon: int = 500

    def __post_init__(self):
        self.link_lengths = tuple(float(v) for v in self.link_lengths)
        self.link_masses = tuple(float(v) for v in self.link_masses)
        self.target = tuple(float(v) for v in self.target)
        self.rest_angles = tuple(float(v) for v in self.rest_angles)
        if len(self.link_masses) != len(self.link_lengths):
            raise ConfigError("link_masses must match link_lengths")
        if len(self.rest_angles) != len(self.link_lengths):
            raise ConfigError("rest_angles must match link_lengths")
        if any(l <= 0 for l in self.link_lengths):
            raise ConfigError("link lengths must be positive")
        if np.linalg.norm(self.target) > sum(self.link_lengths):
            raise ConfigError("target lies outside the arm's reach")
        if self.horizon <= 0:
            raise ConfigError("horizon must be positive")


def forward_kinematics(angles, link_lengths):
    """Tip position of a planar chain; angle j is relative to link j-1."""
    x = y = 0.0
    total = 0.0
    for theta, length in zip(angles, link_lengths):
        total += theta
        x += length * np.cos(total)
        y += length * np.sin(total)
    return np.array([x, y])


class PlanarReacher(Environment):
    def __init__(self, config=None):
        super().__init__()
        self.config = config or ReacherConfig()
        self.n_joints = len(self.config.link_lengths)
        self.observation_dim = 3 * self.n_joints + 2
        self.action_dim = self.n_joints
        self.horizon = self.config.horizon
        self._target = np.asarray(self.config.target)
        self._inertia = np.array([
            m * l * l for m, l in zip(self.config.link_masses, self.config.link_lengths)
        ])
        self._angles = np.zeros(self.n_joints)
        self._vels = np.zeros(self.n_joints)
        self._steps = 0

    def reset(self, seed=None):
        self._angles = np.asarray(self.config.rest_angles, dtype=np.float64).copy()
        self._vels = np.zeros(self.n_joints)
        self._steps = 0
        self._terminated = False
        return self._observe()

    def tip_position(self):
        return forward_kinematics(self._angles, self.config.link_lengths)

    def _observe(self):
        tip = self.tip_position()
        return np.concatenate([
            np.sin(self._angles),
            np.cos(self._angles),
            self._vels,
            self._target - tip,
        ])

    def step(self, action):
        self._require_active()
        cfg = self.config
        torques = np.clip(self._check_action(action), -cfg.torque_limit, cfg.torque_limit)
        acc = (torques - cfg.damping * self._vels) / self._inertia
        self._vels += acc * cfg.dt
        self._angles += self._vels * cfg.dt

        tip = self.tip_position()
        dist = float(np.linalg.norm(tip - self._target))
        reward = -dist - cfg.torque_cost_weight * float(np.sum(torques ** 2))
        terminated = dist < cfg.touch_radius
        if terminated:
            reward += cfg.terminal_bonus
        self._steps += 1
        self._terminated = terminated
        info = {"distance": dist, "touched": terminated, "tip": tip}
        return StepResult(self._observe(), reward, terminated, info)
