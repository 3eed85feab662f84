"""Common episodic-environment interface."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import UsageError


@dataclass
class StepResult:
    observation: np.ndarray
    reward: float
    terminated: bool
    info: dict = field(default_factory=dict)


class Environment:
    """Deterministic episodic environment with a fixed start state.

    Subclasses define observation_dim, action_dim, horizon, and the
    dynamics. ``step`` after termination is a usage error; ``reset``
    clears all per-episode state.
    """

    observation_dim = 0
    action_dim = 0

    def __init__(self):
        self._terminated = True  # force reset before first step

    def reset(self, seed=None):
        raise NotImplementedError

    def step(self, action):
        raise NotImplementedError

    def _require_active(self):
        if self._terminated:
            raise UsageError("episode is terminated; call reset() before step()")

    def _check_action(self, action):
        action = np.asarray(action, dtype=np.float64)
        if action.shape != (self.action_dim,):
            raise UsageError(
                f"action shape {action.shape} != ({self.action_dim},)"
            )
        return action
