"""Adam on flat parameter vectors."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import TrainingError


@dataclass
class AdamState:
    m: np.ndarray
    v: np.ndarray
    learning_rate: float
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8
    step_count: int = 0

    @classmethod
    def init(cls, n_params, learning_rate, beta1=0.9, beta2=0.999, epsilon=1e-8):
        return cls(
            m=np.zeros(n_params),
            v=np.zeros(n_params),
            learning_rate=learning_rate,
            beta1=beta1,
            beta2=beta2,
            epsilon=epsilon,
        )


def adam_step(state, params, gradient, maximize=False):
    """One bias-corrected Adam update; mutates ``state`` and ``params``.

    ``maximize`` negates the gradient internally, so RL callers pass ascent
    directions and loss-minimizing callers pass raw loss gradients. A
    non-finite gradient rejects the update before any state change.
    """
    gradient = np.asarray(gradient, dtype=np.float64)
    if gradient.shape != params.shape:
        raise TrainingError(
            f"gradient length {gradient.shape} != parameter length {params.shape}"
        )
    if not np.all(np.isfinite(gradient)):
        bad = int(np.count_nonzero(~np.isfinite(gradient)))
        raise TrainingError(f"update rejected: {bad} non-finite gradient components")

    g = -gradient if maximize else gradient
    state.step_count += 1
    state.m *= state.beta1
    state.m += (1.0 - state.beta1) * g
    state.v *= state.beta2
    state.v += (1.0 - state.beta2) * g * g
    m_hat = state.m / (1.0 - state.beta1 ** state.step_count)
    v_hat = state.v / (1.0 - state.beta2 ** state.step_count)
    params -= state.learning_rate * m_hat / (np.sqrt(v_hat) + state.epsilon)
    return params, state
