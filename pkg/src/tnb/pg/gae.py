"""Generalized advantage estimation over collected rollouts.

Standard GAE(gamma, lambda): delta_t = r_t + gamma*V(s_{t+1})*(1-done)
- V(s_t), advantages accumulate (gamma*lambda)-discounted deltas backward.
Truncated (horizon-cut) episodes bootstrap from the value of the final
observation; terminated ones bootstrap zero. Value targets are A + V.
"""

from dataclasses import dataclass

import numpy as np


@dataclass
class AdvantageBatch:
    advantages: np.ndarray
    value_targets: np.ndarray
    gamma: float
    lam: float


def compute_gae(rollouts, rewards_fn, value_fn, gamma, lam):
    """GAE over a list of rollouts, concatenated in rollout order.

    ``rewards_fn(rollout)`` selects the reward stream; ``value_fn(states)``
    evaluates the stream's value function on a batch of states.
    """
    adv_parts = []
    target_parts = []
    for rollout in rollouts:
        rewards = np.asarray(rewards_fn(rollout), dtype=np.float64)
        values = np.asarray(value_fn(rollout.states), dtype=np.float64)
        bootstrap = 0.0 if rollout.terminated else float(
            value_fn(rollout.final_state[None, :])[0]
        )
        next_values = np.append(values[1:], bootstrap)
        deltas = rewards + gamma * next_values - values
        adv = np.empty_like(deltas)
        acc = 0.0
        for t in range(len(deltas) - 1, -1, -1):
            acc = deltas[t] + gamma * lam * acc
            adv[t] = acc
        adv_parts.append(adv)
        target_parts.append(adv + values)
    advantages = np.concatenate(adv_parts)
    targets = np.concatenate(target_parts)
    return AdvantageBatch(advantages, targets, gamma, lam)


def normalize_advantages(advantages):
    """Zero-mean unit-stddev scaling; exactly-flat batches map to zeros."""
    return (advantages - advantages.mean()) / (advantages.std() + 1e-8)
