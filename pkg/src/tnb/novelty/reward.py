"""Novelty reward: negated exponential of the best reconstruction.

``r = -exp(-w * min_over_autoencoders(error))`` maps reconstruction error
to (-1, 0]: perfectly familiar segments score -1, unrecognizable ones
approach 0. An empty autoencoder set (first policy) scores 0 everywhere.
"""

import numpy as np

from ..errors import ConfigError


def min_reconstruction_errors(segments, autoencoder_set):
    segments = np.atleast_2d(np.asarray(segments, dtype=np.float64))
    for ae in autoencoder_set:
        if ae.input_dim != segments.shape[1]:
            raise ConfigError(
                f"segment dimension {segments.shape[1]} does not match "
                f"autoencoder input {ae.input_dim}"
            )
    errors = np.stack([ae.reconstruction_errors(segments) for ae in autoencoder_set])
    return errors.min(axis=0)


def novelty_rewards(segments, autoencoder_set, config):
    """Batch novelty rewards for segment rows; empty set gives zeros."""
    segments = np.atleast_2d(np.asarray(segments, dtype=np.float64))
    if len(autoencoder_set) == 0:
        return np.zeros(segments.shape[0])
    err = min_reconstruction_errors(segments, autoencoder_set)
    return -np.exp(-config.w_novel * err)


def novelty_reward(segment, autoencoder_set, config):
    """Single-segment form of ``novelty_rewards``."""
    return float(novelty_rewards(segment, autoencoder_set, config)[0])


def annotate_novelty(rollout, autoencoder_set, config):
    """Fill a rollout's novelty-reward stream in place and return it.

    Step t >= length gets the reward of the segment ending at t (states
    t-length..t, subsampled); earlier steps carry no history and get 0, as
    does everything when the set is empty.
    """
    states = rollout.states
    n = states.shape[0]
    L = config.length
    rewards = np.zeros(n)
    if len(autoencoder_set) > 0 and n > L:
        rows = np.stack([
            states[t - L:t + 1:config.stride].reshape(-1) for t in range(L, n)
        ])
        rewards[L:] = novelty_rewards(rows, autoencoder_set, config)
    rollout.novelty_rewards = rewards
    return rollout
