"""Fixed-length state segments: the unit of autoencoder input.

A segment spans ``length`` steps of a rollout and keeps every ``stride``-th
state, i.e. indices t, t+G, ..., up to t + floor(L/G)*G. Only states enter
segments; actions are ignored. Rollouts shorter than length+1 states yield
no segments.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError


@dataclass
class SegmentConfig:
    length: int = 45          # window span L in steps
    stride: int = 3           # subsample stride G
    w_novel: float = 2.0      # novelty-reward sensitivity
    train_stride: int = 0     # window step for training extraction; 0 = disjoint (= length)

    def __post_init__(self):
        if self.length <= 0 or self.stride <= 0:
            raise ConfigError("segment length and stride must be positive")
        if self.w_novel <= 0:
            raise ConfigError("w_novel must be positive")
        if self.train_stride < 0:
            raise ConfigError("train_stride must be >= 0")

    @property
    def states_per_segment(self):
        return self.length // self.stride + 1

    def segment_dim(self, state_dim):
        return self.states_per_segment * state_dim


def segment_matrix(states, config, window_stride=1):
    """All segments of a single state sequence as rows of a matrix.

    ``states`` has shape (n, state_dim); windows start at
    0, window_stride, 2*window_stride, ... while start + length < n.
    Returns an array of shape (n_segments, segment_dim).
    """
    states = np.asarray(states, dtype=np.float64)
    n = states.shape[0]
    L, G = config.length, config.stride
    starts = range(0, max(0, n - L), window_stride)
    rows = [states[t:t + L + 1:G].reshape(-1) for t in starts]
    if not rows:
        return np.empty((0, config.segment_dim(states.shape[1])))
    return np.stack(rows)


def extract_segments(rollouts, config, training=False):
    """Pool segments from many rollouts, in rollout order then start order.

    ``training`` selects the training window step (disjoint chunks by
    default); otherwise windows slide by 1.
    """
    step = 1
    if training:
        step = config.train_stride if config.train_stride > 0 else config.length
    mats = [segment_matrix(r.states, config, step) for r in rollouts]
    mats = [m for m in mats if m.shape[0] > 0]
    if not mats:
        dim = config.segment_dim(rollouts[0].states.shape[1]) if rollouts else 0
        return np.empty((0, dim))
    return np.concatenate(mats, axis=0)
