from .combine import (
    combine_bisector,
    combine_projection,
    combine_tnb,
    combine_tnb_noproj,
    combine_wsr,
)
from .gae import AdvantageBatch, compute_gae, normalize_advantages
from .policy import LOG_STD_MAX, LOG_STD_MIN, GaussianPolicy, ValueNet
from .ppo import surrogate_gradient, surrogate_objective
from .rollout import Rollout, collect_rollouts, run_episode
from .train import COMBINERS, PpoConfig, TrainResult, train_policy

__all__ = [
    "GaussianPolicy",
    "ValueNet",
    "LOG_STD_MIN",
    "LOG_STD_MAX",
    "AdvantageBatch",
    "compute_gae",
    "normalize_advantages",
    "surrogate_gradient",
    "surrogate_objective",
    "combine_tnb",
    "combine_tnb_noproj",
    "combine_bisector",
    "combine_projection",
    "combine_wsr",
    "Rollout",
    "run_episode",
    "collect_rollouts",
    "COMBINERS",
    "PpoConfig",
    "TrainResult",
    "train_policy",
]
