"""Clipped-surrogate policy gradient for one advantage stream.

The surrogate is mean(min(ratio * A, clip(ratio, 1 +- eps) * A)) with
ratio = exp(logp_new - logp_old); no entropy term. ``surrogate_gradient``
returns the exact ascent gradient of that objective with respect to the
policy's flat parameter vector; ``surrogate_objective`` evaluates the
objective itself so tests can difference it.
"""

import numpy as np

from ..nn import backward, forward_cached
from .policy import _LOG_2PI


def _forward_stats(policy, obs, actions):
    mu, cache = forward_cached(policy.spec, policy.params, obs)
    inv_var = np.exp(-2.0 * policy.log_std)
    diff = actions - mu
    logp = (
        -0.5 * np.einsum("ij,ij->i", diff * diff, np.broadcast_to(inv_var, diff.shape))
        - policy.log_std.sum()
        - 0.5 * policy.action_dim * _LOG_2PI
    )
    return mu, cache, diff, inv_var, logp


def surrogate_objective(policy, obs, actions, old_log_probs, advantages, clip):
    _, _, _, _, logp = _forward_stats(policy, obs, actions)
    ratio = np.exp(logp - old_log_probs)
    clipped = np.clip(ratio, 1.0 - clip, 1.0 + clip)
    return float(np.mean(np.minimum(ratio * advantages, clipped * advantages)))


def surrogate_gradient(policy, obs, actions, old_log_probs, advantages, clip):
    """Ascent gradient of the clipped surrogate, shaped like policy.flat.

    The gradient of min(r*A, clip(r)*A) w.r.t. r is A wherever the
    unclipped branch is active: for A > 0 while r < 1+eps, for A < 0 while
    r > 1-eps; zero otherwise.
    """
    _, cache, diff, inv_var, logp = _forward_stats(policy, obs, actions)
    n = obs.shape[0]
    ratio = np.exp(logp - old_log_probs)
    active = np.where(advantages > 0, ratio < 1.0 + clip, ratio > 1.0 - clip)
    coef = advantages * ratio * active / n  # d(surrogate)/d(logp) per sample

    # d(logp)/d(mu) = (a - mu) / sigma^2
    gmu = coef[:, None] * diff * inv_var
    grad_mlp, _ = backward(policy.spec, policy.params, cache, gmu)
    # d(logp)/d(log_std_j) = ((a_j - mu_j)/sigma_j)^2 - 1
    glog_std = coef @ (diff * diff * inv_var - 1.0)
    return np.concatenate([grad_mlp, glog_std])
