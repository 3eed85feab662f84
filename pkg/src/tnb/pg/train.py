"""Policy training: PPO iterations with pluggable objective combination.

Per iteration: collect whole episodes to the step budget, annotate novelty
rewards, estimate per-stream advantages with GAE, then run several epochs
of minibatch updates. Dual-stream combiners (tnb, tnb_noproj) compute a
clipped-surrogate ascent gradient per stream for every minibatch and merge
them; wsr folds novelty into the rewards up front; plain ignores novelty.
An empty autoencoder set always degrades to plain, so a first policy
trains identically under every combiner.
"""

import time
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError, TrainingError
from ..nn import AdamState, adam_step, backward, forward_cached
from .combine import combine_bisector, combine_tnb, combine_wsr
from .gae import compute_gae, normalize_advantages
from .policy import GaussianPolicy, ValueNet
from .rollout import collect_rollouts

COMBINERS = ("plain", "wsr", "tnb", "tnb_noproj")


@dataclass
class PpoConfig:
    steps_per_iteration: int = 2000
    epochs: int = 3
    minibatch_size: int = 64
    policy_lr: float = 3e-3
    value_lr: float = 3e-3
    clip: float = 0.2
    gamma: float = 0.99
    lam: float = 0.95
    normalize_advantages: bool = True
    log_std_init: float = 0.0
    hidden: tuple = (64, 64, 64)
    update_rule: str = "adam"  # "sgd" applies plain theta += lr * g to the policy

    def __post_init__(self):
        if self.update_rule not in ("adam", "sgd"):
            raise ConfigError(f"unknown update_rule {self.update_rule!r}")
        self.hidden = tuple(self.hidden)


@dataclass
class TrainResult:
    policy: GaussianPolicy
    log: list
    snapshots: list               # (iteration, mean-net params, log_std) from the last window
    combiner: str
    aborted: bool = False
    error: str = None


def _rng(seed, key):
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(key,)))


def _value_step(net, opt, states, targets):
    out, cache = forward_cached(net.spec, net.params, states)
    diff = out[:, 0] - targets
    gout = (2.0 / diff.size) * diff[:, None]
    grad, _ = backward(net.spec, net.params, cache, gout)
    adam_step(opt, net.params, grad)


def train_policy(env, autoencoder_set, combiner, budget, ppo, segment_config,
                 seed, wsr_weight=100.0, snapshot_window=50):
    """Train one policy; returns a TrainResult (aborted=True on NaN failure)."""
    if combiner not in COMBINERS:
        raise ConfigError(f"unknown combiner {combiner!r}; choices: {COMBINERS}")
    if budget <= 0:
        raise ConfigError("training budget must be positive")

    ae_set = autoencoder_set or []
    mode = "plain" if len(ae_set) == 0 else combiner
    dual = mode in ("tnb", "tnb_noproj")

    policy = GaussianPolicy.create(
        env.observation_dim, env.action_dim, ppo.hidden, ppo.log_std_init, _rng(seed, 0)
    )
    v_task = ValueNet.create(env.observation_dim, ppo.hidden, _rng(seed, 1))
    v_novel = ValueNet.create(env.observation_dim, ppo.hidden, _rng(seed, 2)) if dual else None
    rng_roll = _rng(seed, 3)
    rng_shuffle = _rng(seed, 4)

    policy_opt = AdamState.init(policy.n_params, ppo.policy_lr)
    vtask_opt = AdamState.init(v_task.params.size, ppo.value_lr)
    vnovel_opt = AdamState.init(v_novel.params.size, ppo.value_lr) if dual else None

    log = []
    snapshots = deque(maxlen=snapshot_window)
    steps_done = 0
    iteration = 0
    try:
        while steps_done < budget:
            iteration += 1
            t0 = time.perf_counter()
            rollouts = collect_rollouts(
                policy, env, ae_set if mode != "plain" else None,
                ppo.steps_per_iteration, rng_roll, segment_config,
            )
            steps_done += sum(r.length for r in rollouts)

            obs = np.concatenate([r.states for r in rollouts])
            actions = np.concatenate([r.actions for r in rollouts])
            old_logp = np.concatenate([r.log_probs for r in rollouts])
            n = obs.shape[0]

            if mode == "wsr":
                batch = compute_gae(
                    rollouts,
                    lambda r: combine_wsr(r.task_rewards, r.novelty_rewards, wsr_weight),
                    v_task.predict, ppo.gamma, ppo.lam,
                )
                streams = [(batch, v_task, vtask_opt)]
            else:
                batch_task = compute_gae(
                    rollouts, lambda r: r.task_rewards, v_task.predict, ppo.gamma, ppo.lam
                )
                streams = [(batch_task, v_task, vtask_opt)]
                if dual:
                    batch_novel = compute_gae(
                        rollouts, lambda r: r.novelty_rewards, v_novel.predict,
                        ppo.gamma, ppo.lam,
                    )
                    streams.append((batch_novel, v_novel, vnovel_opt))

            advantages = [
                normalize_advantages(b.advantages) if ppo.normalize_advantages
                else b.advantages
                for b, _, _ in streams
            ]

            bisector_steps = 0
            projection_steps = 0
            for _ in range(ppo.epochs):
                order = rng_shuffle.permutation(n)
                for lo in range(0, n, ppo.minibatch_size):
                    idx = order[lo:lo + ppo.minibatch_size]
                    grads = [
                        _surrogate(policy, obs[idx], actions[idx], old_logp[idx],
                                   adv[idx], ppo.clip)
                        for adv in advantages
                    ]
                    if dual:
                        g_task, g_novel = grads
                        if mode == "tnb":
                            if g_task @ g_novel > 0.0:
                                bisector_steps += 1
                            else:
                                projection_steps += 1
                            g_final = combine_tnb(g_task, g_novel)
                        else:
                            bisector_steps += 1
                            g_final = combine_bisector(g_task, g_novel)
                    else:
                        g_final = grads[0]

                    if ppo.update_rule == "adam":
                        adam_step(policy_opt, policy.flat, g_final, maximize=True)
                    else:
                        policy.flat += ppo.policy_lr * g_final
                    policy.clamp_log_std()

                    for (batch, net, opt) in streams:
                        _value_step(net, opt, obs[idx], batch.value_targets[idx])

            if not np.all(np.isfinite(policy.flat)):
                raise TrainingError(f"non-finite policy parameters at iteration {iteration}")
            for _, net, _ in streams:
                if not np.all(np.isfinite(net.params)):
                    raise TrainingError(f"non-finite value parameters at iteration {iteration}")

            snapshots.append((iteration, policy.params.copy(), policy.log_std.copy()))
            log.append({
                "iteration": iteration,
                "env_steps": steps_done,
                "episodes": len(rollouts),
                "mean_task_return": float(np.mean([r.task_return for r in rollouts])),
                "mean_novelty_return": float(np.mean([r.novelty_return for r in rollouts])),
                "mean_episode_length": float(np.mean([r.length for r in rollouts])),
                "bisector_steps": bisector_steps,
                "projection_steps": projection_steps,
                "wallclock_s": time.perf_counter() - t0,
            })
    except TrainingError as exc:
        return TrainResult(policy, log, list(snapshots), mode, aborted=True, error=str(exc))
    return TrainResult(policy, log, list(snapshots), mode)


def _surrogate(policy, obs, actions, old_logp, advantages, clip):
    from .ppo import surrogate_gradient

    return surrogate_gradient(policy, obs, actions, old_logp, advantages, clip)
