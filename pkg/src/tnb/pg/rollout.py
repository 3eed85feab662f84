"""Episode collection with task and novelty reward annotation."""

from dataclasses import dataclass, field

import numpy as np

from ..novelty import annotate_novelty


@dataclass
class Rollout:
    states: np.ndarray          # (T, obs_dim): observations actions were taken at
    actions: np.ndarray         # (T, act_dim)
    log_probs: np.ndarray       # (T,)
    task_rewards: np.ndarray    # (T,)
    novelty_rewards: np.ndarray # (T,)
    terminated: bool            # env termination (not horizon truncation)
    final_state: np.ndarray     # observation after the last step

    @property
    def length(self):
        return self.actions.shape[0]

    @property
    def task_return(self):
        return float(self.task_rewards.sum())

    @property
    def novelty_return(self):
        return float(self.novelty_rewards.sum())


def run_episode(policy, env, rng=None, stochastic=True):
    """One episode up to the horizon; returns (Rollout, last step info).

    Stochastic mode samples from the policy's Gaussian (training);
    deterministic mode takes the mean action (evaluation).
    """
    obs = env.reset()
    states, actions, log_probs, rewards = [], [], [], []
    terminated = False
    info = {}
    for _ in range(env.horizon):
        if stochastic:
            action, logp = policy.sample(obs, rng)
        else:
            action, logp = policy.mean_action(obs), 0.0
        result = env.step(action)
        states.append(obs)
        actions.append(action)
        log_probs.append(logp)
        rewards.append(result.reward)
        obs = result.observation
        info = result.info
        if result.terminated:
            terminated = True
            break
    n = len(actions)
    rollout = Rollout(
        states=np.asarray(states),
        actions=np.asarray(actions),
        log_probs=np.asarray(log_probs),
        task_rewards=np.asarray(rewards),
        novelty_rewards=np.zeros(n),
        terminated=terminated,
        final_state=np.asarray(obs),
    )
    return rollout, info


def collect_rollouts(policy, env, autoencoder_set, steps_budget, rng,
                     segment_config, stochastic=True):
    """Collect whole episodes until at least ``steps_budget`` steps.

    Each rollout carries task rewards from the environment and novelty
    rewards from the autoencoder set (zeros when the set is empty or None).
    """
    rollouts = []
    total = 0
    ae_set = autoencoder_set if autoencoder_set is not None else []
    while total < steps_budget:
        rollout, _ = run_episode(policy, env, rng, stochastic)
        if len(ae_set) > 0:
            annotate_novelty(rollout, ae_set, segment_config)
        rollouts.append(rollout)
        total += rollout.length
    return rollouts
