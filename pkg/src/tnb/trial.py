"""Trial orchestration: k sequential policies, one autoencoder per policy.

Policy 1 always trains plain (the autoencoder set starts empty). Each
later policy trains against the accumulated set with the configured
combiner, then contributes its own autoencoder built from rollouts of
snapshot policies taken near the end of its training. Novelty-driven
combiners reuse one seed for every policy in the trial so diversity cannot
be attributed to initialization; plain trials give each policy its own
seed.

Run-directory layout: policy_<i>.npz, training_log_<i>.jsonl, ae_set.npz,
metrics.json, trajectories_<i>.csv, resolved_config.yaml, and a FAILED
marker when a policy aborts.
"""

import csv
import json
import sys
from pathlib import Path

import numpy as np

from .config import dump_config
from .envs import make_env
from .errors import TrainingError
from .novelty import (
    extract_segments,
    make_autoencoder_spec,
    save_autoencoder_set,
    train_autoencoder,
)
from .pg import GaussianPolicy, run_episode, train_policy
from .pg.policy import load_policy, save_policy

METRICS_VERSION = 1
TRAJECTORY_CSV_VERSION = 1


def policy_seed(root_seed, index, combiner):
    """Per-policy seed entropy: shared within novelty trials, distinct for plain."""
    if combiner == "plain":
        return [int(root_seed), int(index)]
    return [int(root_seed), 0]


def select_snapshots(snapshots, count):
    """Evenly spaced snapshots over the stored window, end included."""
    if len(snapshots) <= count:
        return list(snapshots)
    idx = np.unique(np.round(np.linspace(0, len(snapshots) - 1, count)).astype(int))
    return [snapshots[i] for i in idx]


def harvest_ae_data(snapshots, env, policy_spec, config, seed):
    """Stochastic rollouts from snapshot policies, chunked into segments."""
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(9,)))
    rollouts = []
    for _, params, log_std in snapshots:
        policy = GaussianPolicy(policy_spec, np.concatenate([params, log_std]))
        for _ in range(config.ae_data.rollouts_per_snapshot):
            rollout, _ = run_episode(policy, env, rng, stochastic=True)
            rollouts.append(rollout)
    return extract_segments(rollouts, config.segment, training=True)


def _policy_success(env_name, rollout, info):
    if env_name == "fourway":
        goal = info.get("goal_index") if rollout.terminated else None
        return goal is not None, goal
    return bool(rollout.terminated), None


def evaluate_policy(policy, env, env_name, episodes):
    """Deterministic evaluation episodes; returns (outcome dict, first rollout)."""
    first = None
    outcome = None
    for _ in range(episodes):
        rollout, info = run_episode(policy, env, rng=None, stochastic=False)
        success, goal = _policy_success(env_name, rollout, info)
        outcome = {
            "success": success,
            "goal_index": goal,
            "task_return": rollout.task_return,
            "episode_length": rollout.length,
        }
        if first is None:
            first = rollout
    return outcome, first


def write_trajectory_csv(path, rollout):
    obs_dim = rollout.states.shape[1]
    act_dim = rollout.actions.shape[1]
    header = (
        ["step"]
        + [f"state_{i}" for i in range(obs_dim)]
        + [f"action_{i}" for i in range(act_dim)]
        + ["task_reward"]
    )
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for t in range(rollout.length):
            writer.writerow(
                [t]
                + [repr(v) for v in rollout.states[t]]
                + [repr(v) for v in rollout.actions[t]]
                + [repr(rollout.task_rewards[t])]
            )


def evaluate_trial(policies, config, out_dir=None):
    """Deterministic per-policy evaluation plus trial-level diversity metrics."""
    env = make_env(config.env.name, config.env.params)
    env_name = config.env.name
    records = []
    for i, policy in enumerate(policies, start=1):
        outcome, rollout = evaluate_policy(policy, env, env_name, config.eval.episodes)
        outcome["index"] = i
        records.append(outcome)
        if out_dir is not None:
            write_trajectory_csv(Path(out_dir) / f"trajectories_{i}.csv", rollout)

    metrics = {
        "format_version": METRICS_VERSION,
        "trajectory_csv_version": TRAJECTORY_CSV_VERSION,
        "env": env_name,
        "combiner": config.trial.combiner,
        "wsr_weight": config.trial.wsr_weight if config.trial.combiner == "wsr" else None,
        "seed": config.trial.seed,
        "k": config.trial.k,
        "eval_episodes": config.eval.episodes,
        "completed_policies": len(policies),
        "policies": records,
        "success_count": sum(1 for r in records if r["success"]),
    }
    if env_name == "fourway":
        arms = [r["goal_index"] for r in records]
        metrics["arm_sequence"] = arms
        metrics["paths_found"] = len({a for a in arms if a is not None})
        # strict in-order: every policy reaches a goal and the sequence is
        # exactly the k best arms in decreasing reward order, no repeats
        metrics["in_order"] = arms == list(range(1, len(policies) + 1))
    else:
        metrics["arm_sequence"] = None
        metrics["paths_found"] = None
        metrics["in_order"] = None
    return metrics


def _write_metrics(out_dir, metrics):
    with open(Path(out_dir) / "metrics.json", "w") as fh:
        json.dump(metrics, fh, indent=2)
        fh.write("\n")


def _write_log(path, records):
    with open(path, "w") as fh:
        for record in records:
            fh.write(json.dumps(record) + "\n")


def run_trial(config, out_dir):
    """Train k policies sequentially; persist everything under ``out_dir``.

    Returns the trial metrics dict. A training abort saves partial outputs
    plus a FAILED marker and re-raises TrainingError.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    dump_config(config, out_dir / "resolved_config.yaml")

    env = make_env(config.env.name, config.env.params)
    combiner = config.trial.combiner
    ae_set = []
    policies = []
    warnings = []

    for i in range(1, config.trial.k + 1):
        seed = policy_seed(config.trial.seed, i - 1, combiner)
        result = train_policy(
            env,
            ae_set,
            combiner,
            config.trial.per_policy_budget,
            config.ppo,
            config.segment,
            seed,
            wsr_weight=config.trial.wsr_weight,
            snapshot_window=config.ae_data.snapshot_window,
        )
        save_policy(
            out_dir / f"policy_{i}.npz",
            result.policy,
            meta={"env": config.env.name, "policy_index": i, "combiner": result.combiner},
        )
        _write_log(out_dir / f"training_log_{i}.jsonl", result.log)
        policies.append(result.policy)

        if result.snapshots:
            chosen = select_snapshots(result.snapshots, config.ae_data.snapshots)
            segments = harvest_ae_data(chosen, env, result.policy.spec, config, seed)
            if segments.shape[0] == 0:
                warnings.append(
                    f"policy {i}: no segments harvested (rollouts shorter than "
                    f"{config.segment.length + 1} states); autoencoder skipped"
                )
                print(f"warning: {warnings[-1]}", file=sys.stderr)
            else:
                spec = make_autoencoder_spec(segments.shape[1], config.autoencoder.hidden)
                ae = train_autoencoder(
                    segments,
                    spec,
                    config.autoencoder.training(),
                    seed=[config.trial.seed, i, 17],
                )
                ae_set.append(ae)
                save_autoencoder_set(out_dir / "ae_set.npz", ae_set)

        if result.aborted:
            metrics = evaluate_trial(policies, config, out_dir)
            metrics["warnings"] = warnings
            metrics["aborted"] = True
            metrics["error"] = result.error
            _write_metrics(out_dir, metrics)
            (out_dir / "FAILED").write_text(result.error + "\n")
            raise TrainingError(f"policy {i} aborted: {result.error}")

    metrics = evaluate_trial(policies, config, out_dir)
    metrics["warnings"] = warnings
    metrics["aborted"] = False
    _write_metrics(out_dir, metrics)
    return metrics


def load_trial_policies(run_dir):
    run_dir = Path(run_dir)
    policies = []
    i = 1
    while (run_dir / f"policy_{i}.npz").exists():
        policies.append(load_policy(run_dir / f"policy_{i}.npz"))
        i += 1
    return policies
