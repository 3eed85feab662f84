"""Aggregate per-trial metrics into method-comparison summaries.

Groups trials by environment and method, reporting the trial-diversity
criteria: mean paths found and in-order count for the four-arm maze, mean
successful policies and successful-trial count for goal tasks.
"""

COMPARISON_VERSION = 1


def method_label(metrics):
    combiner = metrics.get("combiner", "?")
    if combiner == "wsr" and metrics.get("wsr_weight") is not None:
        return f"wsr(w={metrics['wsr_weight']:g})"
    return combiner


def aggregate(metrics_list):
    groups = {}
    for metrics in metrics_list:
        env = metrics.get("env", "?")
        label = method_label(metrics)
        groups.setdefault(env, {}).setdefault(label, []).append(metrics)

    out = {"format_version": COMPARISON_VERSION, "groups": []}
    for env in sorted(groups):
        rows = []
        for label in sorted(groups[env]):
            trials = groups[env][label]
            n = len(trials)
            paths = [t["paths_found"] for t in trials if t.get("paths_found") is not None]
            row = {
                "method": label,
                "trials": n,
                "avg_paths_found": sum(paths) / len(paths) if paths else None,
                "in_order_trials": sum(1 for t in trials if t.get("in_order")),
                "avg_successes": sum(t.get("success_count", 0) for t in trials) / n,
                "successful_trials": sum(
                    1 for t in trials if t.get("success_count", 0) > 0
                ),
            }
            rows.append(row)
        out["groups"].append({"env": env, "rows": rows})
    return out


def format_table(summary):
    lines = []
    for group in summary["groups"]:
        lines.append(f"environment: {group['env']}")
        header = (
            f"{'method':<16}{'trials':>8}{'avg paths':>12}{'in order':>10}"
            f"{'avg succ':>10}{'succ trials':>13}"
        )
        lines.append(header)
        lines.append("-" * len(header))
        for row in group["rows"]:
            paths = "-" if row["avg_paths_found"] is None else f"{row['avg_paths_found']:.2f}"
            lines.append(
                f"{row['method']:<16}{row['trials']:>8}{paths:>12}"
                f"{row['in_order_trials']:>7}/{row['trials']}"
                f"{row['avg_successes']:>10.2f}"
                f"{row['successful_trials']:>10}/{row['trials']}"
            )
        lines.append("")
    return "\n".join(lines).rstrip("\n") + ("\n" if summary["groups"] else "")
