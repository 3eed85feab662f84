"""Command-line front end.

Subcommands: ``run`` (one trial from a config), ``eval`` (re-score a run
directory), ``compare`` (summary table over run directories), and
``sweep-wsr`` (one trial per novelty weight). Exit codes: 0 success,
1 validation failure, 2 runtime failure.
"""

import argparse
import json
import sys
from pathlib import Path

from .compare import aggregate, format_table
from .config import apply_overrides, from_dict, load_config, to_dict
from .errors import ConfigError
from .trial import evaluate_trial, load_trial_policies, run_trial


def _prepare_out_dir(path, force):
    out = Path(path)
    if out.exists() and any(out.iterdir()) and not force:
        raise ConfigError(
            f"output directory {out} is not empty; pass --force to reuse it"
        )
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_run(args):
    config = load_config(args.config, args.override)
    out = args.out or config.output.dir
    if not out:
        raise ConfigError("no output directory: pass --out or set output.dir")
    out = _prepare_out_dir(out, args.force)
    metrics = run_trial(config, out)
    print(f"trial complete: {metrics['completed_policies']} policies -> {out}")
    print(json.dumps({k: metrics[k] for k in ("env", "combiner", "seed", "paths_found",
                                              "in_order", "success_count")}))
    return 0


def cmd_eval(args):
    run_dir = Path(args.run_dir)
    config_path = run_dir / "resolved_config.yaml"
    if not config_path.exists():
        raise ConfigError(f"{run_dir} has no resolved_config.yaml")
    config = load_config(config_path)
    if args.episodes is not None:
        if args.episodes <= 0:
            raise ConfigError("--episodes must be positive")
        config.eval.episodes = args.episodes
    policies = load_trial_policies(run_dir)
    if not policies:
        raise ConfigError(f"{run_dir} contains no policy files")
    metrics = evaluate_trial(policies, config, run_dir)
    metrics["warnings"] = []
    metrics["aborted"] = (run_dir / "FAILED").exists()
    with open(run_dir / "metrics.json", "w") as fh:
        json.dump(metrics, fh, indent=2)
        fh.write("\n")
    print(json.dumps(metrics, indent=2))
    return 0


def _load_metrics(run_dirs):
    out = []
    for d in run_dirs:
        path = Path(d) / "metrics.json"
        try:
            with open(path) as fh:
                out.append(json.load(fh))
        except (OSError, json.JSONDecodeError) as exc:
            print(f"warning: skipping {d}: {exc}", file=sys.stderr)
    return out


def cmd_compare(args):
    summary = aggregate(_load_metrics(args.run_dirs))
    print(format_table(summary), end="")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(summary, fh, indent=2)
            fh.write("\n")
    return 0


def cmd_sweep_wsr(args):
    if any(w <= 0 for w in args.weights):
        raise ConfigError("sweep weights must be positive")
    config = load_config(args.config, args.override)
    base = Path(args.out or config.output.dir or "")
    if str(base) in ("", "."):
        raise ConfigError("no output directory: pass --out or set output.dir")
    metrics_list = []
    for weight in args.weights:
        doc = to_dict(config)
        doc = apply_overrides(doc, [f"trial.combiner=wsr", f"trial.wsr_weight={weight}"])
        run_config = from_dict(doc)
        out = _prepare_out_dir(base / f"w{weight:g}", args.force)
        metrics_list.append(run_trial(run_config, out))
    summary = aggregate(metrics_list)
    print(format_table(summary), end="")
    base.mkdir(parents=True, exist_ok=True)
    with open(base / "sweep_summary.json", "w") as fh:
        json.dump(summary, fh, indent=2)
        fh.write("\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tnb",
        description="Train and compare sets of distinct policies for one task.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one trial from a config file")
    p_run.add_argument("--config", required=True)
    p_run.add_argument("--override", action="append", default=[],
                       metavar="KEY=VALUE", help="override a config field (repeatable)")
    p_run.add_argument("--out", default=None, help="output directory")
    p_run.add_argument("--force", action="store_true",
                       help="allow writing into a non-empty directory")
    p_run.set_defaults(func=cmd_run)

    p_eval = sub.add_parser("eval", help="re-evaluate a finished run directory")
    p_eval.add_argument("run_dir")
    p_eval.add_argument("--episodes", type=int, default=None)
    p_eval.set_defaults(func=cmd_eval)

    p_cmp = sub.add_parser("compare", help="summarize metrics across run directories")
    p_cmp.add_argument("run_dirs", nargs="*")
    p_cmp.add_argument("--json", default=None, help="also write the summary as JSON")
    p_cmp.set_defaults(func=cmd_compare)

    p_sweep = sub.add_parser("sweep-wsr", help="run one wsr trial per novelty weight")
    p_sweep.add_argument("--config", required=True)
    p_sweep.add_argument("--weights", type=float, nargs="+", required=True)
    p_sweep.add_argument("--override", action="append", default=[], metavar="KEY=VALUE")
    p_sweep.add_argument("--out", default=None)
    p_sweep.add_argument("--force", action="store_true")
    p_sweep.set_defaults(func=cmd_sweep_wsr)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - runtime failures exit 2
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
