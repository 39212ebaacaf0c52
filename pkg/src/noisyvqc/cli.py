"""Command-line driver: single runs, noise sweeps, and summaries.

Subcommands:

* ``run``       -- train one (channel, probability, seed) configuration
                   and write its per-run CSV.
* ``sweep``     -- run the full grid (plus noise-free baselines), write
                   per-run CSVs, results.csv, curve SVGs, and summary.csv.
* ``summarize`` -- recompute summary.csv from an existing results.csv.

All stochastic behavior is pinned by the seed flags, so repeating an
invocation reproduces its output files byte for byte.
"""

from __future__ import annotations

import argparse
import os
import sys

from .channels import NOISY_KINDS, ChannelKind
from .sweep import (
    DEFAULT_LAYERS,
    DEFAULT_PROBABILITIES,
    DEFAULT_SEEDS,
    SweepConfig,
    execute_run,
    format_summary_table,
    read_results_csv,
    run_filename,
    summarize,
    write_run_csv,
    write_summary_csv,
    write_sweep_outputs,
)
from .training import (
    DEFAULT_BATCH_SIZE,
    DEFAULT_LEARNING_RATE,
    DEFAULT_MOMENTUM,
    DEFAULT_STEPS,
)

_CHANNEL_VALUES = [k.value for k in ChannelKind]
_NOISY_VALUES = [k.value for k in NOISY_KINDS]


def _add_training_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--steps", type=int, default=DEFAULT_STEPS, help="optimizer steps per run")
    parser.add_argument("--batch", type=int, default=DEFAULT_BATCH_SIZE, help="samples per step")
    parser.add_argument("--layers", type=int, default=DEFAULT_LAYERS, help="variational layers")
    parser.add_argument("--lr", type=float, default=DEFAULT_LEARNING_RATE, help="learning rate")
    parser.add_argument("--momentum", type=float, default=DEFAULT_MOMENTUM, help="momentum coefficient")
    parser.add_argument("--data", metavar="PATH", default=None, help="Iris CSV path (default: embedded copy)")
    parser.add_argument("--out", metavar="DIR", default="results", help="output directory")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noisyvqc",
        description="Train two-qubit variational classifiers under Kraus noise channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="train one configuration and write its CSV")
    run_p.add_argument("--channel", required=True, choices=_CHANNEL_VALUES, help="noise channel")
    run_p.add_argument("--prob", type=float, default=0.0, help="channel probability in [0, 1]")
    run_p.add_argument("--seed", type=int, default=1, help="run seed")
    _add_training_flags(run_p)

    sweep_p = sub.add_parser("sweep", help="run the noise grid plus noise-free baselines")
    sweep_p.add_argument(
        "--channels", nargs="+", choices=_NOISY_VALUES, default=_NOISY_VALUES,
        help="noise channels to sweep",
    )
    sweep_p.add_argument(
        "--probs", nargs="+", type=float, default=list(DEFAULT_PROBABILITIES),
        help="channel probabilities to sweep",
    )
    sweep_p.add_argument(
        "--seeds", nargs="+", type=int, default=list(DEFAULT_SEEDS), help="run seeds"
    )
    sweep_p.add_argument("--workers", type=int, default=None, help="parallel worker processes")
    _add_training_flags(sweep_p)

    sum_p = sub.add_parser("summarize", help="recompute summary.csv from results.csv")
    sum_p.add_argument("--out", metavar="DIR", default="results", help="directory holding results.csv")
    return parser


def _check_probability(parser: argparse.ArgumentParser, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        parser.error(f"probability {value} outside [0, 1]")


def _cmd_run(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _check_probability(parser, args.prob)
    channel = ChannelKind(args.channel)
    record = execute_run(
        channel,
        args.prob,
        args.seed,
        steps=args.steps,
        batch_size=args.batch,
        n_layers=args.layers,
        learning_rate=args.lr,
        momentum=args.momentum,
        data_path=args.data,
    )
    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, run_filename(channel, args.prob, args.seed))
    write_run_csv(path, record)
    final = record.final_val_accuracy() if record.steps else float("nan")
    print(f"wrote {path} ({len(record.steps)} steps, final val acc {final:.3f})")
    return 0


def _cmd_sweep(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    for p in args.probs:
        _check_probability(parser, p)
    config = SweepConfig(
        channels=tuple(ChannelKind(c) for c in args.channels),
        probabilities=tuple(args.probs),
        seeds=tuple(args.seeds),
        steps=args.steps,
        batch_size=args.batch,
        n_layers=args.layers,
        learning_rate=args.lr,
        momentum=args.momentum,
        data_path=args.data,
        out_dir=args.out,
        workers=args.workers,
    )

    def progress(record, done, total):
        print(
            f"[{done}/{total}] {record.channel.value} p={record.probability:g} "
            f"seed={record.seed} final val acc {record.final_val_accuracy():.3f}",
            file=sys.stderr,
        )

    from .sweep import run_sweep  # local import keeps module import light

    records = run_sweep(config, progress=progress)
    cells = write_sweep_outputs(records, config.out_dir)
    print(f"wrote {len(records)} runs, results.csv, summary.csv, and SVGs to {config.out_dir}")
    print(format_summary_table(cells))
    return 0


def _cmd_summarize(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    results_path = os.path.join(args.out, "results.csv")
    if not os.path.exists(results_path):
        parser.error(f"no results.csv found in {args.out}")
    records = read_results_csv(results_path)
    cells = summarize(records)
    write_summary_csv(os.path.join(args.out, "summary.csv"), cells)
    print(format_summary_table(cells))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "run":
        return _cmd_run(parser, args)
    if args.command == "sweep":
        return _cmd_sweep(parser, args)
    return _cmd_summarize(parser, args)


if __name__ == "__main__":
    raise SystemExit(main())
