"""A reduced noise sweep with the learnability summary.

Sweeps two channels over three strengths with two seeds each (14 runs,
well under a minute) and prints the trainability verdicts.  The full
study is the CLI's default grid:

    noisyvqc sweep --out results

which covers 5 channels x 10 probabilities x 5 seeds plus baselines
(255 runs) and reproduces the per-channel pattern discussed in the
README.

Run with:  python demos/05_noise_sweep.py
"""

import tempfile

from noisyvqc import ChannelKind, SweepConfig
from noisyvqc.sweep import format_summary_table, run_sweep, write_sweep_outputs

config = SweepConfig(
    channels=(ChannelKind.PHASE_DAMPING, ChannelKind.DEPOLARIZING),
    probabilities=(0.1, 0.5, 1.0),
    seeds=(1, 2),
    out_dir=tempfile.mkdtemp(prefix="noisyvqc_demo_"),
)

records = run_sweep(
    config,
    progress=lambda r, done, total: print(
        f"  [{done:>2}/{total}] {r.channel.value:<14} p={r.probability:<4g} "
        f"seed={r.seed}  final val acc {r.final_val_accuracy():.3f}"
    ),
)
cells = write_sweep_outputs(records, config.out_dir)

print("\n" + format_summary_table(cells))
print(f"\nper-run CSVs, results.csv, summary.csv, and SVGs in {config.out_dir}")
