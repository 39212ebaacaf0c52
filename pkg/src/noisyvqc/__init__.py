"""Density-matrix simulation and training of noisy two-qubit variational classifiers.

The package is organized bottom-up:

* :mod:`noisyvqc.linalg`    -- small dense complex matrix helpers
* :mod:`noisyvqc.channels`  -- the five Kraus noise channels
* :mod:`noisyvqc.circuit`   -- gate matrices and the classifier ansatz
* :mod:`noisyvqc.simulator` -- instruction-by-instruction state evolution
* :mod:`noisyvqc.evaluator` -- vectorized batch evaluation of the ansatz
* :mod:`noisyvqc.training`  -- parameter-shift gradients and the training loop
* :mod:`noisyvqc.data`      -- Iris loading, scaling, and splitting
* :mod:`noisyvqc.sweep`     -- multi-configuration sweeps, CSVs, summaries
* :mod:`noisyvqc.svg`       -- deterministic accuracy-curve charts
* :mod:`noisyvqc.cli`       -- the ``noisyvqc`` command-line driver
"""

from .channels import ChannelKind, KrausChannel, NOISY_KINDS, apply_channel, build_channel, verify_completeness
from .circuit import AnsatzConfig, Circuit, build_ansatz, cnot_matrix, rot_matrix, rx_matrix, ry_matrix, rz_matrix
from .data import Dataset, PreprocessStats, feature_stats, load_iris_binary, preprocess, split
from .evaluator import ansatz_expectations
from .simulator import expectation_z0, init_state, run
from .sweep import CellSummary, SweepConfig, execute_run, run_sweep, summarize
from .training import (
    OptimizerState,
    RunRecord,
    StepRecord,
    accuracy,
    batch_cost,
    cost_gradient,
    model_output,
    nesterov_step,
    parameter_shift_grad,
    predict,
    square_loss,
    train,
)

__version__ = "0.1.0"
