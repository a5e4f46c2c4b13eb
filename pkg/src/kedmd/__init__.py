"""Kernel-based Koopman operator approximation for stochastic systems.

The package fits a data-driven Koopman surrogate of a discrete-time
stochastic system from snapshot pairs using Matern reproducing kernels,
predicts mean and stochastic trajectories, and evaluates closed-form
probabilistic error-bound constants alongside empirical error-vs-N sweeps.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundInputs,
    BoundReport,
    bound_curve,
    bound_report,
    c_delta,
    c_tilde,
    delta_adm,
    delta_max,
    table,
)
from .dynamics import (
    IdentitySystem,
    LinearSystem,
    MultiplicativeNoiseSystem,
    SIRSystem,
    StochasticSystem,
    make_system,
    sample_pairs,
)
from .errors import InputError, KedmdError, NumericalError, UnsupportedOrderError
from .harness import (
    ExperimentConfig,
    SweepResult,
    SweepRow,
    emit_results,
    fit_power_law,
    load_model,
    run_sweep,
    save_model,
)
from .kernels import GramMatrix, MaternKernel, default_ridge, gram, solve_regularized
from .koopman import DataSet, KoopmanModel, LiftedState, fit
from .rng import STREAM_PREDICT, STREAM_REFERENCE, STREAM_TRAINING, substream
from .trajectory import (
    TrajectoryBundle,
    TrajectoryConfig,
    predict_mean,
    predict_stochastic,
    read_bundle_csv,
    simulate_true,
    trajectory_error,
    write_bundle_csv,
    zeta_hat,
    zeta_hat_diagnostic,
)

__all__ = [
    "__version__",
    # kernels
    "MaternKernel",
    "GramMatrix",
    "gram",
    "solve_regularized",
    "default_ridge",
    # dynamics
    "StochasticSystem",
    "LinearSystem",
    "SIRSystem",
    "MultiplicativeNoiseSystem",
    "IdentitySystem",
    "sample_pairs",
    "make_system",
    # koopman
    "DataSet",
    "LiftedState",
    "KoopmanModel",
    "fit",
    # trajectory
    "TrajectoryConfig",
    "TrajectoryBundle",
    "simulate_true",
    "predict_mean",
    "predict_stochastic",
    "zeta_hat",
    "zeta_hat_diagnostic",
    "trajectory_error",
    "write_bundle_csv",
    "read_bundle_csv",
    # bounds
    "BoundInputs",
    "BoundReport",
    "c_delta",
    "c_tilde",
    "delta_adm",
    "delta_max",
    "bound_curve",
    "bound_report",
    "table",
    # harness
    "ExperimentConfig",
    "SweepRow",
    "SweepResult",
    "run_sweep",
    "fit_power_law",
    "emit_results",
    "save_model",
    "load_model",
    # rng
    "substream",
    "STREAM_TRAINING",
    "STREAM_REFERENCE",
    "STREAM_PREDICT",
    # errors
    "KedmdError",
    "InputError",
    "UnsupportedOrderError",
    "NumericalError",
]
