"""Experiment harness: configs, error-vs-N sweeps, power-law fits, persistence.

A sweep trains one model per ``(N, repeat)`` cell on freshly sampled pairs,
predicts the mean trajectory from ``x0``, measures its distance to an
independently simulated true-system mean, fits ``error ~ A * N**B`` through
all cells, and tabulates the theoretical decay curve alongside.

Reproducibility: the random stream of every cell is derived from the root
seed via :func:`kedmd.rng.substream` with keys ``(purpose, N, repeat)``
(purposes 0 = training sampling, 1 = reference simulation, 2 = prediction
noise), so results are bit-identical across runs and unaffected by the
order or subset of cells executed.

Persistence formats (all floats are written with shortest round-trip
precision; identical inputs give byte-identical files):

* ``errors.csv``  -- columns ``N,repeat,error``, one row per sweep cell;
* ``fit.csv``     -- columns ``N,bound,A,B,delta``: the theoretical bound
  per N with the fitted amplitude/exponent and the failure level repeated
  on every row;
* ``meta.json``   -- the resolved config, seed and library versions
  (sorted keys, no timestamps);
* models          -- ``save_model``/``load_model`` dump a fitted model as a
  numpy ``.npz`` archive with keys ``nu, ell, ridge, X, U, Ustar``; loading
  rebuilds the Gram factorization from ``X`` and restores ``U``/``Ustar``
  verbatim, so predictions round-trip exactly.
"""

from __future__ import annotations

import csv
import json
import math
import sys
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from . import __version__
from .bounds import bound_curve
from .dynamics import (
    IdentitySystem,
    LinearSystem,
    MultiplicativeNoiseSystem,
    SIRSystem,
    StochasticSystem,
    sample_pairs,
)
from .errors import InputError
from .kernels import MaternKernel, gram
from .koopman import KoopmanModel, fit
from .rng import STREAM_REFERENCE, STREAM_TRAINING, substream
from .trajectory import TrajectoryConfig, predict_mean, simulate_true, trajectory_error

__all__ = [
    "SYSTEM_DEFAULTS",
    "ExperimentConfig",
    "SweepRow",
    "SweepResult",
    "run_sweep",
    "fit_power_law",
    "emit_results",
    "read_errors_csv",
    "save_model",
    "load_model",
]

#: Per-system defaults used when a config leaves the field unset.
SYSTEM_DEFAULTS = {
    "linear": dict(sigma=1e-3, ell=1000.0, delta=1e-15, x0=(0.1, 0.1, 0.1), horizon=30),
    "sir": dict(sigma=0.01, ell=1.0, delta=0.1, x0=(0.9, 0.1, 0.0), horizon=20),
    "multiplicative": dict(sigma=None, ell=1.0, delta=0.1, x0=(0.5,), horizon=10),
    "identity": dict(sigma=None, ell=1.0, delta=0.1, x0=(0.1, 0.1, 0.1), horizon=10),
}


@dataclass(frozen=True)
class ExperimentConfig:
    """Flat experiment description; unset fields resolve to system defaults.

    The on-disk form is a flat JSON object with exactly these keys (see
    :meth:`from_file`). ``sigma``, ``ell``, ``delta``, ``x0`` and
    ``horizon`` may be null/omitted to pick the per-system default.
    """

    system: str = "linear"
    alpha: float = -0.3
    beta: float = 1.0
    gamma: float = 0.3
    sigma: float | None = None
    nu: float = 0.5
    ell: float | None = None
    delta: float | None = None
    x0: tuple | None = None
    horizon: int | None = None
    n_sweep: tuple = (25, 50, 100, 200, 400, 800)
    n_repeats: int = 10
    n_realizations: int = 30
    n_zeta: int = 30
    ridge: float | None = None
    seed: int = 42
    error_metric: str = "max"

    def __post_init__(self) -> None:
        if self.system not in SYSTEM_DEFAULTS:
            raise InputError(
                f"unknown system {self.system!r}; choose one of "
                f"{tuple(SYSTEM_DEFAULTS)}"
            )
        if self.n_repeats < 1 or self.n_realizations < 1 or self.n_zeta < 1:
            raise InputError("repeat and ensemble counts must be >= 1")
        if len(self.n_sweep) < 1 or any(n < 1 for n in self.n_sweep):
            raise InputError(f"n_sweep must hold positive counts, got {self.n_sweep}")
        if self.error_metric not in ("max", "mean"):
            raise InputError(f"error_metric must be 'max' or 'mean', got {self.error_metric!r}")
        object.__setattr__(self, "n_sweep", tuple(int(n) for n in self.n_sweep))
        if self.x0 is not None:
            object.__setattr__(self, "x0", tuple(float(v) for v in self.x0))

    def resolved(self) -> "ExperimentConfig":
        """A copy with every None field replaced by its system default."""
        defaults = SYSTEM_DEFAULTS[self.system]
        filled = {
            key: defaults[key]
            for key in ("sigma", "ell", "delta", "x0", "horizon")
            if getattr(self, key) is None
        }
        return replace(self, **filled) if filled else self

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        """Load a config from a flat JSON file; unknown keys are an error."""
        with open(path) as fh:
            try:
                raw = json.load(fh)
            except json.JSONDecodeError as exc:
                raise InputError(f"config {path} is not valid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise InputError(f"config {path} must hold a flat JSON object")
        known = set(cls.__dataclass_fields__)
        unknown = set(raw) - known
        if unknown:
            raise InputError(
                f"unknown config keys {sorted(unknown)}; known keys are {sorted(known)}"
            )
        for key in ("x0", "n_sweep"):
            if isinstance(raw.get(key), list):
                raw[key] = tuple(raw[key])
        return cls(**raw)

    def build_system(self) -> StochasticSystem:
        """Instantiate the configured test system (config must be resolved)."""
        cfg = self.resolved()
        if cfg.system == "linear":
            return LinearSystem(alpha=cfg.alpha, sigma=cfg.sigma)
        if cfg.system == "sir":
            return SIRSystem(beta=cfg.beta, gamma=cfg.gamma, sigma=cfg.sigma)
        if cfg.system == "multiplicative":
            return MultiplicativeNoiseSystem()
        return IdentitySystem(dim=len(cfg.x0))

    def kernel(self) -> MaternKernel:
        cfg = self.resolved()
        return MaternKernel(nu=cfg.nu, ell=cfg.ell)


@dataclass(frozen=True)
class SweepRow:
    """One sweep cell: sample count, repeat index, measured error."""

    n: int
    repeat: int
    error: float


@dataclass(frozen=True)
class SweepResult:
    """All sweep cells plus the power-law fit and the theoretical curve."""

    config: ExperimentConfig
    rows: list[SweepRow]
    amplitude: float
    exponent: float
    bounds: list[tuple[int, float]] = field(default_factory=list)

    def mean_errors(self) -> list[tuple[int, float]]:
        """Per-N mean of the measured errors, in sweep order."""
        out = []
        for n in self.config.n_sweep:
            errs = [row.error for row in self.rows if row.n == n]
            out.append((n, float(np.mean(errs))))
        return out


def run_sweep(config: ExperimentConfig) -> SweepResult:
    """Run the error-vs-N sweep described by ``config``.

    Any error raised inside a cell is re-raised with the ``(N, repeat)``
    cell attached to its message. With fewer than two distinct sample
    counts the power law is undefined and amplitude/exponent are NaN.
    """
    cfg = config.resolved()
    system = cfg.build_system()
    kernel = cfg.kernel()
    tcfg = TrajectoryConfig(
        x0=np.asarray(cfg.x0, dtype=float),
        horizon=cfg.horizon,
        n_realizations=cfg.n_realizations,
        n_zeta=cfg.n_zeta,
    )
    rows = []
    for n in cfg.n_sweep:
        for rep in range(cfg.n_repeats):
            try:
                data = sample_pairs(system, n, substream(cfg.seed, STREAM_TRAINING, n, rep))
                model = fit(data, kernel, cfg.ridge)
                predicted = predict_mean(model, tcfg)
                reference = simulate_true(
                    system, tcfg, substream(cfg.seed, STREAM_REFERENCE, n, rep)
                ).mean
                error = trajectory_error(reference, predicted, cfg.error_metric)
            except Exception as exc:
                exc.args = (f"sweep cell N={n} repeat={rep}: {exc}",) + exc.args[1:]
                raise
            rows.append(SweepRow(n=n, repeat=rep, error=error))
    if len(set(cfg.n_sweep)) >= 2:
        amplitude, exponent = fit_power_law([(row.n, row.error) for row in rows])
    else:
        amplitude = exponent = float("nan")
    bounds = bound_curve(cfg.n_sweep, cfg.delta, kernel.sup_norm)
    return SweepResult(
        config=cfg, rows=rows, amplitude=amplitude, exponent=exponent, bounds=bounds
    )


def fit_power_law(points: Sequence[tuple[float, float]]) -> tuple[float, float]:
    """Least-squares fit of ``error = A * N**B`` in log-log coordinates.

    Returns ``(A, B)``. Requires at least two distinct sample counts and
    strictly positive, finite errors.
    """
    if len(points) < 2:
        raise InputError(f"need at least two points to fit, got {len(points)}")
    ns = np.asarray([p[0] for p in points], dtype=float)
    errs = np.asarray([p[1] for p in points], dtype=float)
    if np.unique(ns).size < 2:
        raise InputError("need at least two distinct sample counts to fit")
    if np.any(ns <= 0):
        raise InputError("sample counts must be positive")
    if np.any(~np.isfinite(errs)) or np.any(errs <= 0):
        raise InputError("errors must be positive and finite for a log-log fit")
    slope, intercept = np.polyfit(np.log(ns), np.log(errs), deg=1)
    return float(math.exp(intercept)), float(slope)


def _write_csv(path: Path, header: Sequence[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _fmt(value: float) -> str:
    """Shortest decimal form that round-trips the float exactly."""
    return repr(float(value))


def emit_results(result: SweepResult, outdir) -> dict[str, Path]:
    """Write ``errors.csv``, ``fit.csv`` and ``meta.json`` into ``outdir``.

    Returns the paths written. Output is byte-identical for identical
    sweep results.
    """
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = {
        "errors": outdir / "errors.csv",
        "fit": outdir / "fit.csv",
        "meta": outdir / "meta.json",
    }
    _write_csv(
        paths["errors"],
        ["N", "repeat", "error"],
        ([row.n, row.repeat, _fmt(row.error)] for row in result.rows),
    )
    delta = result.config.resolved().delta
    _write_csv(
        paths["fit"],
        ["N", "bound", "A", "B", "delta"],
        (
            [n, _fmt(b), _fmt(result.amplitude), _fmt(result.exponent), _fmt(delta)]
            for n, b in result.bounds
        ),
    )
    meta = {
        "config": asdict(result.config),
        "seed": result.config.seed,
        "versions": {
            "kedmd": __version__,
            "numpy": np.__version__,
            "python": ".".join(map(str, sys.version_info[:3])),
        },
    }
    with open(paths["meta"], "w") as fh:
        json.dump(meta, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return paths


def read_errors_csv(path) -> list[tuple[int, int, float]]:
    """Read an ``errors.csv`` back as ``(N, repeat, error)`` tuples."""
    rows = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["N", "repeat", "error"]:
            raise InputError(
                f"{path} does not look like an errors.csv (header {header})"
            )
        for line in reader:
            rows.append((int(line[0]), int(line[1]), float(line[2])))
    if not rows:
        raise InputError(f"no data rows in {path}")
    return rows


def save_model(model: KoopmanModel, path) -> None:
    """Dump a fitted model to a ``.npz`` archive (see module docstring)."""
    np.savez(
        path,
        nu=model.kernel.nu,
        ell=model.kernel.ell,
        ridge=model.ridge,
        X=model.X,
        U=model.U,
        Ustar=model.Ustar,
    )


def load_model(path) -> KoopmanModel:
    """Restore a model written by :func:`save_model`.

    The Gram matrix is rebuilt from the stored training states and ridge;
    ``U``/``Ustar`` are restored verbatim. The cross-kernel matrix is not
    part of the dump and is left as ``None``.
    """
    with np.load(path) as archive:
        kernel = MaternKernel(nu=float(archive["nu"]), ell=float(archive["ell"]))
        x = archive["X"]
        ridge = float(archive["ridge"])
        u = archive["U"]
        ustar = archive["Ustar"]
    return KoopmanModel(
        kernel=kernel,
        X=x,
        gram=gram(kernel, x, ridge=ridge),
        gram_cross=None,
        U=u,
        Ustar=ustar,
    )
