"""Trajectory simulation and Koopman-based trajectory prediction.

``simulate_true`` rolls out the actual stochastic system; ``predict_mean``
iterates the fitted adjoint Koopman matrix in the lifted space and maps back
to the state space; ``predict_stochastic`` additionally re-injects noise
through a lifted noise term ``zeta_hat`` at every step.

``zeta_hat`` at a state ``x`` is the difference of two independent
Monte-Carlo estimates of the conditional mean embedding of the successor,

    zeta_hat(x) = mean_j embed(f(x, w_j)) - mean_l embed(f(x, w'_l)),

with ``n_zeta`` draws in each batch. Its expectation is exactly zero, and
for a deterministic system both batches coincide, so ``zeta_hat = 0`` and
stochastic prediction reduces to mean prediction identically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import StochasticSystem
from .errors import InputError
from .koopman import KoopmanModel, LiftedState

__all__ = [
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
]


@dataclass(frozen=True)
class TrajectoryConfig:
    """Initial state, horizon and ensemble sizes for trajectory runs.

    ``horizon`` counts steps, so trajectories have ``horizon + 1`` entries;
    ``horizon = 0`` is allowed and yields only the initial entry.
    """

    x0: np.ndarray
    horizon: int
    n_realizations: int = 30
    n_zeta: int = 30

    def __post_init__(self) -> None:
        x0 = np.asarray(self.x0, dtype=float)
        if x0.ndim != 1 or x0.shape[0] < 1:
            raise InputError(f"x0 must be a 1-D state vector, got shape {x0.shape}")
        if self.horizon < 0:
            raise InputError(f"horizon must be >= 0, got {self.horizon}")
        if self.n_realizations < 1 or self.n_zeta < 1:
            raise InputError(
                f"ensemble sizes must be >= 1, got n_realizations="
                f"{self.n_realizations}, n_zeta={self.n_zeta}"
            )
        object.__setattr__(self, "x0", x0)


@dataclass(frozen=True)
class TrajectoryBundle:
    """An ensemble of trajectories plus their pointwise mean.

    ``realizations`` has shape ``(n_realizations, horizon + 1, dim)`` and
    ``mean`` is its average over the first axis. ``extrapolated`` flags
    predicted bundles that left the axis-aligned bounding box of the
    training states at some step (a warning marker, not an error).
    """

    realizations: np.ndarray
    mean: np.ndarray
    extrapolated: bool = False

    def __post_init__(self) -> None:
        r = np.asarray(self.realizations, dtype=float)
        m = np.asarray(self.mean, dtype=float)
        if r.ndim != 3:
            raise InputError(f"realizations must be 3-D, got shape {r.shape}")
        if m.shape != r.shape[1:]:
            raise InputError(
                f"mean shape {m.shape} does not match realizations {r.shape}"
            )
        object.__setattr__(self, "realizations", r)
        object.__setattr__(self, "mean", m)

    @property
    def n_realizations(self) -> int:
        return self.realizations.shape[0]

    @property
    def horizon(self) -> int:
        return self.realizations.shape[1] - 1

    @property
    def dim(self) -> int:
        return self.realizations.shape[2]


def simulate_true(
    system: StochasticSystem, cfg: TrajectoryConfig, rng: np.random.Generator
) -> TrajectoryBundle:
    """Roll out ``n_realizations`` trajectories of the actual system."""
    if cfg.x0.shape[0] != system.dim:
        raise InputError(
            f"x0 has dimension {cfg.x0.shape[0]}, system expects {system.dim}"
        )
    out = np.empty((cfg.n_realizations, cfg.horizon + 1, system.dim))
    for r in range(cfg.n_realizations):
        out[r, 0] = cfg.x0
        for k in range(cfg.horizon):
            out[r, k + 1] = system.step(out[r, k], rng)
    return TrajectoryBundle(out, out.mean(axis=0))


def predict_mean(model: KoopmanModel, cfg: TrajectoryConfig) -> np.ndarray:
    """Mean trajectory of the fitted model: iterate ``Ustar`` in lifted space.

    Returns the lifted-back sequence, shape ``(horizon + 1, dim)``; entry 0
    is ``lift_back(embed(x0))``.
    """
    mu = model.embed(cfg.x0)
    out = np.empty((cfg.horizon + 1, model.dim))
    out[0] = model.lift_back(mu)
    for k in range(cfg.horizon):
        mu = model.propagate_mean(mu)
        out[k + 1] = model.lift_back(mu)
    return out


def zeta_hat(
    model: KoopmanModel,
    system: StochasticSystem,
    x: np.ndarray,
    n_draws: int,
    rng: np.random.Generator,
) -> LiftedState:
    """Lifted noise term at state ``x`` (see module docstring).

    Consumes exactly ``2 * n_draws`` system steps from ``rng``.
    """
    zeta, _ = zeta_hat_diagnostic(model, system, x, n_draws, rng)
    return zeta


def zeta_hat_diagnostic(
    model: KoopmanModel,
    system: StochasticSystem,
    x: np.ndarray,
    n_draws: int,
    rng: np.random.Generator,
) -> tuple[LiftedState, float]:
    """``zeta_hat`` together with the standard error of its coefficient vector.

    The standard error aggregates the per-coefficient sample variances of
    both embedded batches: ``se = sqrt(sum_i (s2_A[i] + s2_B[i]) / n_draws)``.
    """
    if n_draws < 1:
        raise InputError(f"n_draws must be >= 1, got {n_draws}")
    x = np.asarray(x, dtype=float)
    batches = []
    for _ in range(2):
        successors = np.stack([system.step(x, rng) for _ in range(n_draws)])
        batches.append(model.embed_batch(successors))
    a, b = batches
    zeta = a.mean(axis=1) - b.mean(axis=1)
    if n_draws > 1:
        var_sum = float(np.sum(a.var(axis=1, ddof=1) + b.var(axis=1, ddof=1)))
    else:
        var_sum = 0.0
    se = float(np.sqrt(var_sum / n_draws))
    return LiftedState(zeta), se


def predict_stochastic(
    model: KoopmanModel,
    system: StochasticSystem,
    cfg: TrajectoryConfig,
    rng: np.random.Generator,
) -> TrajectoryBundle:
    """Stochastic trajectory prediction with the lifted noise term.

    Per realization: ``mu_0 = embed(x0)``; at step ``k`` the current state
    is ``x_k = lift_back(mu_k)`` and
    ``mu_{k+1} = propagate_mean(mu_k) + zeta_hat(x_k)``. Each step consumes
    ``2 * n_zeta`` system steps per realization. The returned bundle's mean
    is the pointwise average over realizations; ``extrapolated`` is set if
    any lifted-back state leaves the training bounding box.
    """
    if cfg.x0.shape[0] != model.dim:
        raise InputError(
            f"x0 has dimension {cfg.x0.shape[0]}, model expects {model.dim}"
        )
    if system.dim != model.dim:
        raise InputError(
            f"system dimension {system.dim} does not match model dimension {model.dim}"
        )
    out = np.empty((cfg.n_realizations, cfg.horizon + 1, model.dim))
    mu0 = model.embed(cfg.x0)
    for r in range(cfg.n_realizations):
        mu = mu0
        out[r, 0] = model.lift_back(mu)
        for k in range(cfg.horizon):
            zeta = zeta_hat(model, system, out[r, k], cfg.n_zeta, rng)
            mu = LiftedState(model.Ustar @ mu.coeffs + zeta.coeffs)
            out[r, k + 1] = model.lift_back(mu)
    lo = model.X.min(axis=0)
    hi = model.X.max(axis=0)
    extrapolated = bool(np.any(out < lo) or np.any(out > hi))
    return TrajectoryBundle(out, out.mean(axis=0), extrapolated=extrapolated)


def trajectory_error(
    reference: np.ndarray, predicted: np.ndarray, metric: str = "max"
) -> float:
    """Distance between two mean trajectories of equal shape ``(T+1, dim)``.

    ``metric="max"`` is the largest Euclidean state-space distance over the
    horizon; ``metric="mean"`` is the time-averaged distance.
    """
    reference = np.asarray(reference, dtype=float)
    predicted = np.asarray(predicted, dtype=float)
    if reference.ndim != 2 or reference.shape != predicted.shape:
        raise InputError(
            f"trajectories must share shape (T+1, dim), got {reference.shape} "
            f"vs {predicted.shape}"
        )
    dists = np.linalg.norm(reference - predicted, axis=1)
    if metric == "max":
        return float(dists.max())
    if metric == "mean":
        return float(dists.mean())
    raise InputError(f"unknown metric {metric!r}; choose 'max' or 'mean'")


def write_bundle_csv(bundle: TrajectoryBundle, path) -> None:
    """Serialize a bundle: one row per (realization, step), mean rows id -1.

    Columns: ``realization, step, x0..x{dim-1}``. Floats are written with
    shortest round-trip precision, so identical bundles serialize to
    identical bytes.
    """
    import csv

    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["realization", "step", *(f"x{i}" for i in range(bundle.dim))])
        for r in range(bundle.n_realizations):
            for k in range(bundle.horizon + 1):
                writer.writerow([r, k, *(repr(float(v)) for v in bundle.realizations[r, k])])
        for k in range(bundle.horizon + 1):
            writer.writerow([-1, k, *(repr(float(v)) for v in bundle.mean[k])])


def read_bundle_csv(path) -> TrajectoryBundle:
    """Inverse of :func:`write_bundle_csv` (exact round trip)."""
    import csv

    rows = []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        dim = len(header) - 2
        for row in reader:
            rows.append((int(row[0]), int(row[1]), [float(v) for v in row[2:]]))
    if not rows:
        raise InputError(f"no trajectory rows in {path}")
    n_real = max(r for r, _, _ in rows) + 1
    horizon = max(k for _, k, _ in rows)
    realizations = np.empty((n_real, horizon + 1, dim))
    mean = np.empty((horizon + 1, dim))
    for r, k, values in rows:
        if r < 0:
            mean[k] = values
        else:
            realizations[r, k] = values
    return TrajectoryBundle(realizations, mean)
