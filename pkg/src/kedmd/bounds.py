"""Closed-form probabilistic error-bound constants for the Koopman fit.

For a kernel with sup-norm ``k_inf`` and an embedding-gap constant
``0 < c1 <= sqrt(k_inf)``, the finite-data estimation error of the fitted
operator is bounded, with probability at least ``1 - delta``, by
``C_delta / sqrt(N)`` where

    C_delta = (2/c1 + sqrt(k_inf)/c1**2) * sqrt(8 k_inf ln(2/delta)),

valid once ``delta`` is *admissible*, i.e. at least

    delta_adm(N) = 2 exp(-(N - 1) c1**2 / (8 k_inf)).

A coarser constant free of ``c1``,

    C_tilde = (3/sqrt(k_inf)) * sqrt(8 k_inf ln(2/delta)),

bounds the practically relevant projected error for any ``delta in (0, 2]``
and yields the reference decay curve ``C_tilde * N**-0.5``. Finally

    delta_max(N) = (1 - 2 exp(-N/8))**2

is the largest failure level at which an N-sample certificate can be
squared (two simultaneous events) while staying meaningful.

Everything here is plain scalar math; no array dependencies.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError

__all__ = [
    "BoundInputs",
    "BoundReport",
    "c_delta",
    "c_tilde",
    "delta_adm",
    "delta_max",
    "bound_curve",
    "bound_report",
    "table",
    "TABLE_N_VALUES",
]

#: Sample counts of the reference constants table.
TABLE_N_VALUES = (10, 50, 100, 200, 300)


def _check_kernel_constants(c1: float, k_inf: float) -> None:
    if not (k_inf > 0 and math.isfinite(k_inf)):
        raise InputError(f"kernel sup-norm must be positive and finite, got {k_inf}")
    if not (0 < c1 <= math.sqrt(k_inf)):
        raise InputError(
            f"need 0 < c1 <= sqrt(k_inf) = {math.sqrt(k_inf):.6g}, got c1={c1}"
        )


def c_delta(c1: float, k_inf: float, delta: float) -> float:
    """Full bound constant ``(2/c1 + sqrt(k_inf)/c1^2) sqrt(8 k_inf ln(2/delta))``.

    Requires ``delta in (0, 1)`` and ``0 < c1 <= sqrt(k_inf)``.
    """
    _check_kernel_constants(c1, k_inf)
    if not (0 < delta < 1):
        raise InputError(f"delta must lie in (0, 1), got {delta}")
    lead = 2.0 / c1 + math.sqrt(k_inf) / c1**2
    return lead * math.sqrt(8.0 * k_inf * math.log(2.0 / delta))


def c_tilde(delta: float, k_inf: float = 1.0) -> float:
    """c1-free bound constant ``(3/sqrt(k_inf)) sqrt(8 k_inf ln(2/delta))``.

    Defined for ``delta in (0, 2]``; the value decreases to 0 at
    ``delta = 2`` (where the logarithm vanishes).
    """
    if not (k_inf > 0 and math.isfinite(k_inf)):
        raise InputError(f"kernel sup-norm must be positive and finite, got {k_inf}")
    if not (0 < delta <= 2):
        raise InputError(f"delta must lie in (0, 2], got {delta}")
    return 3.0 / math.sqrt(k_inf) * math.sqrt(8.0 * k_inf * math.log(2.0 / delta))


def delta_adm(n: int, c1: float, k_inf: float) -> float:
    """Smallest admissible failure level ``2 exp(-(n-1) c1^2 / (8 k_inf))``.

    May exceed 1 for small ``n`` (then no probability in (0, 1) is
    admissible at these constants).
    """
    _check_kernel_constants(c1, k_inf)
    if n < 1:
        raise InputError(f"sample count must be >= 1, got {n}")
    return 2.0 * math.exp(-(n - 1) * c1**2 / (8.0 * k_inf))


def delta_max(n: int) -> float:
    """Largest squared certificate level ``(1 - 2 exp(-n/8))^2``."""
    if n < 1:
        raise InputError(f"sample count must be >= 1, got {n}")
    return (1.0 - 2.0 * math.exp(-n / 8.0)) ** 2


def bound_curve(
    n_values: Iterable[int], delta: float, k_inf: float = 1.0
) -> list[tuple[int, float]]:
    """Reference decay curve ``(N, C_tilde(delta) * N**-0.5)`` per sample count."""
    ct = c_tilde(delta, k_inf)
    out = []
    for n in n_values:
        if n < 1:
            raise InputError(f"sample counts must be >= 1, got {n}")
        out.append((int(n), ct / math.sqrt(n)))
    return out


@dataclass(frozen=True)
class BoundInputs:
    """Inputs of a bound evaluation: sample count, constants, failure level."""

    n: int
    c1: float
    k_inf: float
    delta: float

    def __post_init__(self) -> None:
        _check_kernel_constants(self.c1, self.k_inf)
        if self.n < 1:
            raise InputError(f"sample count must be >= 1, got {self.n}")
        if not (0 < self.delta < 1):
            raise InputError(f"delta must lie in (0, 1), got {self.delta}")


@dataclass(frozen=True)
class BoundReport:
    """All bound constants evaluated at one :class:`BoundInputs`."""

    c_delta: float
    c_tilde: float
    delta_adm: float
    delta_max: float
    success_prob_squared: float
    success_prob_cubed: float
    admissible: bool


def bound_report(inputs: BoundInputs) -> BoundReport:
    """Evaluate every constant; warns (does not fail) on inadmissible delta."""
    adm = delta_adm(inputs.n, inputs.c1, inputs.k_inf)
    admissible = inputs.delta >= adm
    if not admissible:
        warnings.warn(
            f"delta={inputs.delta:g} is below the admissible level "
            f"{adm:g} at n={inputs.n}; the bound constant is reported anyway",
            RuntimeWarning,
            stacklevel=2,
        )
    return BoundReport(
        c_delta=c_delta(inputs.c1, inputs.k_inf, inputs.delta),
        c_tilde=c_tilde(inputs.delta, inputs.k_inf),
        delta_adm=adm,
        delta_max=delta_max(inputs.n),
        success_prob_squared=(1.0 - inputs.delta) ** 2,
        success_prob_cubed=(1.0 - inputs.delta) ** 3,
        admissible=admissible,
    )


def table(
    n_values: Sequence[int] = TABLE_N_VALUES,
    c1: float = 0.5,
    k_inf: float = 1.0,
) -> list[tuple[int, float, float]]:
    """Constants table at the marginal admissible level per sample count.

    For each ``N`` the failure level is ``delta_adm(N)`` and the row is
    ``(N, 100 * (1 - delta_adm)^2, c_tilde(delta_adm))`` -- the squared
    success probability in percent and the c1-free constant at that level.
    """
    rows = []
    for n in n_values:
        d = delta_adm(n, c1, k_inf)  # always in (0, 2], so c_tilde is defined
        rows.append((int(n), 100.0 * (1.0 - d) ** 2, c_tilde(d, k_inf)))
    return rows
