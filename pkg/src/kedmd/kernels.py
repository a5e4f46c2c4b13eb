"""Matern kernels with half-integer smoothness and Gram-matrix utilities.

The three classical closed forms are supported (distances ``r = |x - y|``
are Euclidean, ``ell`` is the length-scale):

* ``nu = 1/2`` :  ``exp(-r/ell)``
* ``nu = 3/2`` :  ``(1 + sqrt(3) r/ell) exp(-sqrt(3) r/ell)``
* ``nu = 5/2`` :  ``(1 + sqrt(5) r/ell + 5 r^2/(3 ell^2)) exp(-sqrt(5) r/ell)``

All of them are normalized, ``k(x, x) = 1``, so the sup-norm of the kernel
is exactly one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve
from scipy.spatial.distance import cdist

from .errors import InputError, NumericalError, UnsupportedOrderError

__all__ = [
    "SUPPORTED_ORDERS",
    "MaternKernel",
    "GramMatrix",
    "gram",
    "solve_regularized",
    "default_ridge",
]

#: Smoothness orders with closed-form expressions.
SUPPORTED_ORDERS = (0.5, 1.5, 2.5)

_SQRT3 = math.sqrt(3.0)
_SQRT5 = math.sqrt(5.0)


def default_ridge(n: int) -> float:
    """Default Tikhonov ridge for an ``n x n`` Gram matrix (``1e-10 * n``)."""
    if n < 1:
        raise InputError(f"need at least one sample, got n={n}")
    return 1e-10 * n


@dataclass(frozen=True)
class MaternKernel:
    """Matern covariance function with half-integer smoothness.

    Parameters
    ----------
    nu : float
        Smoothness order; one of 0.5, 1.5, 2.5.
    ell : float
        Positive length-scale.
    """

    nu: float = 0.5
    ell: float = 1.0

    def __post_init__(self) -> None:
        if self.nu not in SUPPORTED_ORDERS:
            raise UnsupportedOrderError(
                f"nu={self.nu} has no closed form here; supported orders are "
                f"{SUPPORTED_ORDERS}"
            )
        if not (self.ell > 0 and math.isfinite(self.ell)):
            raise InputError(f"length-scale must be positive and finite, got ell={self.ell}")

    @property
    def sup_norm(self) -> float:
        """Supremum of the kernel, attained on the diagonal: exactly 1."""
        return 1.0

    def _profile(self, r: np.ndarray) -> np.ndarray:
        """Evaluate the kernel as a function of Euclidean distance ``r >= 0``."""
        t = np.asarray(r, dtype=float) / self.ell
        if self.nu == 0.5:
            return np.exp(-t)
        if self.nu == 1.5:
            s = _SQRT3 * t
            return (1.0 + s) * np.exp(-s)
        s = _SQRT5 * t
        return (1.0 + s + 5.0 / 3.0 * t * t) * np.exp(-s)

    def eval(self, x: np.ndarray, y: np.ndarray) -> float:
        """Kernel value ``k(x, y)`` for two state vectors of equal dimension."""
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.ndim != 1 or y.ndim != 1:
            raise InputError(
                f"eval expects 1-D state vectors, got shapes {x.shape} and {y.shape}"
            )
        if x.shape != y.shape:
            raise InputError(f"dimension mismatch: {x.shape[0]} vs {y.shape[0]}")
        r = float(np.linalg.norm(x - y))
        return float(self._profile(np.asarray(r)))

    __call__ = eval

    def pairwise(self, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
        """Kernel matrix ``K[i, j] = k(rows[i], cols[j])`` for stacked states.

        Parameters
        ----------
        rows, cols : ndarray, shape (n, d) and (m, d)
            States stored one per row.
        """
        rows = _as_state_matrix(rows, "rows")
        cols = _as_state_matrix(cols, "cols")
        if rows.shape[1] != cols.shape[1]:
            raise InputError(
                f"dimension mismatch: rows have d={rows.shape[1]}, "
                f"cols have d={cols.shape[1]}"
            )
        return self._profile(cdist(rows, cols))


def _as_state_matrix(points: np.ndarray, name: str) -> np.ndarray:
    points = np.asarray(points, dtype=float)
    if points.ndim != 2:
        raise InputError(f"{name} must be a 2-D (n, d) array, got shape {points.shape}")
    if points.shape[0] == 0 or points.shape[1] == 0:
        raise InputError(f"{name} must be non-empty, got shape {points.shape}")
    return points


@dataclass(frozen=True)
class GramMatrix:
    """A kernel matrix together with the ridge used when solving against it.

    ``entries`` holds ``k(rows[i], cols[j])``; for a plain Gram matrix rows
    and cols are the same point set and ``entries`` is symmetric positive
    semi-definite. ``ridge`` is added to the diagonal only inside
    :func:`solve_regularized`.
    """

    entries: np.ndarray
    ridge: float = 0.0
    _chol: tuple | None = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=float)
        if entries.ndim != 2:
            raise InputError(f"entries must be 2-D, got shape {entries.shape}")
        if self.ridge < 0:
            raise InputError(f"ridge must be non-negative, got {self.ridge}")
        object.__setattr__(self, "entries", entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def regularized(self) -> np.ndarray:
        """``entries + ridge * I`` (square matrices only)."""
        n, m = self.shape
        if n != m:
            raise InputError(f"regularization needs a square matrix, got shape {self.shape}")
        return self.entries + self.ridge * np.eye(n)

    def cholesky(self) -> tuple:
        """Cached Cholesky factorization of the regularized matrix."""
        if self._chol is None:
            try:
                factor = cho_factor(self.regularized(), lower=True)
            except LinAlgError as exc:
                pivot = float(np.linalg.eigvalsh(self.regularized()).min())
                raise NumericalError(
                    f"Cholesky factorization failed (smallest pivot ~ {pivot:.3e}); "
                    f"the Gram matrix is numerically singular -- increase the ridge "
                    f"(currently {self.ridge:g})"
                ) from exc
            object.__setattr__(self, "_chol", factor)
        return self._chol


def gram(
    kernel: MaternKernel,
    rows: np.ndarray,
    cols: np.ndarray | None = None,
    ridge: float = 0.0,
) -> GramMatrix:
    """Assemble ``k(rows[i], cols[j])`` as a :class:`GramMatrix`.

    With ``cols`` omitted the matrix is the (symmetric) Gram matrix of
    ``rows``; otherwise it is the rectangular cross-kernel matrix.
    """
    if cols is None:
        cols = rows
    return GramMatrix(kernel.pairwise(rows, cols), ridge=ridge)


def solve_regularized(g: GramMatrix, rhs: np.ndarray) -> np.ndarray:
    """Solve ``(entries + ridge * I) a = rhs`` via Cholesky.

    ``rhs`` may be a vector or a matrix of stacked right-hand sides.
    """
    rhs = np.asarray(rhs, dtype=float)
    n, m = g.shape
    if n != m:
        raise InputError(f"solve needs a square Gram matrix, got shape {g.shape}")
    if rhs.shape[0] != n:
        raise InputError(f"rhs has leading dimension {rhs.shape[0]}, expected {n}")
    return cho_solve(g.cholesky(), rhs)
