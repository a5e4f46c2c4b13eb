"""Kernel-based approximation of the Koopman operator from snapshot pairs.

Given training pairs ``(x_i, x_i^+)``, ``fit`` assembles the Gram matrix
``G[i, j] = k(x_i, x_j)`` and the cross-kernel matrix
``K+[i, j] = k(x_i, x_j^+)`` and forms, with a small ridge,

* ``U     = (G + ridge I)^{-1} K+^T``  -- the Koopman matrix acting on
  coefficient vectors of kernel-section expansions,
* ``Ustar = (G + ridge I)^{-1} K+``    -- its adjoint in the data-induced
  inner product; ``Ustar`` propagates *embedded states* one mean step.

A state ``x`` embeds as the coefficient vector of the orthogonal projection
of ``k(x, .)`` onto the span of the training sections,
``embed(x) = (G + ridge I)^{-1} (k(x_i, x))_i``; ``lift_back`` maps a
coefficient vector to the state-space point ``sum_i a_i x_i``. At training
points (ridge -> 0) ``embed(x_j)`` is the ``j``-th unit vector and
``Ustar embed(x_j) = embed(x_j^+)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InputError
from .kernels import GramMatrix, MaternKernel, default_ridge, gram, solve_regularized

__all__ = ["DataSet", "LiftedState", "KoopmanModel", "fit"]


@dataclass(frozen=True)
class DataSet:
    """Snapshot pairs: states ``X`` and their one-step successors ``Xplus``.

    Both arrays are ``(n, dim)`` with one state per row and aligned rows:
    ``Xplus[i]`` is the successor of ``X[i]``.
    """

    X: np.ndarray
    Xplus: np.ndarray

    def __post_init__(self) -> None:
        x = np.asarray(self.X, dtype=float)
        xp = np.asarray(self.Xplus, dtype=float)
        if x.ndim != 2 or xp.ndim != 2:
            raise InputError(
                f"X and Xplus must be 2-D (n, dim) arrays, got shapes "
                f"{x.shape} and {xp.shape}"
            )
        if x.shape != xp.shape:
            raise InputError(f"X and Xplus must align, got shapes {x.shape} vs {xp.shape}")
        if x.shape[0] < 1 or x.shape[1] < 1:
            raise InputError(f"data set must be non-empty, got shape {x.shape}")
        object.__setattr__(self, "X", x)
        object.__setattr__(self, "Xplus", xp)

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def dim(self) -> int:
        return self.X.shape[1]


@dataclass(frozen=True)
class LiftedState:
    """Coefficient vector of a state embedded in the training-section span."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.asarray(self.coeffs, dtype=float)
        if coeffs.ndim != 1:
            raise InputError(f"coefficients must be 1-D, got shape {coeffs.shape}")
        object.__setattr__(self, "coeffs", coeffs)


@dataclass(frozen=True)
class KoopmanModel:
    """A fitted Koopman approximation; immutable after :func:`fit`.

    Attributes
    ----------
    kernel : MaternKernel
    X : ndarray, shape (n, dim)
        Training states (the embedding basis).
    gram : GramMatrix
        ``k(x_i, x_j)`` with the fit ridge; its factorization is cached.
    gram_cross : ndarray, shape (n, n), or None
        ``k(x_i, x_j^+)``; None for models restored from disk (it is not
        needed for prediction).
    U, Ustar : ndarray, shape (n, n)
        Koopman matrix and its adjoint on coefficient vectors.
    """

    kernel: MaternKernel
    X: np.ndarray
    gram: GramMatrix
    gram_cross: np.ndarray | None
    U: np.ndarray = field(repr=False)
    Ustar: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.X.shape[0]

    @property
    def dim(self) -> int:
        return self.X.shape[1]

    @property
    def ridge(self) -> float:
        return self.gram.ridge

    def embed(self, x: np.ndarray) -> LiftedState:
        """Project ``k(x, .)`` onto the training sections; returns coefficients."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise InputError(f"state must have shape ({self.dim},), got {x.shape}")
        rhs = self.kernel.pairwise(self.X, x[np.newaxis, :])[:, 0]
        return LiftedState(solve_regularized(self.gram, rhs))

    def embed_batch(self, states: np.ndarray) -> np.ndarray:
        """Embed many states at once; returns an ``(n, m)`` coefficient matrix."""
        return solve_regularized(self.gram, self.kernel.pairwise(self.X, states))

    def propagate_mean(self, mu: LiftedState) -> LiftedState:
        """One mean step in the lifted space: ``mu -> Ustar mu``."""
        if mu.coeffs.shape != (self.n,):
            raise InputError(
                f"lifted state has {mu.coeffs.shape[0]} coefficients, expected {self.n}"
            )
        return LiftedState(self.Ustar @ mu.coeffs)

    def lift_back(self, mu: LiftedState) -> np.ndarray:
        """Map coefficients to the state space: ``a -> sum_i a_i x_i``."""
        if mu.coeffs.shape != (self.n,):
            raise InputError(
                f"lifted state has {mu.coeffs.shape[0]} coefficients, expected {self.n}"
            )
        return mu.coeffs @ self.X


def fit(data: DataSet, kernel: MaternKernel, ridge: float | None = None) -> KoopmanModel:
    """Fit the Koopman matrices from snapshot pairs.

    Parameters
    ----------
    data : DataSet
    kernel : MaternKernel
    ridge : float, optional
        Non-negative Tikhonov ridge; defaults to ``1e-10 * n``.
    """
    if ridge is None:
        ridge = default_ridge(data.n)
    if ridge < 0:
        raise InputError(f"ridge must be non-negative, got {ridge}")
    g = gram(kernel, data.X, ridge=ridge)
    k_cross = kernel.pairwise(data.X, data.Xplus)
    u = solve_regularized(g, k_cross.T)
    ustar = solve_regularized(g, k_cross)
    return KoopmanModel(
        kernel=kernel, X=data.X, gram=g, gram_cross=k_cross, U=u, Ustar=ustar
    )
