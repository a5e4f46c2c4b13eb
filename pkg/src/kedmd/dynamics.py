"""Discrete-time stochastic test systems.

Each system bundles a state dimension, a one-step stochastic map ``step``
and a distribution ``sample_states`` over initial/training states. Steps
take an explicit ``numpy.random.Generator`` and consume a fixed, documented
number of draws per call -- also when the noise amplitude is zero -- so that
random streams stay aligned across parameter changes.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from .errors import InputError

__all__ = [
    "StochasticSystem",
    "LinearSystem",
    "SIRSystem",
    "MultiplicativeNoiseSystem",
    "IdentitySystem",
    "sample_pairs",
    "make_system",
]


class StochasticSystem(ABC):
    """A discrete-time stochastic dynamical system ``x_{k+1} = f(x_k, w_k)``."""

    #: State-space dimension.
    dim: int

    @abstractmethod
    def step(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """Advance one step from state ``x`` using noise drawn from ``rng``."""

    @abstractmethod
    def sample_states(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """Draw ``n`` states, one per row, from the system's state distribution."""

    def _check_state(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise InputError(
                f"{type(self).__name__} expects states of shape ({self.dim},), "
                f"got {x.shape}"
            )
        return x


@dataclass(frozen=True)
class LinearSystem(StochasticSystem):
    """Three-dimensional linear map with additive Gaussian noise.

    The update is ``x' = A x + sigma * w`` with ``w ~ N(0, I_3)`` and

        A = I + [[0.01, 0.04, 0.0 ],
                 [0.01, 0.02, alpha],
                 [0.0 , 0.4 , 0.02]].

    ``sigma`` is the per-coordinate noise standard deviation. Each ``step``
    consumes exactly 3 standard-normal draws (also for ``sigma = 0``).
    Training states are sampled from ``N(0, I_3)``.
    """

    alpha: float = -0.3
    sigma: float = 1e-3
    dim: int = 3

    def __post_init__(self) -> None:
        if self.sigma < 0:
            raise InputError(f"noise level must be non-negative, got sigma={self.sigma}")
        if self.dim != 3:
            raise InputError("LinearSystem is defined on R^3")

    @property
    def matrix(self) -> np.ndarray:
        """The system matrix ``A``."""
        a = np.array(
            [
                [0.01, 0.04, 0.0],
                [0.01, 0.02, self.alpha],
                [0.0, 0.4, 0.02],
            ]
        )
        return np.eye(3) + a

    def step(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        x = self._check_state(x)
        return self.matrix @ x + self.sigma * rng.standard_normal(3)

    def sample_states(self, n: int, rng: np.random.Generator) -> np.ndarray:
        if n < 1:
            raise InputError(f"need at least one sample, got n={n}")
        return rng.standard_normal((n, 3))


@dataclass(frozen=True)
class SIRSystem(StochasticSystem):
    """Discrete SIR epidemic model with additive Gaussian noise.

    Noiseless update for ``x = (S, I, R)``:

        S' = S - beta * S * I
        I' = I + beta * S * I - gamma * I
        R' = R + gamma * I

    which preserves ``S + I + R`` exactly; additive noise
    ``sigma * w, w ~ N(0, I_3)`` is applied afterwards, with no clamping of
    the result. Each ``step`` consumes exactly 3 standard-normal draws.
    Training states are sampled from the flat Dirichlet distribution on the
    unit simplex.
    """

    beta: float = 1.0
    gamma: float = 0.3
    sigma: float = 0.01
    dim: int = 3

    def __post_init__(self) -> None:
        if self.beta < 0 or self.gamma < 0:
            raise InputError(
                f"rates must be non-negative, got beta={self.beta}, gamma={self.gamma}"
            )
        if self.sigma < 0:
            raise InputError(f"noise level must be non-negative, got sigma={self.sigma}")
        if self.dim != 3:
            raise InputError("SIRSystem is defined on R^3")

    def step(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        s, i, r = self._check_state(x)
        infections = self.beta * s * i
        recoveries = self.gamma * i
        nxt = np.array([s - infections, i + infections - recoveries, r + recoveries])
        return nxt + self.sigma * rng.standard_normal(3)

    def sample_states(self, n: int, rng: np.random.Generator) -> np.ndarray:
        if n < 1:
            raise InputError(f"need at least one sample, got n={n}")
        return rng.dirichlet(np.ones(3), size=n)


@dataclass(frozen=True)
class MultiplicativeNoiseSystem(StochasticSystem):
    """Scalar system ``x' = x * eps`` with ``eps ~ Uniform(0, 1)``.

    States and noise factors are drawn as ``1 - random()``, which lies in
    ``(0, 1]``, so starting from ``x0 in (0, 1]`` the state stays in
    ``(0, 1]`` surely. Each ``step`` consumes exactly 1 uniform draw.
    """

    dim: int = 1

    def __post_init__(self) -> None:
        if self.dim != 1:
            raise InputError("MultiplicativeNoiseSystem is scalar")

    def step(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        x = self._check_state(x)
        eps = 1.0 - rng.random()
        return x * eps

    def sample_states(self, n: int, rng: np.random.Generator) -> np.ndarray:
        if n < 1:
            raise InputError(f"need at least one sample, got n={n}")
        return 1.0 - rng.random((n, 1))


@dataclass(frozen=True)
class IdentitySystem(StochasticSystem):
    """Deterministic identity map ``x' = x``; a fixture for pipeline checks.

    ``step`` consumes no random draws. States are sampled from ``N(0, I)``.
    """

    dim: int = 3

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise InputError(f"dimension must be positive, got {self.dim}")

    def step(self, x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        return self._check_state(x).copy()

    def sample_states(self, n: int, rng: np.random.Generator) -> np.ndarray:
        if n < 1:
            raise InputError(f"need at least one sample, got n={n}")
        return rng.standard_normal((n, self.dim))


def sample_pairs(system: StochasticSystem, n: int, rng: np.random.Generator):
    """Draw ``n`` training pairs ``(x_i, x_i^+)`` with ``x_i^+ = f(x_i, w_i)``.

    States are drawn first (one batch), then stepped one by one, so the
    draw order is reproducible. Returns a :class:`kedmd.koopman.DataSet`.
    """
    from .koopman import DataSet

    states = system.sample_states(n, rng)
    successors = np.stack([system.step(x, rng) for x in states])
    return DataSet(states, successors)


_SYSTEM_KINDS = ("linear", "sir", "multiplicative", "identity")


def make_system(kind: str, **params) -> StochasticSystem:
    """Construct a system by name: linear, sir, multiplicative or identity.

    ``params`` are forwarded to the constructor; unknown keys raise an
    input error.
    """
    factories = {
        "linear": LinearSystem,
        "sir": SIRSystem,
        "multiplicative": MultiplicativeNoiseSystem,
        "identity": IdentitySystem,
    }
    if kind not in factories:
        raise InputError(f"unknown system kind {kind!r}; choose one of {_SYSTEM_KINDS}")
    try:
        return factories[kind](**params)
    except TypeError as exc:
        raise InputError(f"bad parameters for system {kind!r}: {exc}") from exc
