"""Exception types shared across the package.

The command line tool maps these onto exit codes: invalid input -> 1,
numerical failure -> 2, I/O failure (plain ``OSError``) -> 3.
"""


class KedmdError(Exception):
    """Base class for errors raised by this package."""


class InputError(KedmdError, ValueError):
    """Invalid argument values or shapes (bad dimensions, empty data, ...)."""


class UnsupportedOrderError(InputError):
    """A Matern smoothness order outside the closed-form family."""


class NumericalError(KedmdError, ArithmeticError):
    """A numerical operation failed (e.g. Cholesky factorization broke down)."""
