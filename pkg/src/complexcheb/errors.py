"""Exception types shared across the package."""


class ComplexChebError(Exception):
    """Base class for all errors raised by this package."""


class SingularMatrix(ComplexChebError):
    """A pivot fell below the relative singularity threshold during LU."""


class InitFailure(ComplexChebError):
    """Could not build an invertible starting reference."""


class ExchangeFailure(ComplexChebError):
    """No admissible pivot direction in an exchange step."""


class NonpositiveLowerBound(ComplexChebError):
    """The dual lower bound stayed nonpositive for too many iterations."""


class ContinuationFailure(ComplexChebError):
    """Newton correction failed while tracing a lemniscate branch."""


class NoConvergence(ComplexChebError):
    """The simultaneous root iteration did not converge."""


class BadConfig(ComplexChebError):
    """Invalid run configuration."""
