"""Exception hierarchy shared by all rotovac modules."""


class RotovacError(Exception):
    """Base class for all rotovac errors."""


class DomainError(RotovacError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class SuperluminalError(DomainError):
    """The cut edge speed |Omega * R| reaches or exceeds the speed of light."""


class ConvergenceError(RotovacError):
    """A series was truncated before its tail bound met the tolerance."""


class NumericalInstabilityError(RotovacError):
    """A regularization fit is too ill-conditioned to be trusted."""


class SolverError(RotovacError):
    """A root or minimum solver failed to bracket or converge."""
