"""Exception hierarchy.

Argument and domain problems derive from ``ValueError``; numerical failures
derive from ``ArithmeticError``.  The CLI maps the first group to exit code 2
and the second to exit code 1.
"""


class MLRadiiError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MLRadiiError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidQuery(MLRadiiError, ValueError):
    """A query is malformed (bad order, bad K, unknown identifier)."""


class Unsupported(MLRadiiError, ValueError):
    """The requested combination has no defined result."""


class ComputationError(MLRadiiError, ArithmeticError):
    """A numerical procedure failed."""


class NonConvergence(ComputationError):
    """An iterative procedure hit its cap before meeting its stopping rule."""


class UnresolvedBracket(ComputationError):
    """A scan found a near-zero without a sign change (possible double zero)."""


class MaxScanExceeded(ComputationError):
    """A zero scan ran past its window before finding the requested zeros."""


class PrecisionLoss(ComputationError):
    """Cancellation noise is too large to locate a sign change reliably."""


class CoefficientOverflow(ComputationError, OverflowError):
    """A series coefficient or term is not representable in double precision."""
