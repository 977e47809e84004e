"""Exception hierarchy shared by all modules."""


class FracBuckleError(Exception):
    """Base class for every error raised by this package."""


class DomainError(FracBuckleError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class GammaOverflowError(FracBuckleError, OverflowError):
    """A Gamma ratio is not representable as a finite double."""


class BoundUnavailable(FracBuckleError):
    """The geometric tail majorant does not apply (term ratio >= 1)."""


class InvalidBracket(FracBuckleError, ValueError):
    """A bracket does not enclose a positive-to-nonpositive sign change."""


class NoRootFound(FracBuckleError):
    """No even truncation up to the degree cap has a root below its bound.

    ``evidence`` may carry the :class:`~fracbuckle.analysis.ExistenceReport`
    computed by the caller.
    """

    def __init__(self, message, alpha=None, max_degree=None, skipped=()):
        super().__init__(message)
        self.alpha = alpha
        self.max_degree = max_degree
        self.skipped = tuple(skipped)
        self.evidence = None


class NotConverged(FracBuckleError):
    """The root sequence did not meet the stopping test within the degree cap."""
