class SL2JSRError(Exception):
    """Base class for errors raised by this package."""


class InvalidMatrixError(SL2JSRError):
    """Input matrix violates a hard precondition (det != 1, elliptic, ...)."""


class OutOfScopeError(SL2JSRError):
    """The requested quantity is not covered by the decision procedure."""


class InconsistencyError(SL2JSRError):
    """Trace data that cannot come from a well oriented integer pair."""
