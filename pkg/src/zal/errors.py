class ZalError(Exception):
    """Base class for library errors."""


class DomainError(ZalError, ValueError):
    """Argument outside the range where a formula or bound is claimed."""


class PreconditionError(ZalError, ValueError):
    """A documented precondition does not hold (e.g. prime table too small)."""


class IntegrityError(ZalError):
    """Zero counting could not be certified.

    ``interval`` is the (t_lo, t_hi) range whose zero count is in doubt.
    """

    def __init__(self, message, interval=None):
        super().__init__(message)
        self.interval = interval


class NumericError(ZalError):
    """A quadrature or root finder did not reach the requested tolerance."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class ResourceError(ZalError):
    """A memory or size budget would be exceeded."""


class ConstructionError(ZalError):
    """A kernel could not be tabulated to the requested tolerance."""


class ParseError(ZalError, ValueError):
    """Malformed input file; ``line`` is 1-based."""

    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line
