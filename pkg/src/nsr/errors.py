"""Exception types shared across the package."""


class NSRError(Exception):
    """Base class for all errors raised by nsr."""


class ScalarDivisionError(NSRError, ZeroDivisionError):
    """Division of a scalar by zero."""


class PoleError(NSRError, ArithmeticError):
    """A rational function was evaluated at a zero of its denominator."""

    def __init__(self, point, message=None):
        self.point = point
        super().__init__(message or f"pole at {point}")


class DegreeOverflowError(NSRError, ArithmeticError):
    """A polynomial exceeded the configured degree cap."""


class InternalMismatch(NSRError):
    """Two independent implementations of the same quantity disagree."""


class DegenerateParameters(NSRError):
    """A denominator vanished at the chosen parameter point.

    ``where`` names the offending object (degree key, tuple, factor).
    """

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(message)


class CoordinateMismatch(NSRError, ValueError):
    """Series with different coordinate systems were combined."""


class SeriesError(NSRError, ValueError):
    """Invalid input to a series operation (bad degree, non-unit constant term)."""


class SizeCapExceeded(NSRError, ValueError):
    """An enumeration or truncation bound exceeded its configured cap."""
