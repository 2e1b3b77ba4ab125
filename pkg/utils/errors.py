# utils/errors.py
"""Exception types raised across the q-series packages.

Each error subclasses the closest builtin, so callers that only know about
ValueError / ArithmeticError / ZeroDivisionError still catch them.
"""


class SeriesZeroDivisionError(ZeroDivisionError):
    """Inverting a series that is zero up to its truncation."""


class NonDivisibleError(ArithmeticError):
    """A q-integer or quotient that is not a Laurent polynomial on the half grid."""


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a remainder where exactness is guaranteed."""


class DegenerateDenominatorError(ArithmeticError):
    """The chosen points make a Weyl denominator vanish."""


class OffGridExponentError(ArithmeticError):
    """A value has exponents outside the half-integer grid."""


class TruncatedSeriesError(ValueError):
    """Operation needs an exact polynomial but got a truncated series."""


class LengthExceededError(ValueError):
    """A partition is longer than the number of available variables."""


class TooLargeError(ValueError):
    """An exponential enumeration was asked to go above its guard."""


class NonConvergentError(ValueError):
    """A formal series expansion would not converge (non-positive valuation)."""


class BadShapeError(ValueError):
    """Staircase or composition parameters are inconsistent."""


class ContractViolationError(ValueError):
    """An integrand failed a declared symmetry or vanishing spot check."""


class UsageError(ValueError):
    """Bad command line usage."""
