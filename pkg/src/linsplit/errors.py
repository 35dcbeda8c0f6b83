"""Exception hierarchy shared by the library and the command-line front end."""


class LinsplitError(Exception):
    """Base class for every error raised on invalid or infeasible input."""


class NotPrime(LinsplitError, ValueError):
    pass


class TooLarge(LinsplitError, ValueError):
    pass


class DimensionMismatch(LinsplitError, ValueError):
    pass


class FieldMismatch(DimensionMismatch):
    pass


class OutOfRange(LinsplitError, ValueError):
    pass


class ArgOutOfRange(LinsplitError, ValueError):
    pass


class DivisionByZero(LinsplitError, ZeroDivisionError):
    pass


class InfeasibleSweep(LinsplitError):
    pass


class OutsideTheoremRange(LinsplitError):
    pass


class TheoremViolation(AssertionError):
    """A proven identity failed on concrete data. Never expected to happen."""
