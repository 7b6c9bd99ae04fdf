"""Exception types raised by cyclotrig."""


class CyclotrigError(Exception):
    """Base class for all library errors."""


class InvalidArgument(CyclotrigError, ValueError):
    pass


class DivisionByZero(CyclotrigError, ZeroDivisionError):
    pass


class ConductorMismatch(CyclotrigError, ValueError):
    """Binary operation on elements of different cyclotomic fields."""


class InvalidConductor(CyclotrigError, ValueError):
    """Target conductor is not a multiple of the source conductor."""


class NotAnAutomorphism(CyclotrigError, ValueError):
    """sigma_k requested with gcd(k, n) != 1."""


class PoleError(CyclotrigError, ArithmeticError):
    """tan evaluated where cos vanishes."""


class NotRealQuadratic(CyclotrigError, ValueError):
    pass


class OutOfRange(CyclotrigError, ValueError):
    pass


class NotReal(CyclotrigError, ValueError):
    pass


class PrecisionExhausted(CyclotrigError, ArithmeticError):
    """Sign resolution needed more than the precision ceiling."""


class InvariantViolation(CyclotrigError, RuntimeError):
    """An internal mathematical invariant failed; indicates a bug."""
