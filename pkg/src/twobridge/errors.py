"""Exception types raised by the twobridge package."""


class DomainError(ValueError):
    """An input lies outside the domain of the operation."""


class DivisionByZero(ZeroDivisionError):
    """A continued fraction hit a vanishing intermediate denominator."""


class LengthMismatch(ValueError):
    pass


class NotAllowable(ValueError):
    """The smoothing is not in the allowable set for the expansion."""


class IntegralityViolation(ArithmeticError):
    """A weight numerator came out odd. Signals an internal inconsistency."""


class IndexOutOfRange(IndexError):
    pass
