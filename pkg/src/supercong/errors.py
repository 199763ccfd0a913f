"""Exception hierarchy shared by all modules."""


class SupercongError(Exception):
    """Base class for library errors."""


class NotPrime(SupercongError, ValueError):
    pass


class EvenPrimeUnsupported(SupercongError, ValueError):
    pass


class PrecisionOverflow(SupercongError, ValueError):
    pass


class PrecisionTooLow(SupercongError, ValueError):
    pass


class DenominatorNotUnit(SupercongError, ValueError):
    pass


class ContextMismatch(SupercongError, ValueError):
    pass


class NonUnit(SupercongError, ArithmeticError):
    pass


class OutOfRange(SupercongError, ValueError):
    pass


class InvalidR(SupercongError, ValueError):
    pass


class NonInvertibleDenominator(SupercongError, ArithmeticError):
    pass


class PoleEncountered(NonInvertibleDenominator):
    """A lower Pochhammer symbol vanished exactly inside the summation range."""


class UnknownCheck(SupercongError, KeyError):
    pass


class UnknownPair(SupercongError, KeyError):
    pass
