"""Exception hierarchy shared by every module."""


class MaxcommError(Exception):
    """Base class for all errors raised by maxcomm."""


class NonPrimeModulus(MaxcommError, ValueError):
    pass


class UnsupportedKind(MaxcommError, ValueError):
    pass


class DomainMismatch(MaxcommError, ValueError):
    pass


class DivisionByZero(MaxcommError, ZeroDivisionError):
    pass


class SplitAlgebraWitness(MaxcommError, ArithmeticError):
    """A nonzero quaternion with zero norm: the configured (a, b) is split."""

    def __init__(self, element):
        super().__init__(f"nonzero element {element!r} has zero norm")
        self.element = element


class IndexOutOfRange(MaxcommError, IndexError):
    pass


class ShapeMismatch(MaxcommError, ValueError):
    pass


class LengthMismatch(MaxcommError, ValueError):
    pass


class Singular(MaxcommError, ArithmeticError):
    pass


class NotCommutative(MaxcommError, ValueError):
    pass


class CharacteristicFallbackTooLarge(MaxcommError, RuntimeError):
    pass


class NilpotentOrInvertibleInput(MaxcommError, ValueError):
    pass


class WitnessSearchExhausted(MaxcommError, RuntimeError):
    pass


class FactorizationUnavailable(MaxcommError, RuntimeError):
    pass


class UnsupportedDomain(MaxcommError, ValueError):
    pass


class InstanceTooLarge(MaxcommError, ValueError):
    pass


class ParseError(MaxcommError, ValueError):
    pass


class VerificationFailed(MaxcommError, AssertionError):
    pass
