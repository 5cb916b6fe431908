"""Exception hierarchy shared by every module."""


class SemigroupError(ValueError):
    """Base class for invalid semigroup input."""


class EmptyInput(SemigroupError):
    pass


class NonCoprime(SemigroupError):
    def __init__(self, gcd):
        self.gcd = gcd
        super().__init__(f"gcd is {gcd}; divide it out first")


class NotMinimal(SemigroupError):
    def __init__(self, redundant):
        self.redundant = redundant
        super().__init__(f"generator {redundant} is redundant")


class ZeroGenerator(SemigroupError):
    pass


class DimensionMismatch(SemigroupError):
    pass


class UnsupportedOrder(SemigroupError):
    pass


class ModeMismatch(SemigroupError):
    pass


class BoundTooSmall(SemigroupError):
    pass


class ArithmeticOverflow(OverflowError):
    """A value left the signed 64-bit range."""

    def __init__(self, operation, value):
        self.operation = operation
        super().__init__(f"{operation}: {value} does not fit in 64 bits")


class GenusBoundExceeded(SemigroupError):
    pass


INT64_MAX = 2**63 - 1


def checked(value, operation):
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise ArithmeticOverflow(operation, value)
    return value
