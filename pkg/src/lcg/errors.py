"""Exception hierarchy shared by every module in the package."""


class LCGError(Exception):
    """Base class for all errors raised by lcg."""


# finite fields
class NonPrimeP(LCGError, ValueError):
    pass


class ReducibleModulus(LCGError, ValueError):
    pass


class DegreeMismatch(LCGError, ValueError):
    pass


class ZeroInverse(LCGError, ZeroDivisionError):
    pass


class FieldMismatch(LCGError, ValueError):
    pass


class NotASquare(LCGError, ValueError):
    pass


# linear algebra
class DimensionMismatch(LCGError, ValueError):
    pass


# Lie algebras
class IndexOutOfRange(LCGError, IndexError):
    pass


class JacobiViolation(LCGError, ValueError):
    def __init__(self, i, j, k, residual=None):
        self.triple = (i, j, k)
        self.residual = residual
        super().__init__(f"Jacobi identity fails on basis triple (e{i}, e{j}, e{k})")


# commuting graphs
class CommutativeAlgebra(LCGError, ValueError):
    pass


class NotAVertex(LCGError, ValueError):
    pass


class TooLarge(LCGError, ValueError):
    pass


class NotAComponent(LCGError, ValueError):
    pass


class NotWindmill(LCGError, ValueError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)


# catalog
class ConditionViolated(LCGError, ValueError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)


class UnsatisfiableOverFiniteField(ConditionViolated):
    pass
