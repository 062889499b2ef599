"""Exception types shared across the package."""


class OrbitCountError(Exception):
    """Base class for all errors raised by this package."""


# -- field construction ------------------------------------------------------

class NonPrimeCharacteristic(OrbitCountError):
    pass


class ReducibleModulus(OrbitCountError):
    pass


class UnsupportedSize(OrbitCountError):
    pass


# -- arithmetic --------------------------------------------------------------

class DivisionByZero(OrbitCountError, ZeroDivisionError):
    pass


class MixedFields(OrbitCountError):
    pass


class BothZero(OrbitCountError):
    pass


class NegativeCutoff(OrbitCountError):
    pass


# -- matrices ----------------------------------------------------------------

class ShapeMismatch(OrbitCountError):
    pass


class NotSquare(OrbitCountError):
    pass


class SingularMatrix(OrbitCountError):
    pass


class ZeroColumn(OrbitCountError):
    pass


# -- counting ----------------------------------------------------------------

class InvalidParams(OrbitCountError):
    pass


class BoundTooSmall(OrbitCountError):
    """The degree bound k is below the determinant degree t; the closed-form
    count is only defined for k >= t."""


class PreconditionViolation(OrbitCountError):
    pass


# -- enumeration -------------------------------------------------------------

class BudgetExceeded(OrbitCountError):
    pass


# -- proof moves -------------------------------------------------------------

class NotTriangular(OrbitCountError):
    pass


class BadIndex(OrbitCountError):
    pass


class DegreeTooSmall(OrbitCountError):
    pass


class ZeroPivot(OrbitCountError):
    pass


class NotConstant(OrbitCountError):
    pass


class SingularConjugator(OrbitCountError):
    pass


# -- integer companion -------------------------------------------------------

class NonPositiveDeterminant(OrbitCountError):
    pass


class UnsupportedDimension(OrbitCountError):
    pass


class MissingZetaValue(OrbitCountError):
    pass
