"""
Core exceptions for the line-groupoids system.
"""


class LineGroupoidError(Exception):
    """Base exception for all line-groupoids errors"""
    pass


# --- field arithmetic ---

class FieldError(LineGroupoidError):
    """Raised for number-field arithmetic failures"""
    pass


class FieldMismatchError(FieldError):
    """Raised when elements of different fields are combined"""
    pass


class ZeroInversionError(FieldError, ZeroDivisionError):
    """Raised when inverting the zero element"""
    pass


class NonInvertibleElementError(FieldError):
    """Raised when a nonzero element has no inverse (reducible minimal polynomial)"""
    pass


class PolynomialError(FieldError):
    """Raised when a minimal polynomial is malformed"""
    pass


# --- projective geometry ---

class GeometryError(LineGroupoidError):
    """Raised when a geometric precondition fails"""
    pass


class DimensionMismatchError(GeometryError):
    """Raised when points or matrices have incompatible sizes"""
    pass


class SingularMatrixError(GeometryError):
    """Raised when an invertible matrix is required but the determinant vanishes"""
    pass


class DegenerateTripleError(GeometryError):
    """Raised when a projection triple violates the skewness condition"""

    def __init__(self, message: str, pair: tuple = ()):
        super().__init__(message)
        self.pair = pair


class EndpointMismatchError(GeometryError):
    """Raised when composing morphisms whose endpoints do not agree"""
    pass


class RepeatedPointError(GeometryError):
    """Raised when a point set that must be distinct has a repetition"""
    pass


class KernelDimensionError(GeometryError):
    """Raised when a linear system expected to have a 1-dimensional kernel does not"""
    pass


# --- groups and groupoids ---

class GroupError(LineGroupoidError):
    """Raised for group computation failures"""
    pass


class InfiniteGroupError(GroupError):
    """Raised when a finite group is required but the closure exceeded its cap"""
    pass


class GroupoidError(LineGroupoidError):
    """Raised for groupoid computation failures"""
    pass


class InvalidLineIndexError(GroupoidError):
    """Raised when a line index is outside the configuration"""
    pass


class MissingMarkedPointsError(GroupoidError):
    """Raised when marked points are required but absent"""
    pass


class LabelingError(LineGroupoidError):
    """Raised when no (Z/2Z)^2 labeling of a D4 configuration exists"""
    pass


class CombinatorialRuleError(LineGroupoidError):
    """Raised when the combinatorial projection rule is applied outside its preconditions"""
    pass


# --- configuration ---

class ConfigParseError(LineGroupoidError):
    """Raised when a configuration document cannot be parsed"""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class UnknownBuiltinError(LineGroupoidError):
    """Raised when a built-in configuration name is not registered"""
    pass


class ConfigurationError(LineGroupoidError):
    """Raised when configuration is invalid"""
    pass


class UsageError(LineGroupoidError):
    """Raised when command-line arguments are inconsistent or malformed"""
    pass
