"""Custom exceptions for the application."""

from typing import Any, Optional


class EulerCertError(Exception):
    """Base exception for all application errors."""

    def __init__(self, message: str, details: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.details = details


class ConfigurationError(EulerCertError):
    """Raised when configuration is invalid."""

    pass


class CapacityError(EulerCertError):
    """Raised when a brute-force enumeration exceeds the configured cap."""

    def __init__(self, message: str, n: int, cap: int, details: Optional[Any] = None):
        super().__init__(message, details)
        self.n = n
        self.cap = cap


class InvalidElementError(EulerCertError):
    """Raised when a signed permutation is not valid for the requested group."""

    pass


class DomainError(EulerCertError):
    """Raised when an argument lies outside the domain of an operation."""

    pass


class DegenerateMapError(DomainError):
    """Raised when a Mobius map has zero determinant."""

    pass


class ZeroPolynomialError(DomainError):
    """Raised when an operation needs a nonzero polynomial."""

    pass


class SingularSeriesError(EulerCertError):
    """Raised when dividing by a series with zero constant term."""

    pass


class EndpointRootError(EulerCertError):
    """Raised when a Sturm count endpoint is a root of the polynomial."""

    def __init__(self, message: str, point: Any, details: Optional[Any] = None):
        super().__init__(message, details)
        self.point = point


class NotRealRootedError(EulerCertError):
    """Raised when a polynomial required to be real-rooted is not."""

    def __init__(self, message: str, poly_name: str, details: Optional[Any] = None):
        super().__init__(message, details)
        self.poly_name = poly_name


class DegreeGapError(EulerCertError):
    """Raised when interleaving is requested for incompatible degrees."""

    pass


class LeadingCoefficientError(EulerCertError):
    """Raised when a polynomial must have a positive leading coefficient."""

    pass


class CalculationError(EulerCertError):
    """Raised when two constructions of the same quantity disagree."""

    pass


class SerializationError(EulerCertError):
    """Raised when exact values cannot be parsed or written."""

    pass
