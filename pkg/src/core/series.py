"""Truncated Maclaurin series with exact rational coefficients."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple, Union

from ..utils.exceptions import DomainError, SingularSeriesError
from ..utils.types import SeriesKind
from .polyarith import to_rational

logger = logging.getLogger(__name__)

DEFAULT_SERIES_ORDER = 32


@dataclass(frozen=True)
class SeriesTruncated:
    """
    Coefficients c_0..c_N of a power series (ordinary normalization).

    Binary operations truncate to the smaller of the two orders.
    """

    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise DomainError("A truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(to_rational(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value: Union[int, Fraction], order: int) -> "SeriesTruncated":
        return cls((to_rational(value),) + (Fraction(0),) * order)

    def coefficient(self, n: int) -> Fraction:
        if n > self.order:
            raise DomainError(f"Coefficient {n} is beyond the series order {self.order}")
        return self.coeffs[n]

    def exponential_coefficient(self, n: int) -> Fraction:
        """n! times the coefficient of x^n."""
        return self.coefficient(n) * math.factorial(n)

    def truncate(self, order: int) -> "SeriesTruncated":
        return SeriesTruncated(self.coeffs[: order + 1])

    def __add__(self, other: Union["SeriesTruncated", int, Fraction]) -> "SeriesTruncated":
        if not isinstance(other, SeriesTruncated):
            other = SeriesTruncated.constant(other, self.order)
        n = min(self.order, other.order)
        return SeriesTruncated(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> "SeriesTruncated":
        return SeriesTruncated(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "SeriesTruncated") -> "SeriesTruncated":
        return self + (-other)

    def __mul__(self, other: Union["SeriesTruncated", int, Fraction]) -> "SeriesTruncated":
        if not isinstance(other, SeriesTruncated):
            c = to_rational(other)
            return SeriesTruncated(tuple(c * a for a in self.coeffs))
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return SeriesTruncated(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: "SeriesTruncated") -> "SeriesTruncated":
        if other.coeffs[0] == 0:
            raise SingularSeriesError("Cannot divide by a series with zero constant term")
        n = min(self.order, other.order)
        head = other.coeffs[0]
        out = []
        for k in range(n + 1):
            acc = self.coeffs[k] - sum(
                (out[i] * other.coeffs[k - i] for i in range(k)), Fraction(0)
            )
            out.append(acc / head)
        return SeriesTruncated(tuple(out))

    def __pow__(self, k: int) -> "SeriesTruncated":
        if k < 0:
            raise DomainError("Negative powers of a series are not supported")
        result = SeriesTruncated.constant(1, self.order)
        for _ in range(k):
            result = result * self
        return result

    def rescale(self, c: Union[int, Fraction]) -> "SeriesTruncated":
        """The series of f(c*x)."""
        c = to_rational(c)
        return SeriesTruncated(tuple(a * c**n for n, a in enumerate(self.coeffs)))


def sin_series(order: int) -> SeriesTruncated:
    return SeriesTruncated(
        tuple(
            Fraction((-1) ** (n // 2), math.factorial(n)) if n % 2 else Fraction(0)
            for n in range(order + 1)
        )
    )


def cos_series(order: int) -> SeriesTruncated:
    return SeriesTruncated(
        tuple(
            Fraction((-1) ** (n // 2), math.factorial(n)) if n % 2 == 0 else Fraction(0)
            for n in range(order + 1)
        )
    )


def _hyperbolic_twist(series: SeriesTruncated) -> SeriesTruncated:
    # f(ix)/i^p for odd/even f: the x^n coefficient picks up (-1)^(n//2).
    return SeriesTruncated(tuple(c * (-1) ** (n // 2) for n, c in enumerate(series.coeffs)))


@lru_cache(maxsize=256)
def _circular(kind: SeriesKind, k: int, order: int) -> SeriesTruncated:
    tan = sin_series(order) / cos_series(order)
    sec = SeriesTruncated.constant(1, order) / cos_series(order)
    if kind is SeriesKind.TAN:
        return tan
    if kind is SeriesKind.SEC:
        return sec
    if kind is SeriesKind.TAN_POW_K:
        return tan**k
    if kind is SeriesKind.SEC_TAN_POW_K:
        return sec * tan**k
    raise DomainError(f"{kind.value} is not a circular series")


def series_coeffs(kind: SeriesKind, k: int = 0, order: int = DEFAULT_SERIES_ORDER) -> SeriesTruncated:
    """
    Truncated Maclaurin series of tan, sec, tanh, sech, tan^k or sec*tan^k.

    Circular series come from dividing the sin/cos series; the hyperbolic ones
    are the circular coefficients with the sign (-1)^(n//2) applied.
    """
    if order < 0:
        raise DomainError(f"Series order must be nonnegative, got {order}")
    if k < 0:
        raise DomainError(f"Power k must be nonnegative, got {k}")
    kind = SeriesKind(kind)
    if kind is SeriesKind.TANH:
        return _hyperbolic_twist(_circular(SeriesKind.TAN, 0, order))
    if kind is SeriesKind.SECH:
        return _hyperbolic_twist(_circular(SeriesKind.SEC, 0, order))
    return _circular(kind, k, order)
