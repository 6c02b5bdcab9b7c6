"""Exact dense polynomial arithmetic over the rationals."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from typing import Iterable, List, Sequence, Tuple, Union

from ..utils.exceptions import DegenerateMapError, DomainError, ZeroPolynomialError

logger = logging.getLogger(__name__)

Rational = Fraction
Scalar = Union[int, Fraction]


def to_rational(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce an int, a Fraction or a "num/den" string to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"Cannot convert {type(value).__name__} to a rational")


@dataclass(frozen=True)
class Poly:
    """
    Dense univariate polynomial with rational coefficients.

    ``coeffs[i]`` is the coefficient of x^i. Trailing zeros are stripped on
    construction, so the zero polynomial is the empty tuple and its degree is
    reported as -1 (standing in for minus infinity).
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        values = [to_rational(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Union[int, str, Fraction]]) -> "Poly":
        return cls(tuple(to_rational(c) for c in coeffs))

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        return cls((to_rational(value),))

    @classmethod
    def monomial(cls, k: int, coefficient: Scalar = 1) -> "Poly":
        return cls(tuple([Fraction(0)] * k + [to_rational(coefficient)]))

    @classmethod
    def x(cls) -> "Poly":
        return cls.monomial(1)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            raise ZeroPolynomialError("The zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    @cached_property
    def primitive(self) -> Tuple[Fraction, Tuple[int, ...]]:
        return primitive_part(self)

    def sign_at(self, x0: Scalar) -> int:
        """Sign of p(x0), computed on the primitive integer form."""
        if self.is_zero:
            return 0
        content, ints = self.primitive
        value = int_eval_scaled(ints, to_rational(x0))
        return _sign(value) * _sign(content)

    def __add__(self, other: Union["Poly", Scalar]) -> "Poly":
        return poly_add(self, _lift(other))

    __radd__ = __add__

    def __sub__(self, other: Union["Poly", Scalar]) -> "Poly":
        return poly_add(self, poly_neg(_lift(other)))

    def __rsub__(self, other: Union["Poly", Scalar]) -> "Poly":
        return poly_add(_lift(other), poly_neg(self))

    def __neg__(self) -> "Poly":
        return poly_neg(self)

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return poly_scale(self, to_rational(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise DomainError("Negative powers are not polynomials")
        result = Poly.constant(1)
        for _ in range(k):
            result = poly_mul(result, self)
        return result

    def __call__(self, x0: Scalar) -> Fraction:
        return poly_eval(self, to_rational(x0))

    def derivative(self) -> "Poly":
        return poly_derivative(self)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            body = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if body and abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}{'*' if body else ''}{body}"
            terms.append(("-" if c < 0 else "+", text))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in terms[1:]:
            out += f" {sign} {text}"
        return out


def _lift(value: Union[Poly, Scalar]) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


def _sign(value: Union[int, Fraction]) -> int:
    return (value > 0) - (value < 0)


def poly_add(p: Poly, q: Poly) -> Poly:
    """Coefficient-wise sum."""
    n = max(len(p.coeffs), len(q.coeffs))
    return Poly(tuple(p.coefficient(i) + q.coefficient(i) for i in range(n)))


def poly_neg(p: Poly) -> Poly:
    """Negation."""
    return Poly(tuple(-c for c in p.coeffs))


def poly_scale(p: Poly, c: Scalar) -> Poly:
    """Multiply every coefficient by the rational c."""
    c = to_rational(c)
    return Poly(tuple(c * a for a in p.coeffs))


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Schoolbook convolution product."""
    if p.is_zero or q.is_zero:
        return Poly()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Poly(tuple(out))


def poly_derivative(p: Poly) -> Poly:
    """Formal derivative."""
    return Poly(tuple(k * p.coeffs[k] for k in range(1, len(p.coeffs))))


def poly_eval(p: Poly, x0: Fraction) -> Fraction:
    """Horner evaluation; the zero polynomial evaluates to 0."""
    x0 = to_rational(x0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def poly_divmod(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    """Euclidean division over the rationals: p = quotient*q + remainder."""
    if q.is_zero:
        raise ZeroPolynomialError("Division by the zero polynomial")
    remainder = list(p.coeffs)
    dq = q.degree
    lead = q.leading_coefficient
    quotient = [Fraction(0)] * max(len(remainder) - dq, 0)
    while len(remainder) - 1 >= dq and remainder:
        k = len(remainder) - 1 - dq
        factor = remainder[-1] / lead
        quotient[k] = factor
        for i, c in enumerate(q.coeffs):
            remainder[i + k] -= factor * c
        remainder.pop()
        while remainder and remainder[-1] == 0:
            remainder.pop()
    return Poly(tuple(quotient)), Poly(tuple(remainder))


def poly_exact_div(p: Poly, q: Poly) -> Poly:
    """Quotient p / q; raises DomainError unless q divides p."""
    quotient, remainder = poly_divmod(p, q)
    if not remainder.is_zero:
        raise DomainError(f"{q} does not divide {p}")
    return quotient


def monic(p: Poly) -> Poly:
    """p scaled to leading coefficient 1 (zero stays zero)."""
    if p.is_zero:
        return p
    return poly_scale(p, 1 / p.leading_coefficient)


def int_prem(a: Sequence[int], b: Sequence[int]) -> Tuple[List[int], int]:
    """
    Pseudo-remainder of integer polynomials (ascending coefficients).

    Returns (r, s) with r = lc(b)^k * (a mod b) for the number k of reduction
    steps taken, and s the sign of lc(b)^k.
    """
    if not b:
        raise ZeroPolynomialError("Pseudo-division by the zero polynomial")
    r = list(a)
    lead = b[-1]
    db = len(b) - 1
    steps = 0
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lead * v for v in r]
        for j, bj in enumerate(b):
            r[shift + j] -= c * bj
        steps += 1
        while r and r[-1] == 0:
            r.pop()
    sign = -1 if lead < 0 and steps % 2 else 1
    return r, sign


def int_primitive(ints: Sequence[int]) -> List[int]:
    """Divide out the positive content of an integer coefficient list."""
    g = reduce(math.gcd, (abs(v) for v in ints), 0)
    if g in (0, 1):
        return list(ints)
    return [v // g for v in ints]


@lru_cache(maxsize=2048)
def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (zero only when both inputs are zero)."""
    if p.is_zero or q.is_zero:
        return monic(q if p.is_zero else p)
    a, b = list(p.primitive[1]), list(q.primitive[1])
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, int_primitive(int_prem(a, b)[0])
    return monic(Poly(tuple(Fraction(v) for v in a)))


def primitive_part(p: Poly) -> Tuple[Fraction, Tuple[int, ...]]:
    """
    Split p into content and primitive integer part.

    Returns (c, ints) with p = c * sum(ints[i] x^i), gcd(ints) = 1 and the
    leading integer positive. The zero polynomial maps to (0, ()).
    """
    if p.is_zero:
        return Fraction(0), ()
    denominator = reduce(lambda acc, c: acc * c.denominator // math.gcd(acc, c.denominator),
                         p.coeffs, 1)
    scaled = [int(c * denominator) for c in p.coeffs]
    g = reduce(math.gcd, (abs(v) for v in scaled), 0)
    if scaled[-1] < 0:
        g = -g
    ints = tuple(v // g for v in scaled)
    return Fraction(g, denominator), ints


def primitive(p: Poly) -> Poly:
    """Primitive integer associate of p with positive leading coefficient."""
    return Poly(tuple(Fraction(v) for v in p.primitive[1]))


def int_eval_scaled(ints: Sequence[int], x0: Fraction) -> int:
    """
    Evaluate an integer polynomial at a/b scaled by b^deg.

    The result has the sign of p(a/b) because b > 0.
    """
    if not ints:
        return 0
    a, b = x0.numerator, x0.denominator
    acc = ints[-1]
    bpow = 1
    for c in reversed(ints[:-1]):
        bpow *= b
        acc = acc * a + c * bpow
    return acc


@dataclass(frozen=True)
class MobiusMap:
    """The substitution x -> (alpha*x + beta) / (gamma*x + delta)."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    delta: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma", "delta"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        if self.determinant == 0:
            raise DegenerateMapError(
                "Mobius map is degenerate (alpha*delta == beta*gamma)",
                details=(self.alpha, self.beta, self.gamma, self.delta),
            )

    @property
    def determinant(self) -> Fraction:
        return self.alpha * self.delta - self.beta * self.gamma

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.delta, -self.beta, -self.gamma, self.alpha)


IDENTITY_MAP = MobiusMap(1, 0, 0, 1)
# x -> (x-1)/(x+1) carries A_n, B_n, D_n to a_n, b_n, d_n; its inverse goes back.
CAYLEY_MAP = MobiusMap(1, -1, 1, 1)
CAYLEY_INVERSE = CAYLEY_MAP.inverse()


def mobius_compose(p: Poly, m: MobiusMap, hom_degree: int) -> Poly:
    """
    Return (gamma*x + delta)^hom_degree * p((alpha*x + beta)/(gamma*x + delta)).

    Horner in the numerator over precomputed powers of the denominator.
    """
    if hom_degree < p.degree:
        raise DomainError(
            f"Homogenization degree {hom_degree} is below the degree {p.degree} of the input"
        )
    if p.is_zero:
        return Poly()
    numerator = Poly((m.beta, m.alpha))
    denominator = Poly((m.delta, m.gamma))
    den_powers: List[Poly] = [Poly.constant(1)]
    for _ in range(hom_degree):
        den_powers.append(poly_mul(den_powers[-1], denominator))
    acc = Poly()
    for i in range(p.degree, -1, -1):
        acc = poly_add(poly_mul(acc, numerator), poly_scale(den_powers[hom_degree - i], p.coeffs[i]))
    return acc


def is_proportional(p: Poly, q: Poly) -> bool:
    """True when q = c*p for some nonzero rational c."""
    if p.is_zero or q.is_zero:
        return p.is_zero and q.is_zero
    return monic(p) == monic(q)


def squarefree_part(p: Poly) -> Poly:
    """Primitive square-free part p / gcd(p, p')."""
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no square-free part")
    return primitive(poly_exact_div(p, poly_gcd(p, poly_derivative(p))))


def poly_gcd_squarefree(p: Poly) -> List[Tuple[Poly, int]]:
    """
    Yun square-free decomposition.

    Returns pairwise coprime square-free factors (primitive, positive leading
    coefficient) with multiplicities; their product reconstructs p up to a
    rational constant. Constants decompose to the empty list.
    """
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no square-free decomposition")
    if p.degree == 0:
        return []
    derivative = poly_derivative(p)
    a = poly_gcd(p, derivative)
    b = poly_exact_div(p, a)
    c = poly_exact_div(derivative, a)
    d = poly_add(c, poly_neg(poly_derivative(b)))
    factors: List[Tuple[Poly, int]] = []
    multiplicity = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = poly_exact_div(b, a)
        c = poly_exact_div(d, a)
        d = poly_add(c, poly_neg(poly_derivative(b)))
        if a.degree > 0:
            factors.append((primitive(a), multiplicity))
        multiplicity += 1
    logger.debug(f"Square-free decomposition of degree {p.degree}: {len(factors)} factor(s)")
    return factors
