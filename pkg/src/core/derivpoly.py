"""
Derivative polynomials of tanh and sech, the a/b/d families, and the
tangent/secant numbers of order k.

P~_n and Q~_n express the n-th derivatives of tanh and sech as polynomials in
tanh:

    P~_{n+1} = (1 - x^2) P~_n',             P~_0 = x
    Q~_{n+1} = (1 - x^2) Q~_n' - x Q~_n,    Q~_0 = 1

and the Eulerian polynomials map onto signed, rescaled copies of them under
x -> (x-1)/(x+1).
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from ..utils.exceptions import CalculationError, DomainError
from ..utils.log import log_operation
from ..utils.types import CoxeterType, FamilyTag, OrderKind, Report, SeriesKind
from .polyarith import CAYLEY_MAP, Poly, mobius_compose
from .series import DEFAULT_SERIES_ORDER, series_coeffs

logger = logging.getLogger(__name__)

ONE_MINUS_X_SQUARED = Poly.from_coeffs([1, 0, -1])
X_SQUARED_MINUS_ONE = Poly.from_coeffs([-1, 0, 1])


def _check_index(n: int) -> None:
    if n < 0:
        raise DomainError(f"Index must be nonnegative, got {n}")


@lru_cache(maxsize=None)
def p_tilde(n: int) -> Poly:
    """Derivative polynomial of tanh: d^n/dt^n tanh(t) = P~_n(tanh t)."""
    _check_index(n)
    if n == 0:
        return Poly.x()
    return ONE_MINUS_X_SQUARED * p_tilde(n - 1).derivative()


@lru_cache(maxsize=None)
def q_tilde(n: int) -> Poly:
    """Derivative polynomial of sech: d^n/dt^n sech(t) = sech(t) Q~_n(tanh t)."""
    _check_index(n)
    if n == 0:
        return Poly.constant(1)
    prev = q_tilde(n - 1)
    return ONE_MINUS_X_SQUARED * prev.derivative() - Poly.x() * prev


@lru_cache(maxsize=None)
def a_by_recurrence(n: int) -> Poly:
    """a_{n+1} = (x^2 - 1) a_n' from a_0 = x."""
    _check_index(n)
    if n == 0:
        return Poly.x()
    return X_SQUARED_MINUS_ONE * a_by_recurrence(n - 1).derivative()


@lru_cache(maxsize=None)
def b_by_recurrence(n: int) -> Poly:
    """b_{n+1} = 2(x^2 - 1) b_n' + 2x b_n from b_0 = 1."""
    _check_index(n)
    if n == 0:
        return Poly.constant(1)
    prev = b_by_recurrence(n - 1)
    return X_SQUARED_MINUS_ONE * prev.derivative() * 2 + Poly.x() * prev * 2


def _d_from_transforms(n: int) -> Poly:
    # 2^n d_n = b_n - n 2^(n-1) a_(n-1)
    b_n = family_poly(FamilyTag.B, n)
    a_prev = family_poly(FamilyTag.A, n - 1)
    return (b_n - a_prev * (n * 2 ** (n - 1))) * Fraction(1, 2**n)


def _d_from_derivatives(n: int) -> Poly:
    # 2 d_n = (-1)^n (n P~_(n-1) + 2 Q~_n)
    return (p_tilde(n - 1) * n + q_tilde(n) * 2) * Fraction((-1) ** n, 2)


@lru_cache(maxsize=None)
def family_poly(tag: FamilyTag, n: int) -> Poly:
    """
    P~_n, Q~_n, a_n = (-1)^n P~_n, b_n = (-1)^n 2^n Q~_n, or d_n (n >= 2).

    d_n is built from b_n and a_(n-1) and again from P~ and Q~; a mismatch
    raises CalculationError.
    """
    tag = FamilyTag(tag)
    _check_index(n)
    if tag is FamilyTag.PTILDE:
        return p_tilde(n)
    if tag is FamilyTag.QTILDE:
        return q_tilde(n)
    if tag is FamilyTag.A:
        return p_tilde(n) * (-1) ** n
    if tag is FamilyTag.B:
        return q_tilde(n) * ((-1) ** n * 2**n)
    if n < 2:
        raise DomainError(f"d_n is defined for n >= 2, got {n}")
    via_transforms = _d_from_transforms(n)
    via_derivatives = _d_from_derivatives(n)
    if via_transforms != via_derivatives:
        raise CalculationError(
            f"The two constructions of d_{n} disagree",
            details={"transforms": str(via_transforms), "derivatives": str(via_derivatives)},
        )
    return via_transforms


def family_table(tag: FamilyTag, n_max: int) -> List[Tuple[int, Poly]]:
    """Rows (n, polynomial) up to n_max; d starts at n = 2."""
    tag = FamilyTag(tag)
    start = 2 if tag is FamilyTag.D else 0
    return [(n, family_poly(tag, n)) for n in range(start, n_max + 1)]


def orderk_number(kind: OrderKind, n: int, k: int, order: Optional[int] = None) -> int:
    """
    T(n, k) = n! [x^n] tan^k x  or  S(n, k) = n! [x^n] sec x tan^k x.

    The series is taken to max(n, DEFAULT_SERIES_ORDER) terms unless an explicit
    order is given, so small indices share one cached expansion.
    """
    kind = OrderKind(kind)
    if k < 0 or k > n:
        raise DomainError(f"Order-k numbers need 0 <= k <= n, got n={n}, k={k}")
    if order is None:
        order = max(n, DEFAULT_SERIES_ORDER)
    if order < n:
        raise DomainError(f"Series order {order} is below n={n}")
    series_kind = SeriesKind.TAN_POW_K if kind is OrderKind.T else SeriesKind.SEC_TAN_POW_K
    value = series_coeffs(series_kind, k, order).exponential_coefficient(n)
    if value.denominator != 1:
        raise CalculationError(f"{kind.value}({n},{k}) = {value} is not an integer")
    return int(value)


def _signed_term(exponent2: int, value: int) -> Fraction:
    """(-1)^(exponent2/2) * value; odd exponent2 only occurs against a zero value."""
    if exponent2 % 2:
        if value != 0:
            raise CalculationError(
                f"Non-integral sign exponent {exponent2}/2 met a nonzero value {value}"
            )
        return Fraction(0)
    return Fraction((-1) ** (exponent2 // 2) * value)


def cvijovic_reconstruct(n: int, order: Optional[int] = None) -> Tuple[Poly, Poly]:
    """
    Rebuild P~_n and Q~_n from order-k tangent and secant numbers:

        P~_n = (-1)^((n-1)/2) T(n,1) + sum_{k=1}^{n+1} (-1)^((n+k-1)/2) T(n+1,k) x^k / k
        Q~_n = sum_{k=0}^{n} (-1)^((n+k)/2) S(n,k) x^k
    """
    if n < 1:
        raise DomainError(f"Reconstruction needs n >= 1, got {n}")
    p_coeffs = [_signed_term(n - 1, orderk_number(OrderKind.T, n, 1, order))]
    for k in range(1, n + 2):
        t = orderk_number(OrderKind.T, n + 1, k, order)
        p_coeffs.append(_signed_term(n + k - 1, t) / k)
    q_coeffs = [
        _signed_term(n + k, orderk_number(OrderKind.S, n, k, order)) for k in range(n + 1)
    ]
    return Poly(tuple(p_coeffs)), Poly(tuple(q_coeffs))


def cvijovic_check(n: int, order: Optional[int] = None) -> Report:
    report = Report()
    p_rebuilt, q_rebuilt = cvijovic_reconstruct(n, order)
    report.add("cvijovic_ptilde", n, p_tilde(n), p_rebuilt)
    report.add("cvijovic_qtilde", n, q_tilde(n), q_rebuilt)
    return report


@log_operation
def verify_cvijovic(n_max: int, order: Optional[int] = None) -> Report:
    """Reconstruction checks for n = 1..n_max; an explicit order must reach n_max + 1."""
    if order is not None and order < n_max + 1:
        raise DomainError(f"Series order {order} is below n_max + 1 = {n_max + 1}")
    report = Report()
    for n in range(1, n_max + 1):
        report.extend(cvijovic_check(n, order))
    return report


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@log_operation
def special_values(n_max: int, series_order: int = DEFAULT_SERIES_ORDER) -> Report:
    """
    Values at -1 and 0 tying A_n, B_n, D_n, d_n, P~_n and Q~_n to the tanh/sech
    generating functions and to T(n,1), S(n,0).

    Each row is indexed by the degree m of the polynomial it inspects.
    """
    from .eulerian import eulerian_fast

    if n_max < 2:
        raise DomainError(f"special_values needs n_max >= 2, got {n_max}")
    if series_order < n_max:
        raise DomainError(f"Series order {series_order} is below n_max={n_max}")

    one_plus_tanh = series_coeffs(SeriesKind.TANH, order=series_order) + 1
    sech_2x = series_coeffs(SeriesKind.SECH, order=series_order).rescale(2)

    def t1(m: int) -> int:
        return orderk_number(OrderKind.T, m, 1, series_order)

    def s0(m: int) -> int:
        return orderk_number(OrderKind.S, m, 0, series_order)

    report = Report()
    for m in range(n_max + 1):
        a_val = eulerian_fast(CoxeterType.A, m)(-1)
        b_val = eulerian_fast(CoxeterType.B, m)(-1)
        report.add("tanh_generating_function", m, one_plus_tanh.exponential_coefficient(m), -a_val)
        report.add("sech_generating_function", m, sech_2x.exponential_coefficient(m), b_val)

        if m % 2:
            report.add("ptilde_odd_at_zero", m, (-1) ** ((m - 1) // 2) * t1(m), p_tilde(m)(0))
            report.add("qtilde_odd_at_zero", m, 0, q_tilde(m)(0))
        else:
            report.add("qtilde_even_at_zero", m, (-1) ** (m // 2) * s0(m), q_tilde(m)(0))
            report.add("ptilde_even_at_zero", m, 0, p_tilde(m)(0))

        if m < 2:
            continue
        d_poly = eulerian_fast(CoxeterType.D, m)
        d_at_minus_one = d_poly(-1)
        d_small = family_poly(FamilyTag.D, m)
        report.add("d_at_minus_one", m, (-1) ** m, d_small(-1))
        report.add("D_at_minus_one_vs_d_at_zero", m, 2**m * d_small(0), d_at_minus_one)
        if m % 2 == 0:
            half = m // 2
            report.add(
                "D_even_at_minus_one",
                m,
                (-4) ** half * (s0(m) - half * t1(m - 1)),
                d_at_minus_one,
            )
            report.add(
                "d_even_at_zero",
                m,
                half * p_tilde(m - 1)(0) + q_tilde(m)(0),
                d_small(0),
            )
        elif m >= 3:
            report.add("D_odd_at_minus_one", m, 0, d_at_minus_one)
        if m >= 3:
            expected_sign = 0 if m % 2 else (-1) ** (m // 2)
            report.add("D_sign_at_minus_one", m, expected_sign, _sign(d_at_minus_one))

    if not report.passed:
        logger.warning(f"special_values: {len(report.failures)} failing check(s)")
    return report


def _lead(p: Poly) -> Fraction:
    return p.leading_coefficient


def _descent_recurrence_a(n: int) -> Poly:
    # A_n = n x A_(n-1) + x(1 - x) A_(n-1)', A_0 = x
    poly = Poly.x()
    x_one_minus_x = Poly.from_coeffs([0, 1, -1])
    for m in range(1, n + 1):
        poly = Poly.x() * poly * m + x_one_minus_x * poly.derivative()
    return poly


def _descent_recurrence_b(n: int) -> Poly:
    # B_n = (1 + (2n-1)x) B_(n-1) + 2x(1 - x) B_(n-1)', B_0 = 1
    poly = Poly.constant(1)
    x_one_minus_x = Poly.from_coeffs([0, 1, -1])
    for m in range(1, n + 1):
        poly = Poly.from_coeffs([1, 2 * m - 1]) * poly + x_one_minus_x * poly.derivative() * 2
    return poly


@log_operation
def verify_transforms(n_max: int) -> Report:
    """
    Transform round trips between A/B/D and a/b/d, the direct a/b recurrences,
    both d constructions and the leading coefficients of a_n, b_n, d_n.
    """
    from .eulerian import eulerian_fast

    if n_max < 2:
        raise DomainError(f"verify_transforms needs n_max >= 2, got {n_max}")
    report = Report()
    for n in range(2, n_max + 1):
        a_n = family_poly(FamilyTag.A, n)
        b_n = family_poly(FamilyTag.B, n)
        d_n = family_poly(FamilyTag.D, n)
        big_a = _descent_recurrence_a(n)
        big_b = _descent_recurrence_b(n)

        report.add("eulerian_fast_A_matches_recurrence", n, big_a, eulerian_fast(CoxeterType.A, n))
        report.add("eulerian_fast_B_matches_recurrence", n, big_b, eulerian_fast(CoxeterType.B, n))
        report.add("forward_transform_A", n, a_n, mobius_compose(big_a, CAYLEY_MAP, n + 1))
        report.add("forward_transform_B", n, b_n, mobius_compose(big_b, CAYLEY_MAP, n))
        report.add(
            "forward_transform_D",
            n,
            d_n,
            mobius_compose(eulerian_fast(CoxeterType.D, n), CAYLEY_MAP, n) * Fraction(1, 2**n),
        )
        report.add("a_direct_recurrence", n, a_n, a_by_recurrence(n))
        report.add("b_direct_recurrence", n, b_n, b_by_recurrence(n))
        report.add("d_two_constructions", n, _d_from_transforms(n), _d_from_derivatives(n))
        report.add(
            "d_split_identity",
            n,
            d_n,
            b_n * Fraction(1, 2**n) - family_poly(FamilyTag.A, n - 1) * Fraction(n, 2),
        )
        report.add("lead_a", n, math.factorial(n), _lead(a_n))
        report.add("lead_b", n, math.factorial(n) * 2**n, _lead(b_n))
        report.add("lead_d", n, Fraction(math.factorial(n), 2), _lead(d_n))
    return report
