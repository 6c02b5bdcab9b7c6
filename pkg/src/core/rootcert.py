"""
Real-root certification over the rationals.

Roots are located with Sturm sequences built on primitive integer square-free
parts and isolated by bisection at dyadic midpoints. Algebraic roots are only
ever compared through gcds, signs and Sturm counts; no floating point is used.
"""

import functools
import logging
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..utils.exceptions import (
    DegreeGapError,
    DomainError,
    EndpointRootError,
    LeadingCoefficientError,
    NotRealRootedError,
    ZeroPolynomialError,
)
from ..utils.log import log_operation
from ..utils.serialization import poly_from_json, poly_to_json, rational_to_str
from ..utils.types import (
    Certificate,
    Checkpoint,
    Claim,
    Comparison,
    Evidence,
    FamilyTag,
    Ordering,
    RegionKind,
    Report,
    RootEntry,
    SignSample,
    Verdict,
    WeightSample,
)
from .polyarith import (
    Poly,
    Scalar,
    int_eval_scaled,
    int_prem,
    int_primitive,
    poly_gcd,
    poly_gcd_squarefree,
    squarefree_part,
    to_rational,
)

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 64
WEIGHT_DENOMINATOR = 16


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def _variations(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


class SturmSequence:
    """
    Sturm chain of the primitive square-free part of a polynomial.

    Successive members are negated primitive pseudo-remainders; the pseudo-
    division multiplier is sign-corrected so every step is a positive multiple
    of the Euclidean remainder.
    """

    def __init__(self, p: Poly):
        if p.is_zero:
            raise ZeroPolynomialError("Sturm sequence of the zero polynomial")
        self.factor = squarefree_part(p) if p.degree > 0 else Poly.constant(1)
        self.chain: List[List[int]] = self._build(list(self.factor.primitive[1]))

    @staticmethod
    def _build(f: List[int]) -> List[List[int]]:
        chain = [f]
        if len(f) < 2:
            return chain
        chain.append(int_primitive([k * f[k] for k in range(1, len(f))]))
        while len(chain[-1]) > 1:
            remainder, sign = int_prem(chain[-2], chain[-1])
            if not remainder:
                break
            chain.append(int_primitive([-sign * v for v in remainder]))
        return chain

    def variations(self, x0: Scalar) -> int:
        x0 = to_rational(x0)
        return _variations([_sign(int_eval_scaled(s, x0)) for s in self.chain])

    def variations_at_infinity(self, positive: bool = True) -> int:
        signs = []
        for s in self.chain:
            lead = _sign(s[-1])
            signs.append(lead if positive or (len(s) - 1) % 2 == 0 else -lead)
        return _variations(signs)

    def count(self, lo: Scalar, hi: Scalar) -> int:
        """Distinct roots in the open interval (lo, hi); endpoints must not be roots."""
        return self.variations(lo) - self.variations(hi)

    @property
    def total(self) -> int:
        """Distinct real roots."""
        return self.variations_at_infinity(False) - self.variations_at_infinity(True)


@functools.lru_cache(maxsize=1024)
def sturm_sequence(p: Poly) -> SturmSequence:
    return SturmSequence(p)


def sturm_count(p: Poly, lo: Scalar, hi: Scalar) -> int:
    """Number of distinct real roots of p in (lo, hi)."""
    if p.is_zero:
        raise ZeroPolynomialError("Cannot count the roots of the zero polynomial")
    lo, hi = to_rational(lo), to_rational(hi)
    if lo >= hi:
        raise DomainError(f"Empty interval ({lo}, {hi})")
    for endpoint in (lo, hi):
        if p.sign_at(endpoint) == 0:
            raise EndpointRootError(f"{endpoint} is a root of {p}", point=endpoint)
    if p.degree == 0:
        return 0
    return sturm_sequence(p).count(lo, hi)


def real_root_count(p: Poly) -> int:
    """Real roots counted with multiplicity."""
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial has infinitely many roots")
    return sum(mult * sturm_sequence(f).total for f, mult in poly_gcd_squarefree(p))


def root_bound(p: Poly) -> Fraction:
    """Power of two strictly above every |root| (Cauchy bound, rounded up)."""
    lead = abs(p.leading_coefficient)
    cauchy = 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))
    bound = Fraction(1)
    while bound <= cauchy:
        bound *= 2
    return bound


@dataclass(frozen=True)
class IsolatingInterval:
    """
    Closed interval [lo, hi] holding exactly one root of a square-free factor.

    lo == hi only for an exact rational root; otherwise neither endpoint is a
    root of the factor.
    """

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1
    factor: Optional[Poly] = field(default=None, compare=False)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self) -> "IsolatingInterval":
        """Halve the interval, keeping the half where the factor changes sign."""
        if self.is_exact:
            return self
        if self.factor is None:
            raise DomainError("Cannot refine an interval with no associated factor")
        mid = (self.lo + self.hi) / 2
        at_mid = self.factor.sign_at(mid)
        if at_mid == 0:
            return replace(self, lo=mid, hi=mid)
        if self.factor.sign_at(self.lo) * at_mid < 0:
            return replace(self, hi=mid)
        return replace(self, lo=mid)

    def to_entry(self, poly: int = 0) -> RootEntry:
        return RootEntry(
            lo=rational_to_str(self.lo),
            hi=rational_to_str(self.hi),
            mult=self.multiplicity,
            poly=poly,
        )


@dataclass
class RootList:
    """Isolating intervals in strictly decreasing order of their roots."""

    roots: List[IsolatingInterval] = field(default_factory=list)

    def __iter__(self) -> Iterator[IsolatingInterval]:
        return iter(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __getitem__(self, i: int) -> IsolatingInterval:
        return self.roots[i]

    @property
    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def expanded(self) -> List[IsolatingInterval]:
        """Each root repeated by its multiplicity."""
        return [r for r in self.roots for _ in range(r.multiplicity)]

    def to_entries(self, poly: int = 0) -> List[RootEntry]:
        return [r.to_entry(poly) for r in self.roots]


def _isolate_factor(seq: SturmSequence, bound: Fraction) -> List[Tuple[Fraction, Fraction]]:
    f = seq.factor
    out: List[Tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, seq.variations(-bound), seq.variations(bound))]
    while stack:
        lo, hi, v_lo, v_hi = stack.pop()
        count = v_lo - v_hi
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if f.sign_at(mid) != 0:
            v_mid = seq.variations(mid)
            stack.append((lo, mid, v_lo, v_mid))
            stack.append((mid, hi, v_mid, v_hi))
            continue
        out.append((mid, mid))
        eps = (hi - lo) / 4
        while True:
            a, b = mid - eps, mid + eps
            if f.sign_at(a) != 0 and f.sign_at(b) != 0 and seq.count(a, b) == 1:
                break
            eps /= 2
        stack.append((lo, a, v_lo, seq.variations(a)))
        stack.append((b, hi, seq.variations(b), v_hi))
    return out


def _separate(intervals: List[IsolatingInterval]) -> List[IsolatingInterval]:
    """Refine until the closed intervals are pairwise disjoint; distinct roots assumed."""
    intervals = list(intervals)
    changed = True
    while changed:
        changed = False
        intervals.sort(key=lambda r: (r.lo, r.hi))
        for i in range(len(intervals) - 1):
            left, right = intervals[i], intervals[i + 1]
            if left.hi >= right.lo:
                intervals[i], intervals[i + 1] = left.refine(), right.refine()
                changed = True
    return sorted(intervals, key=lambda r: r.lo, reverse=True)


@functools.lru_cache(maxsize=512)
def _isolated(p: Poly) -> Tuple[IsolatingInterval, ...]:
    bound = root_bound(p)
    intervals: List[IsolatingInterval] = []
    for factor, mult in poly_gcd_squarefree(p):
        seq = sturm_sequence(factor)
        if seq.factor.degree == 1:
            root = -seq.factor.coeffs[0] / seq.factor.coeffs[1]
            intervals.append(IsolatingInterval(root, root, mult, seq.factor))
            continue
        for lo, hi in _isolate_factor(seq, bound):
            intervals.append(IsolatingInterval(lo, hi, mult, seq.factor))
    logger.debug(f"Isolated {len(intervals)} distinct root(s) of a degree {p.degree} polynomial")
    return tuple(_separate(intervals))


def isolate_roots(p: Poly) -> RootList:
    """All real roots of p, one isolating interval per distinct root."""
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no isolated roots")
    if p.degree < 1:
        raise DomainError(f"Cannot isolate the roots of the constant {p}")
    return RootList(list(_isolated(p)))


def _roots_or_empty(p: Poly) -> RootList:
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial has no isolated roots")
    return RootList() if p.degree == 0 else isolate_roots(p)


def _has_root_in(g: Poly, lo: Fraction, hi: Fraction) -> bool:
    """Whether g vanishes somewhere in the closed interval [lo, hi]."""
    if g.sign_at(lo) == 0 or g.sign_at(hi) == 0:
        return True
    if lo == hi:
        return False
    return sturm_count(g, lo, hi) > 0


def _order(left: IsolatingInterval, right: IsolatingInterval) -> Ordering:
    gcd_checked = False
    while True:
        if left.hi < right.lo:
            return Ordering.LESS
        if right.hi < left.lo:
            return Ordering.GREATER
        if not gcd_checked:
            assert left.factor is not None and right.factor is not None
            g = poly_gcd(left.factor, right.factor)
            lo, hi = max(left.lo, right.lo), min(left.hi, right.hi)
            if g.degree > 0 and _has_root_in(g, lo, hi):
                return Ordering.EQUAL
            gcd_checked = True
        left, right = left.refine(), right.refine()


def _bind(p: Poly, interval: IsolatingInterval) -> IsolatingInterval:
    if interval.factor is not None:
        return interval
    return replace(interval, factor=squarefree_part(p))


def compare_roots(p: Poly, i: IsolatingInterval, q: Poly, j: IsolatingInterval) -> Ordering:
    """Order of the root of p isolated by i against the root of q isolated by j."""
    return _order(_bind(p, i), _bind(q, j))


def _locate(interval: IsolatingInterval, x0: Fraction) -> Ordering:
    """Order of the isolated root against the rational x0."""
    if interval.is_exact:
        return _cmp(interval.lo, x0)
    if x0 < interval.lo:
        return Ordering.GREATER
    if x0 > interval.hi:
        return Ordering.LESS
    assert interval.factor is not None
    at_x = interval.factor.sign_at(x0)
    if at_x == 0:
        return Ordering.EQUAL
    if interval.factor.sign_at(interval.lo) * at_x < 0:
        return Ordering.LESS
    return Ordering.GREATER


def _cmp(a: Fraction, b: Fraction) -> Ordering:
    if a < b:
        return Ordering.LESS
    if a > b:
        return Ordering.GREATER
    return Ordering.EQUAL


def _separate_pair(
    upper: IsolatingInterval, lower: IsolatingInterval
) -> Tuple[IsolatingInterval, IsolatingInterval]:
    """Refine two intervals of distinct roots (upper's root larger) until disjoint."""
    while not lower.hi < upper.lo:
        upper, lower = upper.refine(), lower.refine()
    return upper, lower


def sign_at_root(p: Poly, interval: IsolatingInterval) -> int:
    """
    Sign of p at the algebraic root isolated by interval.

    Zero is detected through gcd(p, factor); otherwise the interval is refined
    until p has no root on it and p is sampled at its lower end.
    """
    if p.is_zero:
        return 0
    current = interval
    if not current.is_exact:
        assert current.factor is not None
        g = poly_gcd(p, current.factor)
        if g.degree > 0 and _has_root_in(g, current.lo, current.hi):
            return 0
    while True:
        if current.is_exact:
            return p.sign_at(current.lo)
        s_lo, s_hi = p.sign_at(current.lo), p.sign_at(current.hi)
        if s_lo != 0 and s_lo == s_hi and (p.degree == 0 or sturm_count(p, current.lo, current.hi) == 0):
            return s_lo
        current = current.refine()


def nf_at(f: Poly, x0: Scalar) -> int:
    """Real roots of f in [x0, inf), with multiplicity."""
    x0 = to_rational(x0)
    return sum(
        r.multiplicity
        for r in _roots_or_empty(f)
        if _locate(r, x0) in (Ordering.GREATER, Ordering.EQUAL)
    )


def _require_real_rooted(p: Poly, name: str) -> RootList:
    roots = _roots_or_empty(p)
    if roots.total_multiplicity != p.degree:
        raise NotRealRootedError(
            f"{name} has {roots.total_multiplicity} real root(s) but degree {p.degree}",
            poly_name=name,
        )
    return roots


_RELATION = {Ordering.GREATER: ">", Ordering.EQUAL: "=", Ordering.LESS: "<"}


def check_interleaving(
    f: Poly, big_f: Poly, strict: bool = False, names: Tuple[str, str] = ("f", "F")
) -> Certificate:
    """
    Whether F interleaves f: s1 >= r1 >= s2 >= r2 >= ... with s the roots of F
    and r the roots of f, both with multiplicity. Strict mode forbids ties.
    """
    if not (f.degree <= big_f.degree <= f.degree + 1):
        raise DegreeGapError(
            f"deg {names[1]} = {big_f.degree} must be deg {names[0]} or deg {names[0]} + 1 "
            f"(deg {names[0]} = {f.degree})"
        )
    f_roots = _require_real_rooted(f, names[0])
    big_roots = _require_real_rooted(big_f, names[1])

    s, r = big_roots.expanded(), f_roots.expanded()
    chain: List[Tuple[str, IsolatingInterval]] = []
    for k in range(len(s)):
        chain.append((f"{names[1]}[{k + 1}]", s[k]))
        if k < len(r):
            chain.append((f"{names[0]}[{k + 1}]", r[k]))

    ok = True
    comparisons: List[Comparison] = []
    for (left_name, left), (right_name, right) in zip(chain, chain[1:]):
        order = _order(left, right)
        comparisons.append(Comparison(left=left_name, relation=_RELATION[order], right=right_name))
        if order is Ordering.LESS or (strict and order is Ordering.EQUAL):
            ok = False

    return Certificate(
        claim=Claim.STRICTLY_INTERLEAVES if strict else Claim.INTERLEAVES,
        polys=[poly_to_json(f), poly_to_json(big_f)],
        evidence=Evidence(
            roots=f_roots.to_entries(0) + big_roots.to_entries(1),
            comparisons=comparisons,
        ),
        verdict=Verdict.of(ok),
        label=f"{names[0]} {'<' if strict else '<='} {names[1]}",
    )


def _merged_distinct(
    f_roots: RootList, g_roots: RootList
) -> List[Tuple[IsolatingInterval, int, int]]:
    """Distinct roots of f*g in decreasing order with their f and g multiplicities."""
    tagged = [(r, r.multiplicity, 0) for r in f_roots] + [(r, 0, r.multiplicity) for r in g_roots]

    def compare(a: Tuple[IsolatingInterval, int, int], b: Tuple[IsolatingInterval, int, int]) -> int:
        order = _order(a[0], b[0])
        return {Ordering.GREATER: -1, Ordering.EQUAL: 0, Ordering.LESS: 1}[order]

    tagged.sort(key=functools.cmp_to_key(compare))
    merged: List[Tuple[IsolatingInterval, int, int]] = []
    for interval, mf, mg in tagged:
        if merged and _order(merged[-1][0], interval) is Ordering.EQUAL:
            head, hf, hg = merged[-1]
            merged[-1] = (head, hf + mf, hg + mg)
        else:
            merged.append((interval, mf, mg))
    return merged


def common_interleaver_exists(
    f: Poly, g: Poly, names: Tuple[str, str] = ("f", "g")
) -> Certificate:
    """
    Whether f and g have a common interleaver, i.e. |n_f(x) - n_g(x)| <= 1 for all x.

    n_f and n_g are step functions that only move at roots, so they are evaluated
    at every distinct root, at a rational witness between adjacent roots and at
    one point beyond each end.
    """
    for p, name in ((f, names[0]), (g, names[1])):
        if p.is_zero or p.leading_coefficient <= 0:
            raise LeadingCoefficientError(f"{name} must have a positive leading coefficient")
    f_roots = _require_real_rooted(f, names[0])
    g_roots = _require_real_rooted(g, names[1])
    merged = _merged_distinct(f_roots, g_roots)

    checkpoints: List[Checkpoint] = []
    if not merged:
        checkpoints.append(Checkpoint(x=rational_to_str(Fraction(0)), nf=0, ng=0))
    else:
        top = merged[0][0]
        above = top.hi + 1
        checkpoints.append(Checkpoint(x=rational_to_str(above), nf=nf_at(f, above), ng=nf_at(g, above)))
        intervals = [m[0] for m in merged]
        nf = ng = 0
        for k, (_, mf, mg) in enumerate(merged):
            nf += mf
            ng += mg
            current = intervals[k]
            checkpoints.append(
                Checkpoint(lo=rational_to_str(current.lo), hi=rational_to_str(current.hi), nf=nf, ng=ng)
            )
            if k + 1 < len(merged):
                upper, lower = _separate_pair(current, intervals[k + 1])
                intervals[k + 1] = lower
                witness = (upper.lo + lower.hi) / 2
            else:
                witness = current.lo - 1
            checkpoints.append(
                Checkpoint(x=rational_to_str(witness), nf=nf_at(f, witness), ng=nf_at(g, witness))
            )

    ok = all(abs(c.nf - c.ng) <= 1 for c in checkpoints)
    return Certificate(
        claim=Claim.COMMON_INTERLEAVER,
        polys=[poly_to_json(f), poly_to_json(g)],
        evidence=Evidence(
            roots=f_roots.to_entries(0) + g_roots.to_entries(1),
            checkpoints=checkpoints,
        ),
        verdict=Verdict.of(ok),
        label=f"{names[0]} ~ {names[1]}",
    )


def check_compatibility(
    polys: Sequence[Poly],
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    names: Optional[Sequence[str]] = None,
) -> Certificate:
    """
    Compatibility via the pairwise common-interleaver criterion, plus a seeded
    spot-check of random nonnegative combinations with weights k/16.
    """
    names = list(names) if names is not None else [f"f{i + 1}" for i in range(len(polys))]
    for p, name in zip(polys, names):
        if p.is_zero or p.leading_coefficient <= 0:
            raise LeadingCoefficientError(f"{name} must have a positive leading coefficient")
        _require_real_rooted(p, name)

    pairs = [
        common_interleaver_exists(polys[i], polys[j], (names[i], names[j]))
        for i in range(len(polys))
        for j in range(i + 1, len(polys))
    ]

    rng = random.Random(seed)
    weight_samples: List[WeightSample] = []
    for _ in range(samples):
        weights = [Fraction(rng.randint(0, WEIGHT_DENOMINATOR), WEIGHT_DENOMINATOR) for _ in polys]
        if not any(weights):
            continue
        combo = Poly()
        for w, p in zip(weights, polys):
            combo = combo + p * w
        weight_samples.append(
            WeightSample(
                weights=[rational_to_str(w) for w in weights],
                real_roots=real_root_count(combo),
                degree=combo.degree,
            )
        )

    ok = all(c.passed for c in pairs) and all(s.real_roots == s.degree for s in weight_samples)
    if not ok:
        logger.warning(f"Compatibility failed for {', '.join(names)}")
    return Certificate(
        claim=Claim.COMPATIBLE,
        polys=[poly_to_json(p) for p in polys],
        evidence=Evidence(pairs=pairs, samples=weight_samples),
        verdict=Verdict.of(ok),
        seed=seed,
        label="{" + ", ".join(names) + "}",
    )


@dataclass(frozen=True)
class Region:
    """Part of the real line a polynomial's roots are confined to."""

    kind: RegionKind
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    @classmethod
    def all_reals(cls) -> "Region":
        return cls(RegionKind.ALL_REALS)

    @classmethod
    def negative_axis(cls) -> "Region":
        return cls(RegionKind.NEGATIVE_AXIS, hi=Fraction(0))

    @classmethod
    def open_interval(cls, lo: Scalar, hi: Scalar) -> "Region":
        return cls(RegionKind.OPEN_INTERVAL, to_rational(lo), to_rational(hi))

    @classmethod
    def closed_interval(cls, lo: Scalar, hi: Scalar) -> "Region":
        return cls(RegionKind.CLOSED_INTERVAL, to_rational(lo), to_rational(hi))

    @property
    def endpoints(self) -> List[Fraction]:
        return [e for e in (self.lo, self.hi) if e is not None]

    def contains(self, interval: IsolatingInterval) -> bool:
        """Whether the isolated root lies in the region; boundary roots count only when closed."""
        inclusive = self.kind is RegionKind.CLOSED_INTERVAL
        if self.lo is not None:
            order = _locate(interval, self.lo)
            if order is Ordering.LESS or (order is Ordering.EQUAL and not inclusive):
                return False
        if self.hi is not None:
            order = _locate(interval, self.hi)
            if order is Ordering.GREATER or (order is Ordering.EQUAL and not inclusive):
                return False
        return True

    def describe(self) -> str:
        if self.kind is RegionKind.ALL_REALS:
            return "(-inf,inf)"
        if self.kind is RegionKind.NEGATIVE_AXIS:
            return "(-inf,0)"
        if self.kind is RegionKind.OPEN_INTERVAL:
            return f"({self.lo},{self.hi})"
        return f"[{self.lo},{self.hi}]"


def certify_real_rooted(p: Poly, region: Region, label: Optional[str] = None) -> Certificate:
    """
    Pass iff p has deg p real roots (with multiplicity) and each lies in region.

    Evidence carries the isolating intervals and the sign of p at the region's
    finite endpoints.
    """
    if p.is_zero:
        raise ZeroPolynomialError("The zero polynomial cannot be certified")
    if p.degree < 1:
        raise DomainError(f"Cannot certify the roots of the constant {p}")
    roots = isolate_roots(p)
    real_rooted = roots.total_multiplicity == p.degree
    inside = all(region.contains(r) for r in roots)
    signs = [SignSample(x=rational_to_str(e), poly=0, sign=p.sign_at(e)) for e in region.endpoints]
    return Certificate(
        claim=Claim.REAL_ROOTED_IN_REGION,
        polys=[poly_to_json(p)],
        evidence=Evidence(roots=roots.to_entries(0), signs=signs),
        verdict=Verdict.of(real_rooted and inside),
        label=label or f"roots in {region.describe()}",
    )


def recheck_signs(cert: Certificate) -> bool:
    """Re-evaluate every recorded sign sample from the serialized polynomials."""
    polys = [poly_from_json(c) for c in cert.polys]
    for sample in cert.evidence.signs:
        x0 = to_rational(sample.x)
        if polys[sample.poly].sign_at(x0) != sample.sign:
            return False
    return all(recheck_signs(sub) for sub in cert.evidence.pairs)


# Chains of positive roots for a_{2n-1}, b_{2n}, d_{2n} and a_{2n}, b_{2n+1}, d_{2n+1}.


def _family(tag: FamilyTag, n: int) -> Poly:
    from .derivpoly import family_poly

    return family_poly(tag, n)


def positive_roots(p: Poly) -> List[IsolatingInterval]:
    """Positive roots with multiplicity, in decreasing order."""
    return [r for r in _roots_or_empty(p).expanded() if _locate(r, Fraction(0)) is Ordering.GREATER]


def _strict_chain(items: List[Tuple[str, IsolatingInterval]]) -> bool:
    ok = all(_order(a, b) is Ordering.GREATER for (_, a), (_, b) in zip(items, items[1:]))
    return ok and bool(items) and _locate(items[-1][1], Fraction(0)) is Ordering.GREATER


def _alternate(*sequences: Tuple[str, List[IsolatingInterval]]) -> List[Tuple[str, IsolatingInterval]]:
    length = max(len(s) for _, s in sequences)
    out = []
    for k in range(length):
        for name, seq in sequences:
            if k < len(seq):
                out.append((f"{name}[{k + 1}]", seq[k]))
    return out


def _chain_polys(n: int, even: bool) -> Tuple[Dict[str, Poly], str, str, str]:
    if even:
        names = (f"a_{2 * n - 1}", f"b_{2 * n}", f"d_{2 * n}")
        polys = (_family(FamilyTag.A, 2 * n - 1), _family(FamilyTag.B, 2 * n), _family(FamilyTag.D, 2 * n))
    else:
        names = (f"a_{2 * n}", f"b_{2 * n + 1}", f"d_{2 * n + 1}")
        polys = (_family(FamilyTag.A, 2 * n), _family(FamilyTag.B, 2 * n + 1), _family(FamilyTag.D, 2 * n + 1))
    return dict(zip(names, polys)), names[0], names[1], names[2]


def zero_chain_report(n: int) -> Report:
    """
    Root chains for one n.

    With s, r, c the positive roots of a_{2n-1}, b_{2n}, d_{2n} (n >= 2):
    1 = s1 > r1 > s2 > ... > sn > rn > 0 and r1 > c1 > s2 > r2 > c2 > ... > rn > cn > 0.
    The same shape holds for a_{2n}, b_{2n+1}, d_{2n+1} (n >= 1), where d_{2n+1}
    also has a simple root at 0.
    """
    if n < 1:
        raise DomainError(f"Zero chains need n >= 1, got {n}")
    report = Report()
    cases = [False] if n < 2 else [True, False]
    for even in cases:
        polys, a_name, b_name, d_name = _chain_polys(n, even)
        tag = "even" if even else "odd"
        roots = {name: positive_roots(p) for name, p in polys.items()}
        for name, found in roots.items():
            report.add(f"positive_roots_{name}", n, n, len(found))
        a_roots, b_roots, d_roots = roots[a_name], roots[b_name], roots[d_name]
        if not (len(a_roots) == len(b_roots) == len(d_roots) == n):
            continue
        report.add(f"top_root_{a_name}", n, Ordering.EQUAL.value, _locate(a_roots[0], Fraction(1)).value)
        ab_chain = _alternate((a_name, a_roots), (b_name, b_roots))
        report.add(f"zero_chain_{tag}_{a_name}_{b_name}", n, True, _strict_chain(ab_chain))
        bd_chain = [(f"{b_name}[1]", b_roots[0]), (f"{d_name}[1]", d_roots[0])]
        for k in range(1, n):
            bd_chain += [
                (f"{a_name}[{k + 1}]", a_roots[k]),
                (f"{b_name}[{k + 1}]", b_roots[k]),
                (f"{d_name}[{k + 1}]", d_roots[k]),
            ]
        report.add(f"zero_chain_{tag}_{b_name}_{d_name}", n, True, _strict_chain(bd_chain))
        if not even:
            d_poly = polys[d_name]
            at_zero = [r for r in isolate_roots(d_poly) if _locate(r, Fraction(0)) is Ordering.EQUAL]
            simple = len(at_zero) == 1 and at_zero[0].multiplicity == 1
            report.add(f"simple_zero_at_origin_{d_name}", n, True, simple)
    return report


@log_operation
def verify_zero_chains(n_max: int) -> Report:
    if n_max < 2:
        raise DomainError(f"verify_zero_chains needs n_max >= 2, got {n_max}")
    report = Report()
    for n in range(1, n_max + 1):
        report.extend(zero_chain_report(n))
    return report


def _mirror(interval: IsolatingInterval) -> IsolatingInterval:
    # The factor of p(-x): coefficients of odd powers flip sign.
    assert interval.factor is not None
    coeffs = tuple(-c if k % 2 else c for k, c in enumerate(interval.factor.coeffs))
    return IsolatingInterval(-interval.hi, -interval.lo, interval.multiplicity, Poly(coeffs))


def sign_pattern_report(n: int) -> Report:
    """
    Signs of d_{2n} and d_{2n+1} at the positive roots of the a/b families,
    mirrored at the negative roots, plus the values at 0.
    """
    if n < 1:
        raise DomainError(f"Sign patterns need n >= 1, got {n}")
    report = Report()
    cases = [False] if n < 2 else [True, False]
    for even in cases:
        polys, a_name, b_name, d_name = _chain_polys(n, even)
        d_poly = polys[d_name]
        a_roots, b_roots = positive_roots(polys[a_name]), positive_roots(polys[b_name])
        if len(a_roots) != n or len(b_roots) != n:
            report.add(f"positive_roots_{a_name}_{b_name}", n, 2 * n, len(a_roots) + len(b_roots))
            continue
        mirror_sign = 1 if even else -1
        points: List[Tuple[str, IsolatingInterval, int]] = []
        for j in range(1, n):
            points.append((f"{a_name}[{j + 1}]", a_roots[j], (-1) ** j))
            points.append((f"{b_name}[{j}]", b_roots[j - 1], (-1) ** (j + 1)))
        points.append((f"{b_name}[{n}]", b_roots[n - 1], (-1) ** (n - 1) if even else (-1) ** (n + 1)))
        for label, interval, expected in points:
            report.add(f"sign_{d_name}_at_{label}", n, expected, sign_at_root(d_poly, interval))
            report.add(
                f"sign_{d_name}_at_-{label}",
                n,
                mirror_sign * expected,
                sign_at_root(d_poly, _mirror(interval)),
            )
        if even:
            report.add(f"sign_{d_name}_at_0", n, (-1) ** n, d_poly.sign_at(0))
        else:
            linear = d_poly.coefficient(1)
            report.add(f"sign_linear_coefficient_{d_name}", n, (-1) ** n, (linear > 0) - (linear < 0))
    return report


@log_operation
def verify_sign_pattern(n_max: int) -> Report:
    if n_max < 2:
        raise DomainError(f"verify_sign_pattern needs n_max >= 2, got {n_max}")
    report = Report()
    for n in range(1, n_max + 1):
        report.extend(sign_pattern_report(n))
    return report


def _random_split_poly(rng: random.Random) -> Tuple[Poly, List[Tuple[Fraction, int]]]:
    candidates = sorted({Fraction(k, den) for den in (1, 2, 3, 4) for k in range(-5 * den, 5 * den + 1)})
    degree_left = rng.randint(1, 8)
    roots: List[Tuple[Fraction, int]] = []
    for root in rng.sample(candidates, degree_left):
        if degree_left == 0:
            break
        mult = rng.randint(1, min(2, degree_left))
        roots.append((root, mult))
        degree_left -= mult
    poly = Poly.constant(rng.choice([-3, -1, 1, 2, 5]))
    for root, mult in roots:
        poly = poly * Poly((-root, Fraction(1))) ** mult
    return poly, roots


@log_operation
def verify_sturm_oracle(count: int = 200, seed: int = 0) -> Report:
    """Sturm counts on random split polynomials against their known rational roots."""
    rng = random.Random(seed)
    report = Report()
    for trial in range(count):
        poly, roots = _random_split_poly(rng)
        while True:
            lo = Fraction(rng.randint(-42, 42), 7)
            hi = Fraction(rng.randint(-42, 42), 7)
            if lo < hi and poly.sign_at(lo) != 0 and poly.sign_at(hi) != 0:
                break
        expected = sum(1 for root, _ in roots if lo < root < hi)
        report.add("sturm_count_split", trial, expected, sturm_count(poly, lo, hi))
        report.add("real_root_count_split", trial, poly.degree, real_root_count(poly))
    return report
