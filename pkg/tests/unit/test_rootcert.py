"""Unit tests for Sturm counting, root isolation and certificates."""

from fractions import Fraction

import pytest

from src.core.derivpoly import family_poly, p_tilde, q_tilde
from src.core.eulerian import eulerian_fast
from src.core.polyarith import Poly
from src.core.rootcert import (
    IsolatingInterval,
    Region,
    certify_real_rooted,
    check_compatibility,
    check_interleaving,
    common_interleaver_exists,
    compare_roots,
    isolate_roots,
    nf_at,
    positive_roots,
    real_root_count,
    recheck_signs,
    sign_at_root,
    sign_pattern_report,
    sturm_count,
    verify_sign_pattern,
    verify_sturm_oracle,
    verify_zero_chains,
    zero_chain_report,
)
from src.utils.exceptions import (
    DegreeGapError,
    DomainError,
    EndpointRootError,
    LeadingCoefficientError,
    NotRealRootedError,
    ZeroPolynomialError,
)
from src.utils.serialization import certificates_from_json, certificates_to_json, rational_from_str
from src.utils.types import Claim, CoxeterType, FamilyTag, Ordering, Verdict


def _poly(*coeffs):
    return Poly.from_coeffs(coeffs)


class TestSturmCount:
    """Test cases for Sturm root counting."""

    def test_d4_inside_unit_interval(self, d_small_list):
        assert sturm_count(d_small_list[4], -1, 1) == 4

    def test_no_real_roots(self):
        assert sturm_count(_poly(1, 0, 1), -10, 10) == 0

    def test_single_positive_root(self):
        assert sturm_count(_poly(0, -2, 0, 3), Fraction(1, 10), 1) == 1

    def test_endpoint_root(self):
        with pytest.raises(EndpointRootError) as exc_info:
            sturm_count(_poly(0, -2, 0, 3), 0, 1)

        assert exc_info.value.point == 0

    def test_empty_interval(self):
        with pytest.raises(DomainError):
            sturm_count(_poly(1, 0, 1), 1, 1)

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomialError):
            sturm_count(Poly(), -1, 1)

    def test_multiple_roots_counted_once(self):
        assert sturm_count(_poly(1, 2, 1), -2, 0) == 1

    def test_real_root_count_with_multiplicity(self):
        assert real_root_count(_poly(0, 0, -1, 1)) == 3
        assert real_root_count(_poly(1, 2, 1)) == 2
        assert real_root_count(_poly(1, 0, 1)) == 0

    def test_oracle(self):
        report = verify_sturm_oracle(60, seed=3)

        assert report.passed
        assert len(report.checks) == 120


class TestIsolation:
    """Test cases for isolating intervals."""

    def test_double_root_is_exact(self):
        roots = isolate_roots(_poly(0, 0, 1))

        assert len(roots) == 1
        assert roots[0].is_exact
        assert roots[0].lo == 0
        assert roots[0].multiplicity == 2

    def test_p_tilde_2(self, p_tilde_list):
        roots = isolate_roots(p_tilde_list[2])

        assert len(roots) == 3
        assert all(r.multiplicity == 1 for r in roots)
        assert roots[1].is_exact and roots[1].lo == 0
        assert nf_at(p_tilde_list[2], 1) == 1
        assert nf_at(p_tilde_list[2], Fraction(-1, 2)) == 2

    def test_decreasing_and_disjoint(self, d_small_list):
        roots = isolate_roots(d_small_list[6])

        assert len(roots) == 6
        for upper, lower in zip(roots, list(roots)[1:]):
            assert lower.hi < upper.lo

    def test_d5_symmetric_with_root_at_origin(self, d_small_list):
        d_5 = d_small_list[5]
        roots = isolate_roots(d_5)

        assert len(roots) == 5
        assert [r.lo for r in roots if r.is_exact] == [0]
        assert len(positive_roots(d_5)) == 2
        assert nf_at(d_5, 0) == 3

    def test_d2_type_d_double_root(self, eulerian_d_list):
        roots = isolate_roots(eulerian_d_list[2])

        assert roots.total_multiplicity == 2
        assert roots[0].lo == roots[0].hi == -1

    def test_constant(self):
        with pytest.raises(DomainError):
            isolate_roots(Poly.constant(3))

    def test_zero(self):
        with pytest.raises(ZeroPolynomialError):
            isolate_roots(Poly())


class TestCompareRoots:
    """Test cases for comparing algebraic roots."""

    def test_shared_root_is_equal(self, p_tilde_list):
        p_1, p_2 = p_tilde_list[1], p_tilde_list[2]

        assert compare_roots(p_1, isolate_roots(p_1)[0], p_2, isolate_roots(p_2)[0]) is Ordering.EQUAL

    def test_irrational_below_one(self, p_tilde_list, q_tilde_list):
        q_2, p_2 = q_tilde_list[2], p_tilde_list[2]

        assert compare_roots(q_2, isolate_roots(q_2)[0], p_2, isolate_roots(p_2)[0]) is Ordering.LESS
        assert compare_roots(p_2, isolate_roots(p_2)[0], q_2, isolate_roots(q_2)[0]) is Ordering.GREATER

    def test_root_against_itself(self, q_tilde_list):
        q_2 = q_tilde_list[2]
        root = isolate_roots(q_2)[1]

        assert compare_roots(q_2, root, q_2, root) is Ordering.EQUAL

    def test_unbound_interval(self, p_tilde_list, q_tilde_list):
        interval = IsolatingInterval(Fraction(1, 2), Fraction(4))

        assert compare_roots(p_tilde_list[2], interval, q_tilde_list[2], isolate_roots(q_tilde_list[2])[0]) is (
            Ordering.GREATER
        )

    def test_sign_at_root(self, p_tilde_list, q_tilde_list):
        top = isolate_roots(p_tilde_list[2])[0]

        assert sign_at_root(q_tilde_list[2], top) == 1
        assert sign_at_root(p_tilde_list[1], top) == 0
        assert sign_at_root(_poly(-2, 1), top) == -1


class TestInterleaving:
    """Test cases for interleaving certificates."""

    def test_strict_pass(self, p_tilde_list, q_tilde_list):
        cert = check_interleaving(q_tilde_list[2], p_tilde_list[2], strict=True)

        assert cert.claim is Claim.STRICTLY_INTERLEAVES
        assert cert.passed
        assert [c.relation for c in cert.evidence.comparisons] == [">", ">", ">", ">"]

    def test_weak_pass_with_ties(self, p_tilde_list):
        cert = check_interleaving(p_tilde_list[1], p_tilde_list[2])

        assert cert.passed
        assert [c.relation for c in cert.evidence.comparisons] == ["=", ">", ">", "="]

    def test_strict_fails_on_shared_roots(self, p_tilde_list):
        cert = check_interleaving(p_tilde_list[1], p_tilde_list[2], strict=True)

        assert cert.verdict is Verdict.FAIL

    def test_not_interleaved(self):
        cert = check_interleaving(_poly(-4, 1), _poly(-2, -1, 1))

        assert not cert.passed

    def test_degree_gap(self, p_tilde_list):
        with pytest.raises(DegreeGapError):
            check_interleaving(p_tilde_list[1], p_tilde_list[4])

    def test_not_real_rooted(self, p_tilde_list):
        with pytest.raises(NotRealRootedError) as exc_info:
            check_interleaving(_poly(1, 0, 1), p_tilde_list[2], names=("g", "P"))

        assert exc_info.value.poly_name == "g"

    @pytest.mark.parametrize("n", range(2, 7))
    def test_derivative_families(self, n):
        assert check_interleaving(q_tilde(n), p_tilde(n), strict=True).passed
        assert check_interleaving(p_tilde(n - 1), p_tilde(n)).passed
        assert check_interleaving(q_tilde(n - 1), q_tilde(n)).passed
        assert check_interleaving(family_poly(FamilyTag.B, n), family_poly(FamilyTag.A, n), strict=True).passed

    @pytest.mark.parametrize(
        "f, big_f",
        [
            (_poly(-1, 0, 1), _poly(0, -4, 0, 1)),
            (_poly(-1, 0, 1), _poly(0, -2, 1)),
            (_poly(-1, 1), _poly(-4, 0, 1)),
            (q_tilde(3), p_tilde(3)),
            (family_poly(FamilyTag.B, 4), family_poly(FamilyTag.A, 4)),
        ],
    )
    def test_strict_implies_weak(self, f, big_f):
        assert check_interleaving(f, big_f, strict=True).passed
        assert check_interleaving(f, big_f).passed


class TestNfAt:
    """Test cases for counting roots at or above a point."""

    @pytest.mark.parametrize(
        "coeffs, x0, expected",
        [
            ((0, -2, 0, 2), 0, 2),
            ((0, 0, 1), 0, 2),
            ((0, -2, 0, 2), 2, 0),
            ((5,), 0, 0),
        ],
    )
    def test_values(self, coeffs, x0, expected):
        assert nf_at(_poly(*coeffs), x0) == expected


class TestCommonInterleaver:
    """Test cases for the common-interleaver criterion."""

    def test_interleaved_pair(self, p_tilde_list, q_tilde_list):
        assert common_interleaver_exists(q_tilde_list[2], p_tilde_list[2]).passed

    def test_degree_drift(self):
        f = _poly(-1, 0, 1)
        g = _poly(-4, 0, 1) * _poly(-9, 0, 1)

        cert = common_interleaver_exists(f, g)

        assert not cert.passed
        points = [c for c in cert.evidence.checkpoints if c.x is not None]
        below = [c for c in points if rational_from_str(c.x) < -3]
        assert any((c.nf, c.ng) == (2, 4) for c in below)

    def test_identical(self, q_tilde_list):
        assert common_interleaver_exists(q_tilde_list[4], q_tilde_list[4]).passed

    def test_negative_leading_coefficient(self, p_tilde_list):
        with pytest.raises(LeadingCoefficientError):
            common_interleaver_exists(p_tilde_list[1], p_tilde_list[2])


class TestCompatibility:
    """Test cases for compatibility certificates."""

    def test_small_family(self):
        polys = [family_poly(FamilyTag.A, 1), family_poly(FamilyTag.B, 2), family_poly(FamilyTag.D, 2)]

        cert = check_compatibility(polys, samples=32, seed=5)

        assert cert.passed
        assert cert.seed == 5
        assert len(cert.evidence.pairs) == 3
        assert all(s.real_roots == s.degree for s in cert.evidence.samples)

    def test_linear_pair(self):
        assert check_compatibility([_poly(0, 1), _poly(-1, 1)]).passed

    def test_nested_quadratics(self):
        assert check_compatibility([_poly(6, -5, 1), _poly(0, -5, 1)]).passed

    def test_separated_quadratics(self):
        cert = check_compatibility([_poly(2, -3, 1), _poly(2, 3, 1)], samples=0)

        assert not cert.passed
        assert cert.evidence.samples == []

    def test_same_seed_same_samples(self):
        polys = [_poly(6, -5, 1), _poly(0, -5, 1)]

        first = check_compatibility(polys, samples=8, seed=11)
        second = check_compatibility(polys, samples=8, seed=11)

        assert first.evidence.samples == second.evidence.samples

    def test_negative_leading_coefficient(self):
        with pytest.raises(LeadingCoefficientError):
            check_compatibility([_poly(1, -1)])

    def test_eulerian_family(self):
        polys = [eulerian_fast(CoxeterType.A, 2), eulerian_fast(CoxeterType.B, 3), eulerian_fast(CoxeterType.D, 3)]

        assert check_compatibility(polys, samples=16).passed


class TestRegionCertificates:
    """Test cases for real-rootedness in a region."""

    def test_type_d_negative_axis(self, eulerian_d_list):
        cert = certify_real_rooted(eulerian_d_list[3], Region.negative_axis())

        assert cert.passed
        assert len(cert.evidence.roots) == 3

    def test_double_root_on_negative_axis(self, eulerian_d_list):
        cert = certify_real_rooted(eulerian_d_list[2], Region.negative_axis())

        assert cert.passed
        assert [r.mult for r in cert.evidence.roots] == [2]

    def test_d6_open_interval(self, d_small_list):
        assert certify_real_rooted(d_small_list[6], Region.open_interval(-1, 1)).passed

    def test_no_real_roots(self):
        cert = certify_real_rooted(_poly(1, 0, 1), Region.all_reals())

        assert cert.verdict is Verdict.FAIL

    def test_open_versus_closed(self, p_tilde_list):
        assert not certify_real_rooted(p_tilde_list[2], Region.open_interval(-1, 1)).passed
        cert = certify_real_rooted(p_tilde_list[2], Region.closed_interval(-1, 1))

        assert cert.passed
        assert [s.sign for s in cert.evidence.signs] == [0, 0]

    def test_origin_outside_negative_axis(self):
        assert not certify_real_rooted(_poly(0, 0, 1), Region.negative_axis()).passed

    def test_constant(self):
        with pytest.raises(DomainError):
            certify_real_rooted(Poly.constant(2), Region.all_reals())

    def test_recheck_signs(self, d_small_list):
        cert = certify_real_rooted(d_small_list[6], Region.open_interval(-1, 1))

        assert recheck_signs(cert)

        tampered = cert.model_copy(deep=True)
        tampered.evidence.signs[0].sign = -1
        assert not recheck_signs(tampered)

    def test_json_round_trip(self, d_small_list):
        cert = certify_real_rooted(d_small_list[4], Region.open_interval(-1, 1), label="d_4")

        data = certificates_to_json([cert])

        assert data[0]["verdict"] == "pass"
        assert data[0]["polys"][0] == ["1/1", "0/1", "-12/1", "0/1", "12/1"]
        assert [c.model_dump() for c in certificates_from_json(data)] == [cert.model_dump()]


class TestChainsAndSigns:
    """Test cases for the zero chains and the sign pattern of d_n."""

    def test_chain_single_pair(self):
        report = zero_chain_report(1)

        assert report.passed
        assert "simple_zero_at_origin_d_3" in {c.check for c in report.checks}

    def test_chain_two_pairs(self):
        report = zero_chain_report(2)

        assert report.passed
        assert "zero_chain_even_b_4_d_4" in {c.check for c in report.checks}

    def test_chain_suite(self):
        assert verify_zero_chains(4).passed

    def test_chain_suite_needs_two(self):
        with pytest.raises(DomainError):
            verify_zero_chains(1)

    def test_signs(self):
        assert sign_pattern_report(1).passed
        assert sign_pattern_report(2).passed

    def test_sign_suite(self):
        assert verify_sign_pattern(4).passed
