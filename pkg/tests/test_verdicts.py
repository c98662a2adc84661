"""Tests for integrality verdicts, joint verdicts and monic roots."""

from unittest.mock import patch

import pytest

from proper_rationals.oracle import Box, enumerate_canonical, enumerate_proper
from proper_rationals.rational_core import (
    CanonicalRational,
    MonicPoly,
    eval_poly,
    mul,
    normalize,
)
from proper_rationals.verdicts import (
    NotProper,
    ReciprocalCase,
    TheoremViolation,
    ZeroValue,
    joint_verdict,
    monic_rational_roots,
    product_verdict,
    quadratic_from_sum_product,
    reciprocal_verdict,
    scale_verdict,
    shift_verdict,
    sum_verdict,
    verify_no_proper_root,
    vieta_check,
)


def q(c: int, b: int = 1) -> CanonicalRational:
    return normalize(c, b)


class TestReciprocalVerdict:
    """Test the reciprocal trichotomy."""

    def test_unit_numerator(self) -> None:
        """|c| = 1 gives an integer reciprocal."""
        verdict = reciprocal_verdict(q(1, 2))
        assert verdict.case_tag is ReciprocalCase.UNIT_NUMERATOR_INTEGER
        assert verdict.result == q(2)

    def test_negative_unit_numerator(self) -> None:
        """c = -1 is also the unit case."""
        verdict = reciprocal_verdict(q(-1, 5))
        assert verdict.case_tag is ReciprocalCase.UNIT_NUMERATOR_INTEGER
        assert verdict.result == q(-5)

    def test_positive_proper(self) -> None:
        """c >= 2 gives b/c."""
        verdict = reciprocal_verdict(q(3, 2))
        assert verdict.case_tag is ReciprocalCase.POSITIVE_PROPER
        assert verdict.result == q(2, 3)

    def test_negative_proper(self) -> None:
        """c <= -2 gives -b/|c|."""
        verdict = reciprocal_verdict(q(-3, 2))
        assert verdict.case_tag is ReciprocalCase.NEGATIVE_PROPER
        assert (verdict.result.c, verdict.result.b) == (-2, 3)

    def test_rejects_integer(self) -> None:
        """Integers, zero included, are not proper."""
        with pytest.raises(NotProper, match="requires a proper rational"):
            reciprocal_verdict(q(4))
        with pytest.raises(NotProper):
            reciprocal_verdict(q(0))

    def test_zero_guard(self) -> None:
        """The zero guard is reachable only by bypassing canonical construction."""
        zero = object.__new__(CanonicalRational)
        object.__setattr__(zero, "c", 0)
        object.__setattr__(zero, "b", 2)
        with pytest.raises(ZeroValue):
            reciprocal_verdict(zero)

    def test_partition_over_box(self) -> None:
        """Exactly one case fires and r times its reciprocal is 1."""
        for r in enumerate_proper(Box(50, 50)):
            verdict = reciprocal_verdict(r)
            expected = (
                ReciprocalCase.UNIT_NUMERATOR_INTEGER
                if abs(r.c) == 1
                else ReciprocalCase.POSITIVE_PROPER
                if r.c >= 2
                else ReciprocalCase.NEGATIVE_PROPER
            )
            assert verdict.case_tag is expected
            assert mul(r, verdict.result) == q(1)
            if expected is ReciprocalCase.NEGATIVE_PROPER:
                assert verdict.result.b == abs(r.c)
                assert verdict.result.c == -r.b


class TestShiftVerdict:
    """Test that adding an integer keeps a rational proper."""

    @pytest.mark.parametrize(
        ("r", "d", "expected"),
        [((1, 2), 3, (7, 2)), ((-3, 4), 1, (1, 4)), ((5, 3), -2, (-1, 3))],
    )
    def test_examples(self, r: tuple, d: int, expected: tuple) -> None:
        """r + d has numerator c + d*b over the same b."""
        assert shift_verdict(q(*r), d) == q(*expected)

    def test_rejects_integer(self) -> None:
        """The shifted value must be proper."""
        with pytest.raises(NotProper):
            shift_verdict(q(2), 1)

    def test_never_integer_over_box(self) -> None:
        """Result stays proper with unchanged denominator."""
        for r in enumerate_proper(Box(50, 50)):
            for d in range(-50, 51):
                result = shift_verdict(r, d)
                assert result.b == r.b
                assert result.b >= 2


class TestScaleVerdict:
    """Test r * i integrality: exactly when b | i."""

    def test_divisible(self) -> None:
        """4 | 8 gives witness 2 and value 6."""
        verdict = scale_verdict(q(3, 4), 8)
        assert verdict.is_integer is True
        assert verdict.witness_quotient == 2
        assert verdict.result == q(6)
        assert verdict.is_proper is False

    def test_not_divisible(self) -> None:
        """4 does not divide 6."""
        verdict = scale_verdict(q(3, 4), 6)
        assert verdict.is_integer is False
        assert verdict.witness_quotient is None
        assert verdict.result == q(9, 2)
        assert verdict.is_proper is True

    def test_zero_factor(self) -> None:
        """b | 0 with quotient 0."""
        verdict = scale_verdict(q(1, 2), 0)
        assert verdict.is_integer is True
        assert verdict.witness_quotient == 0
        assert verdict.result == q(0)

    def test_negative_factor_quotient(self) -> None:
        """Quotient keeps the sign of i."""
        verdict = scale_verdict(q(-5, 3), -9)
        assert verdict.witness_quotient == -3
        assert verdict.result == q(15)

    def test_rejects_integer(self) -> None:
        """The scaled value must be proper."""
        with pytest.raises(NotProper):
            scale_verdict(q(3), 2)

    def test_predicate_matches_value_over_box(self) -> None:
        """is_integer agrees with the denominator of the exact product."""
        for r in enumerate_proper(Box(30, 30)):
            for i in range(-30, 31):
                verdict = scale_verdict(r, i)
                assert verdict.is_integer == (verdict.result.b == 1)
                if verdict.is_integer:
                    assert i == r.b * verdict.witness_quotient


class TestSumVerdict:
    """Test r1 + r2 integrality: b1 = b2 and b1 | (c1 + c2)."""

    def test_equal_denominators_divisible(self) -> None:
        """1/2 + 1/2 = 1."""
        verdict = sum_verdict(q(1, 2), q(1, 2))
        assert verdict.is_integer is True
        assert verdict.denominators_equal is True
        assert verdict.divisibility_holds is True
        assert verdict.result == q(1)

    def test_different_denominators(self) -> None:
        """Divisibility is not evaluated when denominators differ."""
        verdict = sum_verdict(q(1, 2), q(1, 3))
        assert verdict.is_integer is False
        assert verdict.denominators_equal is False
        assert verdict.divisibility_holds is None
        assert verdict.result == q(5, 6)
        assert verdict.is_proper is True

    def test_equal_denominators_not_divisible(self) -> None:
        """4 does not divide 1 + 1."""
        verdict = sum_verdict(q(1, 4), q(1, 4))
        assert verdict.is_integer is False
        assert verdict.divisibility_holds is False
        assert verdict.result == q(1, 2)

    def test_three_quarters_plus_five_quarters(self) -> None:
        """4 | 8 gives 2."""
        verdict = sum_verdict(q(3, 4), q(5, 4))
        assert verdict.is_integer is True
        assert verdict.result == q(2)

    def test_rejects_integer_operand(self) -> None:
        """Both operands must be proper."""
        with pytest.raises(NotProper):
            sum_verdict(q(1, 2), q(1))
        with pytest.raises(NotProper):
            sum_verdict(q(5), q(1, 2))

    def test_disagreement_raises_theorem_violation(self) -> None:
        """A broken divisibility test is caught by the value check."""
        with (
            patch("proper_rationals.verdicts.divides", return_value=False),
            pytest.raises(TheoremViolation, match="sum predicate"),
        ):
            sum_verdict(q(1, 2), q(1, 2))


class TestProductVerdict:
    """Test r1 * r2 integrality: b1 | c2 and b2 | c1."""

    def test_integer_product(self) -> None:
        """3/2 * 4/3 = 2."""
        verdict = product_verdict(q(3, 2), q(4, 3))
        assert verdict.is_integer is True
        assert verdict.b1_divides_c2 is True
        assert verdict.b2_divides_c1 is True
        assert verdict.result == q(2)

    def test_proper_product(self) -> None:
        """2 does not divide 5."""
        verdict = product_verdict(q(3, 2), q(5, 3))
        assert verdict.is_integer is False
        assert verdict.b1_divides_c2 is False
        assert verdict.b2_divides_c1 is True
        assert verdict.result == q(5, 2)

    def test_negative_operand(self) -> None:
        """-9/2 * 4/3 = -6."""
        verdict = product_verdict(q(-9, 2), q(4, 3))
        assert verdict.is_integer is True
        assert verdict.result == q(-6)

    def test_rejects_integer_operand(self) -> None:
        """Both operands must be proper."""
        with pytest.raises(NotProper):
            product_verdict(q(3), q(1, 2))

    def test_disagreement_raises_theorem_violation(self) -> None:
        """A broken divisibility test is caught by the value check."""
        with (
            patch("proper_rationals.verdicts.divides", return_value=True),
            pytest.raises(TheoremViolation, match="product predicate"),
        ):
            product_verdict(q(3, 2), q(5, 3))


class TestJointVerdict:
    """Test joint integrality of sum and product."""

    def test_two_integers(self) -> None:
        """2 and 3 give integral sum and product with the quadratic x^2 - 5x + 6."""
        verdict = joint_verdict(q(2), q(3))
        assert verdict.sum_is_integer is True
        assert verdict.product_is_integer is True
        assert verdict.both_inputs_integer is True
        assert verdict.quadratic == MonicPoly((6, -5, 1))

    def test_halves(self) -> None:
        """1/2 + 1/2 = 1 but 1/2 * 1/2 = 1/4."""
        verdict = joint_verdict(q(1, 2), q(1, 2))
        assert verdict.sum_is_integer is True
        assert verdict.product_is_integer is False
        assert verdict.both_inputs_integer is False
        assert verdict.quadratic is None

    def test_integral_product_only(self) -> None:
        """3/2 * 4/3 = 2 but the sum is 17/6."""
        verdict = joint_verdict(q(3, 2), q(4, 3))
        assert verdict.product_is_integer is True
        assert verdict.sum_is_integer is False

    def test_mixed_integer_and_proper(self) -> None:
        """An integer plus a proper rational is never integral."""
        verdict = joint_verdict(q(2), q(1, 3))
        assert verdict.sum_is_integer is False

    def test_integral_pairs_are_integer_pairs_over_box(self) -> None:
        """Integral sum and product force b1 = b2 = 1, integers included."""
        values = list(enumerate_canonical(12, 12))
        for idx, q1 in enumerate(values):
            for q2 in values[idx:]:
                verdict = joint_verdict(q1, q2)
                if verdict.sum_is_integer and verdict.product_is_integer:
                    assert q1.b == 1 and q2.b == 1

    def test_proper_pairs_never_both_integral(self) -> None:
        """No two proper rationals have integral sum and product."""
        values = list(enumerate_proper(Box(12, 12)))
        for idx, q1 in enumerate(values):
            for q2 in values[idx:]:
                verdict = joint_verdict(q1, q2)
                assert not (verdict.sum_is_integer and verdict.product_is_integer)


class TestQuadraticAndRoots:
    """Test the monic quadratic construction and integer root extraction."""

    @pytest.mark.parametrize(
        ("i1", "i2", "coefficients"),
        [(5, 6, (6, -5, 1)), (0, 0, (0, 0, 1)), (1, 1, (1, -1, 1))],
    )
    def test_quadratic_from_sum_product(self, i1: int, i2: int, coefficients: tuple) -> None:
        """Coefficients are [i2, -i1, 1]."""
        assert quadratic_from_sum_product(i1, i2).coefficients == coefficients

    @pytest.mark.parametrize(
        ("coefficients", "roots"),
        [
            ((6, -5, 1), [2, 3]),
            ((1, -1, 1), []),
            ((-2, 0, 1), []),
            ((0, 0, 1), [0]),
            ((5, 1), [-5]),
            ((4, -4, 1), [2]),
            ((0, -6, 5, 1), [-6, 0, 1]),
            ((-6, 11, -6, 1), [1, 2, 3]),
            ((0, 0, 0, 1), [0]),
        ],
    )
    def test_monic_rational_roots(self, coefficients: tuple, roots: list) -> None:
        """Distinct integer roots in increasing order."""
        assert monic_rational_roots(MonicPoly(coefficients)) == roots

    def test_roots_sound_and_complete(self) -> None:
        """Returned roots vanish and no other integer in [-|a0|, |a0|] does."""
        for i1 in range(-20, 21):
            for i2 in range(-20, 21):
                p = quadratic_from_sum_product(i1, i2)
                roots = monic_rational_roots(p)
                for root in roots:
                    assert eval_poly(p, q(root)) == q(0)
                bound = max(abs(i2), 1)
                for candidate in range(-bound, bound + 1):
                    if candidate not in roots:
                        assert eval_poly(p, q(candidate)) != q(0)

    def test_vieta_relations(self) -> None:
        """Two roots sum to i1 and multiply to i2."""
        for i1 in range(-20, 21):
            for i2 in range(-20, 21):
                roots = monic_rational_roots(quadratic_from_sum_product(i1, i2))
                assert len(roots) in (0, 1, 2)
                if roots:
                    r1, r2 = roots[0], roots[-1]
                    assert r1 + r2 == i1
                    assert r1 * r2 == i2


class TestVerifyNoProperRoot:
    """Test the exhaustive proper-root scan."""

    @pytest.mark.parametrize(
        ("coefficients", "bound"),
        [((6, -5, 1), 20), ((-2, 0, 1), 20), ((5, 1), 10)],
    )
    def test_examples(self, coefficients: tuple, bound: int) -> None:
        """Monic integer polynomials have no proper roots."""
        assert verify_no_proper_root(MonicPoly(coefficients), bound) is True

    def test_rejects_small_bound(self) -> None:
        """The bound must admit at least b = 2."""
        with pytest.raises(ValueError, match="search_bound"):
            verify_no_proper_root(MonicPoly((0, 1)), 1)

    def test_detects_planted_proper_root(self) -> None:
        """A forged vanishing test is reported as a proper root."""
        with patch("proper_rationals.verdicts._vanishes_at", return_value=True):
            assert verify_no_proper_root(MonicPoly((6, -5, 1)), 2) is False

    def test_integer_scan_matches_exact_evaluation(self) -> None:
        """The integer-only vanishing test agrees with eval_poly."""
        from proper_rationals.verdicts import _vanishes_at

        p = MonicPoly((-3, 2, 1))
        for r in enumerate_proper(Box(6, 6)):
            assert _vanishes_at(p, r.c, r.b) == (eval_poly(p, r) == q(0))
        assert _vanishes_at(p, 1, 1) is True

    def test_all_quadratics_in_range(self) -> None:
        """x^2 - i1*x + i2 has no proper root with |c|, b <= 20."""
        for i1 in range(-20, 21):
            for i2 in range(-20, 21):
                assert verify_no_proper_root(quadratic_from_sum_product(i1, i2), 20)


class TestVietaCheck:
    """Test the combined root report."""

    def test_two_roots(self) -> None:
        """x^2 - 5x + 6 has roots 2 and 3."""
        report = vieta_check(5, 6)
        assert report.roots == [2, 3]
        assert report.vieta_holds is True
        assert report.no_proper_root is True
        assert str(report.polynomial) == "x^2 - 5x + 6"

    def test_double_root(self) -> None:
        """x^2 - 4x + 4 lists 2 once."""
        report = vieta_check(4, 4)
        assert report.roots == [2]
        assert report.vieta_holds is True

    def test_no_roots(self) -> None:
        """x^2 - x + 1 has no rational roots."""
        report = vieta_check(1, 1, search_bound=5)
        assert report.roots == []
        assert report.no_proper_root is True


class TestLargeCoefficientRoots:
    """Test root extraction when the constant term is too large to factor by trial division."""

    def test_quadratic_with_large_roots(self) -> None:
        """x^2 - 10^18 has roots -10^9 and 10^9."""
        report = vieta_check(0, -(10**18), search_bound=2)
        assert report.roots == [-(10**9), 10**9]
        assert report.vieta_holds is True

    def test_quadratic_with_large_prime_roots(self) -> None:
        """Two large primes as roots."""
        p1, p2 = 1_000_000_007, 998_244_353
        roots = monic_rational_roots(quadratic_from_sum_product(p1 + p2, p1 * p2))
        assert roots == [p2, p1]

    def test_quadratic_with_huge_square_free_constant(self) -> None:
        """No integer roots, answered without scanning divisors of 10^30 + 1."""
        assert monic_rational_roots(MonicPoly((10**30 + 1, 0, 1))) == []

    def test_linear_with_large_constant(self) -> None:
        """x + c has the single root -c."""
        assert monic_rational_roots(MonicPoly((10**40, 1))) == [-(10**40)]

    def test_quadratics_match_brute_force(self) -> None:
        """Discriminant roots equal the integers in [-40, 40] where the polynomial vanishes."""
        for i1 in range(-20, 21):
            for i2 in range(-20, 21):
                p = quadratic_from_sum_product(i1, i2)
                expected = [x for x in range(-40, 41) if x * x - i1 * x + i2 == 0]
                assert monic_rational_roots(p) == expected

    def test_cubic_uses_divisors(self) -> None:
        """Higher degrees still go through the constant's divisors."""
        assert monic_rational_roots(MonicPoly((0, -1, 0, 1))) == [-1, 0, 1]
        assert monic_rational_roots(MonicPoly((-6, 11, -6, 1))) == [1, 2, 3]
