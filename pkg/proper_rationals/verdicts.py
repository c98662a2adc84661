"""Integrality decisions for proper rationals, with divisibility witnesses.

Every verdict computes the exact resulting value next to the divisibility
predicate and checks that the two agree. A disagreement raises
TheoremViolation: it means the implementation is broken, not the input.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum
from math import isqrt

from proper_rationals.rational_core import (
    CanonicalRational,
    MonicPoly,
    RationalError,
    add,
    divides,
    eval_poly,
    gcd,
    mul,
    reciprocal,
)

logger = logging.getLogger(__name__)


class NotProper(RationalError):
    """Exception raised when an operand must be a proper rational but is an integer."""

    def __init__(self, value: CanonicalRational, operation: str) -> None:
        """Initialize NotProper with the rejected value and the operation name."""
        self.value = value
        self.operation = operation
        super().__init__(f"{operation} requires a proper rational, got integer {value}")


class ZeroValue(RationalError):
    """Exception raised when an operand must be nonzero."""

    def __init__(self, operation: str) -> None:
        """Initialize ZeroValue with the operation name."""
        self.operation = operation
        super().__init__(f"{operation} requires a nonzero value")


class TheoremViolation(Exception):
    """Exception raised when a divisibility predicate disagrees with exact arithmetic."""

    def __init__(self, message: str) -> None:
        """Initialize TheoremViolation with a description of the broken property."""
        self.message = message
        super().__init__(message)


class ReciprocalCase(StrEnum):
    """Which of the three reciprocal outcomes applies to a proper c/b."""

    UNIT_NUMERATOR_INTEGER = "unit numerator, integer reciprocal"
    POSITIVE_PROPER = "positive proper reciprocal"
    NEGATIVE_PROPER = "negative proper reciprocal"


@dataclass(frozen=True, slots=True)
class ReciprocalVerdict:
    case_tag: ReciprocalCase
    result: CanonicalRational


@dataclass(frozen=True, slots=True)
class ScaleVerdict:
    """Outcome for r * i; witness_quotient is q with i = b * q when integral."""

    is_integer: bool
    witness_quotient: int | None
    result: CanonicalRational

    @property
    def is_proper(self) -> bool:
        """True when the result is not an integer."""
        return not self.is_integer


@dataclass(frozen=True, slots=True)
class SumVerdict:
    """Outcome for r1 + r2; divisibility_holds is None when the denominators differ."""

    is_integer: bool
    denominators_equal: bool
    divisibility_holds: bool | None
    result: CanonicalRational

    @property
    def is_proper(self) -> bool:
        """True when the result is not an integer."""
        return not self.is_integer


@dataclass(frozen=True, slots=True)
class ProductVerdict:
    is_integer: bool
    b1_divides_c2: bool
    b2_divides_c1: bool
    result: CanonicalRational

    @property
    def is_proper(self) -> bool:
        """True when the result is not an integer."""
        return not self.is_integer


@dataclass(frozen=True, slots=True)
class JointVerdict:
    """Joint integrality of a sum and a product.

    quadratic is x^2 - (q1 + q2)x + q1*q2 when both are integers, else None.
    """

    sum_is_integer: bool
    product_is_integer: bool
    both_inputs_integer: bool
    quadratic: MonicPoly | None = None


@dataclass(frozen=True, slots=True)
class VietaReport:
    i1: int
    i2: int
    polynomial: MonicPoly
    roots: list[int]
    vieta_holds: bool
    no_proper_root: bool


def _require_proper(q: CanonicalRational, operation: str) -> None:
    if q.b == 1:
        raise NotProper(q, operation)


def _check(condition: bool, message: str) -> None:
    if not condition:
        logger.error("Invariant violated: %s", message)
        raise TheoremViolation(message)


def reciprocal_verdict(r: CanonicalRational) -> ReciprocalVerdict:
    """Decide which reciprocal case applies to a proper rational c/b.

    Args:
        r: Proper rational in standard form

    Returns:
        ReciprocalVerdict with the case and the canonical reciprocal

    Raises:
        NotProper: If r is an integer
        ZeroValue: If r is zero
    """
    _require_proper(r, "reciprocal")
    if r.c == 0:
        raise ZeroValue("reciprocal")

    result = reciprocal(r)
    if abs(r.c) == 1:
        case = ReciprocalCase.UNIT_NUMERATOR_INTEGER
        _check(result.b == 1, f"1/({r}) should be an integer, got {result}")
    elif r.c >= 2:
        case = ReciprocalCase.POSITIVE_PROPER
        _check(
            result.c == r.b and result.b == r.c,
            f"1/({r}) should be the proper rational {r.b}/{r.c}, got {result}",
        )
    else:
        case = ReciprocalCase.NEGATIVE_PROPER
        _check(
            result.c == -r.b and result.b == abs(r.c),
            f"1/({r}) should be {-r.b}/{abs(r.c)}, got {result}",
        )
    return ReciprocalVerdict(case_tag=case, result=result)


def shift_verdict(r: CanonicalRational, d: int) -> CanonicalRational:
    """Return r + d, which stays proper with denominator b and numerator c + d*b.

    Raises:
        NotProper: If r is an integer
    """
    _require_proper(r, "shift")
    result = add(r, CanonicalRational.of(d))
    _check(
        result.b == r.b and result.c == r.c + d * r.b,
        f"({r}) + {d} should be {r.c + d * r.b}/{r.b}, got {result}",
    )
    return result


def scale_verdict(r: CanonicalRational, i: int) -> ScaleVerdict:
    """Decide whether r * i is an integer: exactly when b | i.

    Args:
        r: Proper rational c/b
        i: Integer factor

    Returns:
        ScaleVerdict carrying the quotient i / b when b | i

    Raises:
        NotProper: If r is an integer
    """
    _require_proper(r, "scale")
    is_integer = divides(r.b, i)
    result = mul(r, CanonicalRational.of(i))
    _check(
        is_integer == (result.b == 1),
        f"b | i is {is_integer} for ({r}) * {i} but the product is {result}",
    )
    return ScaleVerdict(
        is_integer=is_integer,
        witness_quotient=i // r.b if is_integer else None,
        result=result,
    )


def sum_verdict(r1: CanonicalRational, r2: CanonicalRational) -> SumVerdict:
    """Decide whether r1 + r2 is an integer: exactly when b1 = b2 and b1 | (c1 + c2).

    Raises:
        NotProper: If either operand is an integer
    """
    _require_proper(r1, "sum")
    _require_proper(r2, "sum")
    denominators_equal = r1.b == r2.b
    divisibility_holds = divides(r1.b, r1.c + r2.c) if denominators_equal else None
    is_integer = denominators_equal and bool(divisibility_holds)
    result = add(r1, r2)
    _check(
        is_integer == (result.b == 1),
        f"sum predicate is {is_integer} for ({r1}) + ({r2}) but the sum is {result}",
    )
    return SumVerdict(
        is_integer=is_integer,
        denominators_equal=denominators_equal,
        divisibility_holds=divisibility_holds,
        result=result,
    )


def product_verdict(r1: CanonicalRational, r2: CanonicalRational) -> ProductVerdict:
    """Decide whether r1 * r2 is an integer: exactly when b1 | c2 and b2 | c1.

    Raises:
        NotProper: If either operand is an integer
    """
    _require_proper(r1, "product")
    _require_proper(r2, "product")
    b1_divides_c2 = divides(r1.b, r2.c)
    b2_divides_c1 = divides(r2.b, r1.c)
    is_integer = b1_divides_c2 and b2_divides_c1
    result = mul(r1, r2)
    _check(
        is_integer == (result.b == 1),
        f"product predicate is {is_integer} for ({r1}) * ({r2}) but the product is {result}",
    )
    return ProductVerdict(
        is_integer=is_integer,
        b1_divides_c2=b1_divides_c2,
        b2_divides_c1=b2_divides_c1,
        result=result,
    )


def quadratic_from_sum_product(i1: int, i2: int) -> MonicPoly:
    """Build x^2 - i1*x + i2, whose roots sum to i1 and multiply to i2."""
    return MonicPoly((i2, -i1, 1))


def joint_verdict(q1: CanonicalRational, q2: CanonicalRational) -> JointVerdict:
    """Check that an integral sum and an integral product force integral operands.

    Accepts integers as well as proper rationals. When sum and product are
    both integers, the operands must also be integer roots of the monic
    quadratic built from them.
    """
    total = add(q1, q2)
    product = mul(q1, q2)
    sum_is_integer = total.b == 1
    product_is_integer = product.b == 1
    both_inputs_integer = q1.b == 1 and q2.b == 1

    quadratic = None
    if sum_is_integer and product_is_integer:
        _check(
            both_inputs_integer,
            f"({q1}) and ({q2}) have integral sum and product but are not both integers",
        )
        quadratic = quadratic_from_sum_product(total.c, product.c)
        roots = monic_rational_roots(quadratic)
        _check(
            eval_poly(quadratic, q1).c == 0 and eval_poly(quadratic, q2).c == 0,
            f"({q1}) and ({q2}) are not roots of {quadratic}",
        )
        _check(
            q1.c in roots and q2.c in roots,
            f"({q1}) and ({q2}) missing from integer roots {roots} of {quadratic}",
        )
    if q1.b >= 2 and q2.b >= 2:
        _check(
            not (sum_is_integer and product_is_integer),
            f"proper rationals ({q1}) and ({q2}) have integral sum and product",
        )

    return JointVerdict(
        sum_is_integer=sum_is_integer,
        product_is_integer=product_is_integer,
        both_inputs_integer=both_inputs_integer,
        quadratic=quadratic,
    )


def _eval_int(coefficients: tuple[int, ...], x: int) -> int:
    acc = 0
    for coeff in reversed(coefficients):
        acc = acc * x + coeff
    return acc


def _divisors(n: int) -> list[int]:
    """Positive divisors of n > 0 in increasing order."""
    small = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def _integer_roots(coefficients: tuple[int, ...]) -> set[int]:
    if len(coefficients) == 1:
        return set()
    if len(coefficients) == 2:
        return {-coefficients[0]}
    if len(coefficients) == 3:
        # x^2 + c1 x + c0: integer roots iff the discriminant is a perfect square
        c0, c1, _ = coefficients
        disc = c1 * c1 - 4 * c0
        if disc < 0:
            return set()
        s = isqrt(disc)
        if s * s != disc:
            return set()
        # s and c1 share parity since disc = c1^2 - 4 c0
        return {(-c1 + s) // 2, (-c1 - s) // 2}
    constant = coefficients[0]
    if constant == 0:
        # x divides the polynomial; deflate and keep going
        return {0} | _integer_roots(coefficients[1:])
    roots = set()
    for d in _divisors(abs(constant)):
        for candidate in (d, -d):
            if _eval_int(coefficients, candidate) == 0:
                roots.add(candidate)
    return roots


def monic_rational_roots(p: MonicPoly) -> list[int]:
    """Find every rational root of a monic integer polynomial.

    A rational root of a monic polynomial is an integer dividing the constant
    term, so only those divisors are tried. Linear and quadratic polynomials are
    solved directly from the discriminant instead. Repeated roots appear once.

    Returns:
        Distinct integer roots in increasing order
    """
    return sorted(_integer_roots(p.coefficients))


def _vanishes_at(p: MonicPoly, c: int, b: int) -> bool:
    """Return True if p(c/b) == 0, using b^n * p(c/b) to stay in integers."""
    acc = p.coefficients[-1]
    b_power = 1
    for coeff in reversed(p.coefficients[:-1]):
        b_power *= b
        acc = acc * c + coeff * b_power
    return acc == 0


def verify_no_proper_root(p: MonicPoly, search_bound: int) -> bool:
    """Exhaustively confirm that p has no proper rational root c/b.

    Scans every canonical proper c/b with 2 <= b <= search_bound and
    |c| <= search_bound.

    Raises:
        ValueError: If search_bound < 2
    """
    if search_bound < 2:
        raise ValueError(f"search_bound must be >= 2, got {search_bound}")
    for b in range(2, search_bound + 1):
        for c in range(-search_bound, search_bound + 1):
            if c == 0 or gcd(c, b) != 1:
                continue
            if _vanishes_at(p, c, b):
                logger.debug("Proper root %d/%d found for %s", c, b, p)
                return False
    return True


def vieta_check(i1: int, i2: int, search_bound: int = 20) -> VietaReport:
    """Build x^2 - i1*x + i2 and confirm its roots against i1 and i2.

    Integer roots of a monic quadratic come in pairs (the second is i1 minus
    the first), so a single listed root is a double root.
    """
    polynomial = quadratic_from_sum_product(i1, i2)
    roots = monic_rational_roots(polynomial)
    if roots:
        r1, r2 = roots[0], roots[-1]
        vieta_holds = r1 + r2 == i1 and r1 * r2 == i2
    else:
        vieta_holds = True
    return VietaReport(
        i1=i1,
        i2=i2,
        polynomial=polynomial,
        roots=roots,
        vieta_holds=vieta_holds,
        no_proper_root=verify_no_proper_root(polynomial, search_bound),
    )
