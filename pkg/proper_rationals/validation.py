"""Cross-check verdict predicates against the brute-force oracle."""

from __future__ import annotations

import logging
from enum import StrEnum

from proper_rationals.oracle import (
    Box,
    direct_is_integer,
    direct_product_is_integer,
    direct_sum_is_integer,
    enumerate_proper,
)
from proper_rationals.rational_core import CanonicalRational
from proper_rationals.verdicts import (
    ReciprocalCase,
    product_verdict,
    reciprocal_verdict,
    scale_verdict,
    shift_verdict,
    sum_verdict,
)

logger = logging.getLogger(__name__)


class Theorem(StrEnum):
    """Selectable predicate families; values are the CLI spellings."""

    RECIPROCAL = "t1"
    SHIFT = "t2"
    SCALE = "t3"
    SUM = "t4"
    PRODUCT = "t5"


class OracleMismatch(Exception):
    """Exception raised when a predicate disagrees with the oracle."""

    def __init__(self, theorem: Theorem, case: tuple[object, ...], message: str) -> None:
        """Initialize OracleMismatch with the offending input tuple."""
        self.theorem = theorem
        self.case = case
        self.message = f"{theorem.value} mismatch on {tuple(str(v) for v in case)}: {message}"
        super().__init__(self.message)


def _integer_operands(box: Box) -> range:
    return range(-box.max_abs_numerator, box.max_abs_numerator + 1)


def _check_reciprocal(r: CanonicalRational) -> None:
    verdict = reciprocal_verdict(r)
    unit_case = verdict.case_tag is ReciprocalCase.UNIT_NUMERATOR_INTEGER
    if unit_case != direct_is_integer(verdict.result):
        raise OracleMismatch(
            Theorem.RECIPROCAL, (r,), f"case {verdict.case_tag} but 1/r = {verdict.result}"
        )
    if r.c * verdict.result.c != r.b * verdict.result.b:
        raise OracleMismatch(Theorem.RECIPROCAL, (r,), f"r * {verdict.result} != 1")


def _check_shift(r: CanonicalRational, d: int) -> None:
    result = shift_verdict(r, d)
    if direct_sum_is_integer(r, CanonicalRational.of(d)) or result.b != r.b:
        raise OracleMismatch(Theorem.SHIFT, (r, d), f"r + d = {result}")


def _check_scale(r: CanonicalRational, i: int) -> None:
    verdict = scale_verdict(r, i)
    if verdict.is_integer != direct_product_is_integer(r, CanonicalRational.of(i)):
        raise OracleMismatch(Theorem.SCALE, (r, i), f"predicate says {verdict.is_integer}")


def _check_sum(r1: CanonicalRational, r2: CanonicalRational) -> None:
    verdict = sum_verdict(r1, r2)
    if verdict.is_integer != direct_sum_is_integer(r1, r2):
        raise OracleMismatch(Theorem.SUM, (r1, r2), f"predicate says {verdict.is_integer}")


def _check_product(r1: CanonicalRational, r2: CanonicalRational) -> None:
    verdict = product_verdict(r1, r2)
    if verdict.is_integer != direct_product_is_integer(r1, r2):
        raise OracleMismatch(Theorem.PRODUCT, (r1, r2), f"predicate says {verdict.is_integer}")


def cross_validate(box: Box, which: Theorem) -> int:
    """Compare a predicate family with direct integrality on every input in the box.

    Pairwise families scan unordered pairs with repetition; the scale and
    shift families pair each proper rational with every integer in
    [-max_abs_numerator, max_abs_numerator].

    Args:
        box: Enumeration bounds
        which: Predicate family to check

    Returns:
        Number of input tuples checked (all of which agreed)

    Raises:
        OracleMismatch: On the first disagreement
    """
    values = list(enumerate_proper(box))
    count = 0
    if which is Theorem.RECIPROCAL:
        for r in values:
            _check_reciprocal(r)
            count += 1
    elif which is Theorem.SHIFT or which is Theorem.SCALE:
        check_one = _check_shift if which is Theorem.SHIFT else _check_scale
        for r in values:
            for n in _integer_operands(box):
                check_one(r, n)
                count += 1
    else:
        check_pair = _check_sum if which is Theorem.SUM else _check_product
        for idx, r1 in enumerate(values):
            for r2 in values[idx:]:
                check_pair(r1, r2)
                count += 1
    logger.info(
        "%s: %d agreements in box (%d, %d)",
        which.value,
        count,
        box.max_abs_numerator,
        box.max_denominator,
    )
    return count
