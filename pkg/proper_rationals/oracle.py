"""Brute-force enumeration and searches over bounded boxes of rationals.

Integrality here is decided by direct arithmetic on raw numerators and
denominators with math.gcd, never through the verdict predicates, so the
results can be used to cross-check them.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from proper_rationals.rational_core import CanonicalRational, RationalError

logger = logging.getLogger(__name__)


class InvalidBox(RationalError):
    """Exception raised when box bounds are out of range."""


@dataclass(frozen=True, slots=True)
class Box:
    """Bounds 0 < |c| <= max_abs_numerator, 2 <= b <= max_denominator."""

    max_abs_numerator: int
    max_denominator: int

    def __post_init__(self) -> None:
        if self.max_abs_numerator < 1:
            raise InvalidBox(f"max_abs_numerator must be >= 1, got {self.max_abs_numerator}")
        if self.max_denominator < 2:
            raise InvalidBox(f"max_denominator must be >= 2, got {self.max_denominator}")


@dataclass(frozen=True, slots=True)
class CounterexampleReport:
    found: bool
    pair: tuple[CanonicalRational, CanonicalRational] | None
    pairs_scanned: int


@dataclass(frozen=True, slots=True)
class EuclidReport:
    """Scan of Euclid's lemma: m | nk and gcd(m, n) = 1 imply m | k."""

    triples_scanned: int
    hypothesis_count: int
    violations: list[tuple[int, int, int]] = field(default_factory=list)


def enumerate_proper(box: Box) -> Iterator[CanonicalRational]:
    """Yield every canonical proper rational in the box, b ascending then c ascending."""
    n = box.max_abs_numerator
    for b in range(2, box.max_denominator + 1):
        for c in range(-n, n + 1):
            if c != 0 and math.gcd(c, b) == 1:
                yield CanonicalRational(c, b)


def enumerate_canonical(
    max_abs_numerator: int, max_denominator: int
) -> Iterator[CanonicalRational]:
    """Yield integers -N..N (as n/1) followed by the proper rationals of the box."""
    if max_abs_numerator < 1 or max_denominator < 1:
        raise InvalidBox(
            f"bounds must be >= 1, got max_abs_numerator={max_abs_numerator}, "
            f"max_denominator={max_denominator}"
        )
    for c in range(-max_abs_numerator, max_abs_numerator + 1):
        yield CanonicalRational(c, 1)
    if max_denominator >= 2:
        yield from enumerate_proper(Box(max_abs_numerator, max_denominator))


def _is_integral(numerator: int, denominator: int) -> bool:
    g = math.gcd(numerator, denominator)
    return abs(denominator) // g == 1


def direct_is_integer(q: CanonicalRational) -> bool:
    """Decide integrality from a fresh reduction of q.c / q.b."""
    return _is_integral(q.c, q.b)


def direct_sum_is_integer(q1: CanonicalRational, q2: CanonicalRational) -> bool:
    """Decide integrality of (c1*b2 + c2*b1) / (b1*b2) by direct reduction."""
    return _is_integral(q1.c * q2.b + q2.c * q1.b, q1.b * q2.b)


def direct_product_is_integer(q1: CanonicalRational, q2: CanonicalRational) -> bool:
    """Decide integrality of (c1*c2) / (b1*b2) by direct reduction."""
    return _is_integral(q1.c * q2.c, q1.b * q2.b)


def _search_pairs(
    values: Sequence[CanonicalRational], skip_integer_pairs: bool
) -> CounterexampleReport:
    scanned = 0
    for idx, q1 in enumerate(values):
        for q2 in values[idx:]:
            scanned += 1
            if skip_integer_pairs and q1.b == 1 and q2.b == 1:
                continue
            if direct_sum_is_integer(q1, q2) and direct_product_is_integer(q1, q2):
                logger.warning("Counterexample found: %s, %s", q1, q2)
                return CounterexampleReport(found=True, pair=(q1, q2), pairs_scanned=scanned)
    return CounterexampleReport(found=False, pair=None, pairs_scanned=scanned)


def search_theorem7(box: Box) -> CounterexampleReport:
    """Look for two proper rationals whose sum and product are both integers.

    Scans unordered pairs with repetition in enumeration order and stops at
    the first hit.
    """
    report = _search_pairs(list(enumerate_proper(box)), skip_integer_pairs=False)
    logger.info(
        "Scanned %d proper pairs in box (%d, %d)",
        report.pairs_scanned,
        box.max_abs_numerator,
        box.max_denominator,
    )
    return report


def search_theorem6(max_abs_numerator: int, max_denominator: int) -> CounterexampleReport:
    """Look for a pair with integral sum and product where some operand is proper.

    Pairs of two integers are counted but cannot be counterexamples.
    """
    values = list(enumerate_canonical(max_abs_numerator, max_denominator))
    report = _search_pairs(values, skip_integer_pairs=True)
    logger.info(
        "Scanned %d canonical pairs in box (%d, %d)",
        report.pairs_scanned,
        max_abs_numerator,
        max_denominator,
    )
    return report


def check_euclid_lemma(bound: int) -> EuclidReport:
    """Scan all nonzero m, n, k with |m|, |n|, |k| <= bound."""
    if bound < 1:
        raise InvalidBox(f"bound must be >= 1, got {bound}")
    values = [v for v in range(-bound, bound + 1) if v != 0]
    scanned = 0
    hypothesis_count = 0
    violations: list[tuple[int, int, int]] = []
    for m in values:
        for n in values:
            coprime = math.gcd(m, n) == 1
            for k in values:
                scanned += 1
                if coprime and (n * k) % m == 0:
                    hypothesis_count += 1
                    if k % m != 0:
                        violations.append((m, n, k))
    logger.info("Scanned %d triples, %d satisfy the hypothesis", scanned, hypothesis_count)
    return EuclidReport(
        triples_scanned=scanned, hypothesis_count=hypothesis_count, violations=violations
    )
