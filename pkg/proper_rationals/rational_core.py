"""Exact integers, divisibility and canonical rationals.

Python's ``int`` is arbitrary precision, so every operation here is exact at
any magnitude. Rationals are kept in canonical form: lowest terms, positive
denominator, sign on the numerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

__all__ = [
    "CanonicalRational",
    "Classification",
    "InvalidPolynomial",
    "MonicPoly",
    "RationalError",
    "ZeroDenominator",
    "add",
    "classify",
    "divides",
    "eval_poly",
    "gcd",
    "mul",
    "neg",
    "normalize",
    "reciprocal",
]


class RationalError(Exception):
    """Base exception for invalid rational input."""

    def __init__(self, message: str) -> None:
        """Initialize RationalError with a user-facing message."""
        self.message = message
        super().__init__(message)


class ZeroDenominator(RationalError):
    """Exception raised when a rational would have denominator 0."""

    def __init__(self, numerator: int) -> None:
        """Initialize ZeroDenominator with the offending numerator."""
        self.numerator = numerator
        super().__init__(f"Zero denominator: {numerator}/0")


class InvalidPolynomial(RationalError):
    """Exception raised when coefficients do not form a monic polynomial."""


class Classification(StrEnum):
    """Integer vs. proper rational (a rational which is not an integer)."""

    INTEGER = "integer"
    PROPER_RATIONAL = "proper rational"


def gcd(u: int, w: int) -> int:
    """Greatest common divisor by the Euclidean algorithm.

    Args:
        u: Any integer
        w: Any integer

    Returns:
        Nonnegative gcd; gcd(0, 0) is 0
    """
    u, w = abs(u), abs(w)
    while w:
        u, w = w, u % w
    return u


def divides(u: int, w: int) -> bool:
    """Return True if w = u * q for some integer q.

    Zero divides only zero.
    """
    if u == 0:
        return w == 0
    return w % u == 0


@dataclass(frozen=True, slots=True)
class CanonicalRational:
    """A rational c/b with b >= 1 and gcd(|c|, b) = 1.

    Construct through ``normalize`` unless the pair is already canonical;
    direct construction of a non-canonical pair raises RationalError.
    """

    c: int
    b: int

    def __post_init__(self) -> None:
        if self.b < 1 or gcd(self.c, self.b) != 1:
            raise RationalError(f"Not in canonical form: {self.c}/{self.b}")

    @classmethod
    def of(cls, n: int) -> CanonicalRational:
        """Build the integer n as n/1."""
        return cls(n, 1)

    @property
    def is_integer(self) -> bool:
        """True when b = 1."""
        return self.b == 1

    @property
    def is_proper(self) -> bool:
        """True when b >= 2, the standard form of a non-integer."""
        return self.b >= 2

    def __str__(self) -> str:
        return f"{self.c}/{self.b}"

    def __add__(self, other: CanonicalRational) -> CanonicalRational:
        return add(self, other)

    def __mul__(self, other: CanonicalRational) -> CanonicalRational:
        return mul(self, other)

    def __neg__(self) -> CanonicalRational:
        return neg(self)


def normalize(numerator: int, denominator: int) -> CanonicalRational:
    """Reduce numerator/denominator to canonical form.

    Args:
        numerator: Any integer
        denominator: Any nonzero integer

    Returns:
        The equal CanonicalRational; zero becomes 0/1

    Raises:
        ZeroDenominator: If denominator is 0
    """
    if denominator == 0:
        raise ZeroDenominator(numerator)
    if denominator < 0:
        numerator, denominator = -numerator, -denominator
    g = gcd(numerator, denominator)
    return CanonicalRational(numerator // g, denominator // g)


def classify(q: CanonicalRational) -> Classification:
    """Classify a canonical rational as an integer or a proper rational."""
    if q.b == 1:
        return Classification.INTEGER
    return Classification.PROPER_RATIONAL


def add(q1: CanonicalRational, q2: CanonicalRational) -> CanonicalRational:
    """Exact sum (c1*b2 + c2*b1) / (b1*b2), renormalized."""
    return normalize(q1.c * q2.b + q2.c * q1.b, q1.b * q2.b)


def mul(q1: CanonicalRational, q2: CanonicalRational) -> CanonicalRational:
    """Exact product (c1*c2) / (b1*b2), renormalized."""
    return normalize(q1.c * q2.c, q1.b * q2.b)


def neg(q: CanonicalRational) -> CanonicalRational:
    """Negate q; the denominator is unchanged."""
    return CanonicalRational(-q.c, q.b)


def reciprocal(q: CanonicalRational) -> CanonicalRational:
    """Exact reciprocal b/c.

    Raises:
        ZeroDenominator: If q is zero
    """
    return normalize(q.b, q.c)


@dataclass(frozen=True, slots=True)
class MonicPoly:
    """Integer polynomial with leading coefficient 1.

    Coefficients run from the constant term upward, so ``(6, -5, 1)`` is
    x^2 - 5x + 6.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if len(self.coefficients) < 2:
            raise InvalidPolynomial(
                f"Polynomial must have degree >= 1, got coefficients {list(self.coefficients)}"
            )
        if self.coefficients[-1] != 1:
            raise InvalidPolynomial(
                f"Polynomial must be monic (leading coefficient 1), got {self.coefficients[-1]}"
            )

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            coeff = self.coefficients[power]
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if power == 0:
                body = str(magnitude)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if magnitude == 1 else f"{magnitude}{var}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def eval_poly(p: MonicPoly, q: CanonicalRational) -> CanonicalRational:
    """Evaluate p at q exactly by Horner's rule."""
    acc = CanonicalRational.of(0)
    for coeff in reversed(p.coefficients):
        acc = add(mul(acc, q), CanonicalRational.of(coeff))
    return acc
