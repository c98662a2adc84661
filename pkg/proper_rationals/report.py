"""Report documents and their text and JSON renderings."""

from __future__ import annotations

import json
from typing import TypedDict

from proper_rationals.expr import Add, Expr, Mul, Recip, evaluate, to_text
from proper_rationals.oracle import CounterexampleReport
from proper_rationals.rational_core import CanonicalRational, MonicPoly, classify
from proper_rationals.verdicts import (
    ReciprocalCase,
    VietaReport,
    product_verdict,
    reciprocal_verdict,
    scale_verdict,
    shift_verdict,
    sum_verdict,
)

Witness = int | bool | str | None


class AppliedTheorem(TypedDict):
    """One theorem whose preconditions matched the top-level expression."""

    name: str
    condition_text: str
    witnesses: dict[str, Witness]


class VerdictReportDoc(TypedDict):
    """Typed structure returned by explain and classify_expression."""

    input_text: str
    value: str
    classification: str
    applied_theorems: list[AppliedTheorem]


_RECIPROCAL_CONDITIONS = {
    ReciprocalCase.UNIT_NUMERATOR_INTEGER: "|c| = 1, reciprocal is an integer",
    ReciprocalCase.POSITIVE_PROPER: "c >= 2, reciprocal is a positive proper rational",
    ReciprocalCase.NEGATIVE_PROPER: (
        "c <= -2, reciprocal is a negative proper rational d/|c| with d = -b"
    ),
}


def _reciprocal_entry(r: CanonicalRational) -> AppliedTheorem:
    verdict = reciprocal_verdict(r)
    return {
        "name": "theorem 1",
        "condition_text": _RECIPROCAL_CONDITIONS[verdict.case_tag],
        "witnesses": {"c": r.c, "b": r.b, "case": verdict.case_tag.name},
    }


def _shift_entry(r: CanonicalRational, d: int) -> AppliedTheorem:
    result = shift_verdict(r, d)
    return {
        "name": "theorem 2",
        "condition_text": "r + d is a proper rational",
        "witnesses": {"c": r.c, "b": r.b, "d": d, "numerator": result.c},
    }


def _scale_entry(r: CanonicalRational, i: int) -> AppliedTheorem:
    verdict = scale_verdict(r, i)
    return {
        "name": "theorem 3",
        "condition_text": "r*i is an integer iff b | i",
        "witnesses": {
            "b": r.b,
            "i": i,
            "b_divides_i": verdict.is_integer,
            "q": verdict.witness_quotient,
        },
    }


def _sum_entry(r1: CanonicalRational, r2: CanonicalRational) -> AppliedTheorem:
    verdict = sum_verdict(r1, r2)
    return {
        "name": "theorem 4",
        "condition_text": "r1 + r2 is an integer iff b1 = b2 and b1 | (c1 + c2)",
        "witnesses": {
            "b1": r1.b,
            "b2": r2.b,
            "c1_plus_c2": r1.c + r2.c,
            "denominators_equal": verdict.denominators_equal,
            "divisibility_holds": verdict.divisibility_holds,
        },
    }


def _product_entry(r1: CanonicalRational, r2: CanonicalRational) -> AppliedTheorem:
    verdict = product_verdict(r1, r2)
    return {
        "name": "theorem 5",
        "condition_text": "r1*r2 is an integer iff b1 | c2 and b2 | c1",
        "witnesses": {
            "b1": r1.b,
            "c2": r2.c,
            "b2": r2.b,
            "c1": r1.c,
            "b1_divides_c2": verdict.b1_divides_c2,
            "b2_divides_c1": verdict.b2_divides_c1,
        },
    }


def _applied_theorems(e: Expr) -> list[AppliedTheorem]:
    match e:
        case Add(left, right):
            a, b = evaluate(left), evaluate(right)
            if a.b >= 2 and b.b >= 2:
                return [_sum_entry(a, b)]
            if a.b >= 2:
                return [_shift_entry(a, b.c)]
            if b.b >= 2:
                return [_shift_entry(b, a.c)]
        case Mul(left, right):
            a, b = evaluate(left), evaluate(right)
            if a.b >= 2 and b.b >= 2:
                return [_product_entry(a, b)]
            if a.b >= 2:
                return [_scale_entry(a, b.c)]
            if b.b >= 2:
                return [_scale_entry(b, a.c)]
        case Recip(operand):
            r = evaluate(operand)
            if r.b >= 2:
                return [_reciprocal_entry(r)]
    return []


def classify_expression(e: Expr, input_text: str | None = None) -> VerdictReportDoc:
    """Evaluate e and report its value and classification only."""
    value = evaluate(e)
    return {
        "input_text": input_text if input_text is not None else to_text(e),
        "value": str(value),
        "classification": classify(value).value,
        "applied_theorems": [],
    }


def explain(e: Expr, input_text: str | None = None) -> VerdictReportDoc:
    """Evaluate e and attach the verdict matching its top-level node.

    Only the top-level node is explained; nested subexpressions are
    evaluated silently.

    Args:
        e: Parsed expression
        input_text: Text to echo in the report (defaults to the printed tree)

    Returns:
        VerdictReportDoc with zero or one applied theorem

    Raises:
        RecipOfZero: If a recip(...) argument evaluates to zero
    """
    doc = classify_expression(e, input_text)
    doc["applied_theorems"] = _applied_theorems(e)
    return doc


def _format_witness(value: Witness) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def format_classification(doc: VerdictReportDoc) -> str:
    value = doc["value"]
    if doc["classification"] == "integer":
        return f"{value} : integer (b=1)"
    denominator = value.split("/")[1]
    return f"{value} : proper rational (standard form, b={denominator})"


def format_explanation(doc: VerdictReportDoc) -> str:
    parts = [f"{doc['input_text']} = {doc['value']} : {doc['classification']}"]
    for applied in doc["applied_theorems"]:
        witnesses = ", ".join(
            f"{key}={_format_witness(val)}" for key, val in applied["witnesses"].items()
        )
        parts.append(f"{applied['name']}: {applied['condition_text']} [{witnesses}]")
    return " | ".join(parts)


def _format_roots(roots: list[int]) -> str:
    return "[" + ", ".join(str(r) for r in roots) + "]"


def roots_doc(p: MonicPoly, roots: list[int]) -> dict[str, object]:
    return {
        "polynomial": str(p),
        "coefficients": list(p.coefficients),
        "roots": roots,
    }


def format_roots(p: MonicPoly, roots: list[int]) -> str:
    return f"{p} : roots {_format_roots(roots)}"


def vieta_doc(report: VietaReport) -> dict[str, object]:
    return {
        "polynomial": str(report.polynomial),
        "coefficients": list(report.polynomial.coefficients),
        "roots": report.roots,
        "sum": report.i1,
        "product": report.i2,
        "vieta_holds": report.vieta_holds,
        "no_proper_root": report.no_proper_root,
    }


def format_vieta(report: VietaReport) -> str:
    if not report.roots:
        outcome = "no rational roots"
    else:
        outcome = "vieta holds" if report.vieta_holds else "vieta fails"
    return (
        f"{report.polynomial} : roots {_format_roots(report.roots)} "
        f"(sum {report.i1}, product {report.i2}, {outcome})"
    )


def search_doc(
    theorem: str, report: CounterexampleReport, max_num: int, max_den: int
) -> dict[str, object]:
    return {
        "theorem": theorem,
        "found": report.found,
        "pair": [str(q) for q in report.pair] if report.pair else None,
        "pairs_scanned": report.pairs_scanned,
        "max_num": max_num,
        "max_den": max_den,
    }


def format_search(report: CounterexampleReport) -> str:
    if report.pair is None:
        return f"no counterexample; pairs scanned: {report.pairs_scanned}"
    q1, q2 = report.pair
    return f"counterexample: {q1}, {q2}; pairs scanned: {report.pairs_scanned}"


def check_doc(theorem: str, agreements: int, max_num: int, max_den: int) -> dict[str, object]:
    return {
        "theorem": theorem,
        "agreements": agreements,
        "max_num": max_num,
        "max_den": max_den,
    }


def format_check(theorem: str, agreements: int, max_num: int, max_den: int) -> str:
    return (
        f"theorem {theorem.removeprefix('t')}: {agreements} agreements "
        f"(max-num {max_num}, max-den {max_den})"
    )


def to_json(doc: object) -> str:
    """Serialize a report document (or a list of them) as indented JSON."""
    return json.dumps(doc, indent=2)
