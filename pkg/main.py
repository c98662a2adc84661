"""Proper rationals CLI application."""

import argparse
import logging
import sys
from collections.abc import Callable
from pathlib import Path

from proper_rationals.config import (
    get_default_box,
    get_log_level,
    get_search_bound,
    load_config,
)
from proper_rationals.expr import parse
from proper_rationals.logging import setup_logging
from proper_rationals.oracle import Box, search_theorem6, search_theorem7
from proper_rationals.rational_core import MonicPoly, RationalError
from proper_rationals.report import (
    VerdictReportDoc,
    check_doc,
    classify_expression,
    explain,
    format_check,
    format_classification,
    format_explanation,
    format_roots,
    format_search,
    format_vieta,
    roots_doc,
    search_doc,
    to_json,
    vieta_doc,
)
from proper_rationals.validation import OracleMismatch, Theorem, cross_validate
from proper_rationals.verdicts import TheoremViolation, monic_rational_roots, vieta_check

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INVARIANT_VIOLATION = 2


def parse_args(args: list[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true", help="Print machine-readable JSON")

    box = argparse.ArgumentParser(add_help=False)
    box.add_argument("--max-num", type=int, help="Largest |c| (default: from config)")
    box.add_argument("--max-den", type=int, help="Largest b (default: from config)")

    parser = argparse.ArgumentParser(
        description="Classify rationals and decide integrality questions with witnesses"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("classify", "Evaluate an expression and classify the value"),
        ("explain", "Evaluate an expression and explain the top-level verdict"),
    ):
        cmd = commands.add_parser(name, parents=[output], help=help_text)
        cmd.add_argument("expr", nargs="?", help="Expression, e.g. '1/2 + 1/2'")
        cmd.add_argument("--batch", metavar="FILE", help="Read one expression per line")

    roots = commands.add_parser(
        "roots", parents=[output], help="Integer roots of a monic polynomial"
    )
    roots.add_argument("coefficients", nargs="+", type=int, help="Constant term first, last is 1")

    vieta = commands.add_parser(
        "vieta", parents=[output], help="Roots of x^2 - i1*x + i2 checked against i1, i2"
    )
    vieta.add_argument("i1", type=int)
    vieta.add_argument("i2", type=int)

    commands.add_parser(
        "search-t7",
        parents=[output, box],
        help="Search for two proper rationals with integral sum and product",
    )
    commands.add_parser(
        "search-t6",
        parents=[output, box],
        help="Search canonical pairs (integers included) for integral sum and product",
    )

    check = commands.add_parser(
        "check", parents=[output, box], help="Cross-validate a predicate against the oracle"
    )
    check.add_argument("--theorem", required=True, choices=[t.value for t in Theorem])

    return parser.parse_args(args)


def print_error(message: str) -> None:
    """Log error message."""
    logger.error(message)


def _resolve_box(args: argparse.Namespace) -> tuple[int, int]:
    default_num, default_den = get_default_box()
    max_num = args.max_num if args.max_num is not None else default_num
    max_den = args.max_den if args.max_den is not None else default_den
    return max_num, max_den


def _run_expressions(args: argparse.Namespace) -> int:
    """Run classify or explain on one expression or a batch file."""
    build: Callable[..., VerdictReportDoc]
    if args.command == "classify":
        build, render = classify_expression, format_classification
    else:
        build, render = explain, format_explanation

    if (args.expr is None) == (args.batch is None):
        print_error("Give exactly one of an expression or --batch FILE")
        return EXIT_INPUT_ERROR

    if args.batch is None:
        doc = build(parse(args.expr), args.expr.strip())
        print(to_json(doc) if args.json else render(doc))
        return EXIT_OK

    lines = Path(args.batch).read_text(encoding="utf-8").splitlines()
    exit_code = EXIT_OK
    results: list[object] = []
    for line in (raw.strip() for raw in lines):
        if not line:
            continue
        try:
            doc = build(parse(line), line)
        except (RationalError, TheoremViolation, ValueError) as e:
            if isinstance(e, RationalError | TheoremViolation):
                message = e.message
            else:
                message = f"{type(e).__name__}: {e}"
            print_error(f"{line}: {message}")
            failed = (
                EXIT_INVARIANT_VIOLATION if isinstance(e, TheoremViolation) else EXIT_INPUT_ERROR
            )
            exit_code = max(exit_code, failed)
            results.append({"input_text": line, "error": message})
            if not args.json:
                print(f"error: {message}")
            continue
        results.append(doc)
        if not args.json:
            print(render(doc))
    if args.json:
        print(to_json(results))
    return exit_code


def _run_roots(args: argparse.Namespace) -> int:
    polynomial = MonicPoly(tuple(args.coefficients))
    roots = monic_rational_roots(polynomial)
    print(to_json(roots_doc(polynomial, roots)) if args.json else format_roots(polynomial, roots))
    return EXIT_OK


def _run_vieta(args: argparse.Namespace) -> int:
    report = vieta_check(args.i1, args.i2, get_search_bound())
    print(to_json(vieta_doc(report)) if args.json else format_vieta(report))
    if not (report.vieta_holds and report.no_proper_root):
        print_error(f"Root check failed for {report.polynomial}")
        return EXIT_INVARIANT_VIOLATION
    return EXIT_OK


def _run_search(args: argparse.Namespace) -> int:
    max_num, max_den = _resolve_box(args)
    if args.command == "search-t7":
        report = search_theorem7(Box(max_num, max_den))
    else:
        report = search_theorem6(max_num, max_den)
    theorem = args.command.removeprefix("search-")
    if args.json:
        print(to_json(search_doc(theorem, report, max_num, max_den)))
    else:
        print(format_search(report))
    return EXIT_INVARIANT_VIOLATION if report.found else EXIT_OK


def _run_check(args: argparse.Namespace) -> int:
    max_num, max_den = _resolve_box(args)
    agreements = cross_validate(Box(max_num, max_den), Theorem(args.theorem))
    if args.json:
        print(to_json(check_doc(args.theorem, agreements, max_num, max_den)))
    else:
        print(format_check(args.theorem, agreements, max_num, max_den))
    return EXIT_OK


_HANDLERS: dict[str, Callable[[argparse.Namespace], int]] = {
    "classify": _run_expressions,
    "explain": _run_expressions,
    "roots": _run_roots,
    "vieta": _run_vieta,
    "search-t7": _run_search,
    "search-t6": _run_search,
    "check": _run_check,
}


def run_cli(argv: list[str]) -> int:
    """Run one CLI invocation.

    Args:
        argv: Arguments without the program name

    Returns:
        Exit code (0 success, 1 input error, 2 invariant violation)
    """
    # literals and coefficients are unbounded integers
    sys.set_int_max_str_digits(0)
    try:
        args = parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help and 2 for usage errors
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT_ERROR

    try:
        return _HANDLERS[args.command](args)
    except (TheoremViolation, OracleMismatch) as e:
        print_error(e.message)
        return EXIT_INVARIANT_VIOLATION
    except RationalError as e:
        print_error(e.message)
        return EXIT_INPUT_ERROR
    except (ValueError, OSError) as e:
        print_error(f"{type(e).__name__}: {e}")
        return EXIT_INPUT_ERROR


def main() -> int:
    """Run the proper rationals CLI."""
    load_config()
    try:
        level = get_log_level()
    except ValueError as e:
        setup_logging()
        print_error(str(e))
        return EXIT_INPUT_ERROR
    setup_logging(level)
    return run_cli(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
