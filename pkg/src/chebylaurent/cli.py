"""
Command-line front end.

    chebylaurent expand --kind T --n 2 --c 2 --d 1
    chebylaurent coeff --n 4 --c 2 --k 2
    chebylaurent census --r 2 --k 2 --compare
    chebylaurent verify --suite nonneg --c 1/2 --n-max 4
    chebylaurent total --r 2 --k 2

Data goes to stdout (JSON by default, CSV with ``--format csv``); diagnostics go
to stderr. Exit codes: 0 success, 1 a verification failed or census backends
disagree, 2 usage or input errors.
"""

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Dict, List, NoReturn, Optional, Sequence, TextIO

from .census import DEFAULT_NODE_BUDGET, census_diff, run_census, sorted_census, total_count
from .domain import CHEB_KINDS, VerifyReport
from .exceptions import BudgetExceededError, ChebyLaurentError, DomainError
from .expansion import EXPANSION_METHODS, expand, explicit_coeff, explicit_coeff_u, make_request
from .suites import SUITE_NAMES, run_suite
from .utils.misc import dumps
from .utils.rational import format_rational, parse_rational

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """
    Raises usage errors instead of printing them and exiting, so `run` can write
    them to its own error stream.
    """

    def error(self, message: str) -> NoReturn:
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _rational_list_arg(text: str) -> List[Fraction]:
    return [_rational_arg(part) for part in text.split(",")]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json", help="Output format")
    common.add_argument("--verbose", action="store_true", help="Log progress to stderr")

    parser = _ArgumentParser(
        prog="chebylaurent",
        description="Exact Chebyshev-derived Laurent polynomials, free-group word census and positivity checks",
    )
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    expand_p = subparsers.add_parser("expand", parents=[common], help="Expand R_n or S_n as a Laurent polynomial")
    expand_p.add_argument("--kind", choices=CHEB_KINDS, default="T")
    expand_p.add_argument("--n", type=_non_negative_int, required=True, help="Degree")
    expand_p.add_argument("--c", type=_rational_arg, required=True, help="Parameter c as p/q or an integer")
    expand_p.add_argument("--d", type=_positive_int, default=1, help="Number of variables")
    expand_p.add_argument("--method", choices=EXPANSION_METHODS, default="recurrence")

    coeff_p = subparsers.add_parser("coeff", parents=[common], help="One coefficient of R_n(c; x) or S_n(c; x)")
    coeff_p.add_argument("--kind", choices=CHEB_KINDS, default="T")
    coeff_p.add_argument("--n", type=_non_negative_int, required=True)
    coeff_p.add_argument("--c", type=_rational_arg, required=True)
    coeff_p.add_argument("--k", type=int, required=True, help="Exponent of x")

    census_p = subparsers.add_parser("census", parents=[common], help="Count cyclically reduced words by class")
    census_p.add_argument("--r", type=_positive_int, required=True, help="Rank of the free group")
    census_p.add_argument("--k", type=_positive_int, required=True, help="Word length")
    census_p.add_argument("--backend", choices=("bruteforce", "genfn"), default="genfn")
    census_p.add_argument("--compare", action="store_true", help="Run both backends and compare")
    census_p.add_argument("--budget", type=_positive_int, default=DEFAULT_NODE_BUDGET, help="Enumerator leaf cap")
    census_p.add_argument("--workers", type=_positive_int, default=1)

    verify_p = subparsers.add_parser("verify", parents=[common], help="Run a verification suite")
    verify_p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    verify_p.add_argument(
        "--c",
        type=_rational_list_arg,
        action="extend",
        help="Values of c, repeatable or comma-separated; defaults to the suite's sample",
    )
    verify_p.add_argument("--n-max", type=_non_negative_int, default=None)
    verify_p.add_argument("--d", type=_positive_int, default=1)
    verify_p.add_argument("--workers", type=_positive_int, default=1)
    verify_p.add_argument(
        "--budget", type=_positive_int, default=DEFAULT_NODE_BUDGET, help="Census enumerator leaf cap per length"
    )

    total_p = subparsers.add_parser("total", parents=[common], help="Total number of cyclically reduced words")
    total_p.add_argument("--r", type=_positive_int, required=True)
    total_p.add_argument("--k", type=_positive_int, required=True)

    return parser


def _csv_writer(out: TextIO) -> Any:
    return csv.writer(out, lineterminator="\n")


def _emit(out: TextIO, fmt: str, payload: Any, header: Sequence[str], rows: List[List[Any]]) -> None:
    if fmt == "csv":
        writer = _csv_writer(out)
        writer.writerow(header)
        writer.writerows(rows)
    else:
        out.write(dumps(payload) + "\n")


def _cmd_expand(args: argparse.Namespace, out: TextIO) -> int:
    result = expand(make_request(args.kind, args.n, args.c, args.d), args.method)
    header = [*(f"e_{i + 1}" for i in range(args.d)), "coefficient"]
    rows = [[*e, format_rational(a)] for e, a in result.poly.sorted_terms()]
    _emit(out, args.format, result.to_dict(), header, rows)
    return EXIT_OK


def _cmd_coeff(args: argparse.Namespace, out: TextIO) -> int:
    formula = explicit_coeff if args.kind == "T" else explicit_coeff_u
    value = formula(args.n, args.c, args.k)
    payload = {"kind": args.kind, "n": args.n, "c": format_rational(args.c), "k": args.k, "value": value}
    header = ["kind", "n", "c", "k", "value"]
    _emit(out, args.format, payload, header, [[args.kind, args.n, format_rational(args.c), args.k, value]])
    return EXIT_OK


def _cmd_census(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    header_e = [f"e_{i + 1}" for i in range(args.r)]
    if not args.compare:
        result = run_census(args.r, args.k, args.backend, budget=args.budget, workers=args.workers)
        rows = [[*e, n] for e, n in sorted_census(result.census)]
        _emit(out, args.format, result.to_dict(), [*header_e, "count"], rows)
        return EXIT_OK

    genfn = run_census(args.r, args.k, "genfn")
    brute = run_census(args.r, args.k, "bruteforce", budget=args.budget, workers=args.workers)
    differences = census_diff(genfn.census, brute.census)
    agree = not differences
    if agree:
        message = f"backends agree, total {genfn.total}"
    else:
        message = f"backends disagree on {len(differences)} classes"
    payload: Dict[str, Any] = {
        "r": args.r,
        "k": args.k,
        "agree": agree,
        "total": str(genfn.total),
        "message": message,
        "differences": [{"e": list(e), "genfn": str(a), "bruteforce": str(b)} for e, a, b in differences],
    }
    classes = sorted_census({**brute.census, **genfn.census})
    rows = [[*e, genfn.census.get(e, 0), brute.census.get(e, 0)] for e, _ in classes]
    _emit(out, args.format, payload, [*header_e, "genfn", "bruteforce"], rows)
    err.write(message + "\n")
    return EXIT_OK if agree else EXIT_FAILED


def _report_row(report: VerifyReport) -> List[Any]:
    ce = report.counterexample
    k: Any = ""
    if ce is not None:
        k = " ".join(str(x) for x in ce.k) if isinstance(ce.k, tuple) else ce.k
    return [
        report.property,
        json.dumps(report.params, separators=(",", ":")),
        "true" if report.passed else "false",
        ce.n if ce else "",
        k,
        format_rational(ce.value) if ce else "",
    ]


def _cmd_verify(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    reports = run_suite(args.suite, args.c, args.n_max, args.d, workers=args.workers, budget=args.budget)
    header = ["property", "params", "pass", "n", "k", "value"]
    _emit(out, args.format, [r.to_dict() for r in reports], header, [_report_row(r) for r in reports])
    failed = [r for r in reports if not r.passed]
    for report in failed:
        ce = report.counterexample
        if ce is None:
            continue
        err.write(
            f"{report.property} failed for {json.dumps(report.params, separators=(',', ':'))}: "
            f"n={ce.n} k={list(ce.k) if isinstance(ce.k, tuple) else ce.k} value={format_rational(ce.value)}\n"
        )
    return EXIT_FAILED if failed else EXIT_OK


def _cmd_total(args: argparse.Namespace, out: TextIO) -> int:
    total = total_count(args.r, args.k)
    _emit(out, args.format, {"r": args.r, "k": args.k, "total": str(total)}, ["r", "k", "total"], [[args.r, args.k, total]])
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    Parse ``argv`` and dispatch; returns the process exit code.
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        err.write(str(e))
        return EXIT_USAGE
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        stream=err,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logger.debug("dispatching %s", args.command)

    try:
        if args.command == "expand":
            return _cmd_expand(args, out)
        if args.command == "coeff":
            return _cmd_coeff(args, out)
        if args.command == "census":
            return _cmd_census(args, out, err)
        if args.command == "verify":
            return _cmd_verify(args, out, err)
        if args.command == "total":
            return _cmd_total(args, out)
    except BudgetExceededError as e:
        err.write(f"chebylaurent: {e}; raise --budget to allow it\n")
        return EXIT_USAGE
    except ChebyLaurentError as e:
        err.write(f"chebylaurent: {e}\n")
        return EXIT_USAGE
    parser.print_usage(err)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())
