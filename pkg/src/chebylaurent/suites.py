"""
Named groups of verification checks, as run by ``chebylaurent verify``.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .census import DEFAULT_NODE_BUDGET
from .domain import CHEB_KINDS, VerifyReport
from .exceptions import DomainError
from .verify import (
    merge_reports,
    sign_pattern,
    verify_abc,
    verify_census,
    verify_coefform,
    verify_counterexample,
    verify_derivdef,
    verify_explicit,
    verify_methods,
    verify_moretrig,
    verify_moretrig_poly,
    verify_nonneg,
    verify_parity_involution,
    verify_table_agreement,
    verify_trivial,
)

logger = logging.getLogger(__name__)

POSITIVE_SAMPLE = (Fraction(3, 2), Fraction(2), Fraction(101, 100), Fraction(10))
NEGATIVE_SAMPLE = (Fraction(-3, 2), Fraction(-2))
SMALL_SAMPLE = (Fraction(1, 10), Fraction(1, 2), Fraction(9, 10), Fraction(99, 100))
METHOD_SAMPLE = (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(-3, 2), Fraction(101, 100))

Cell = Callable[[Optional[Fraction], Optional[int], int, int], List[VerifyReport]]


def _or(n_max: Optional[int], default: int) -> int:
    return default if n_max is None else n_max


def _need_c(c: Optional[Fraction]) -> Fraction:
    if c is None:
        raise DomainError("this suite needs a value of c")
    return c


def _nonneg(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    c = _need_c(c)
    return [verify_nonneg(kind, c, _or(n_max, 30 if d == 1 else 10), d) for kind in CHEB_KINDS]


def _abc(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    c = _need_c(c)
    return [verify_abc(c, _or(n_max, 30))]


def _moretrig(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    c = _need_c(c)
    return [verify_moretrig(c, max(2, _or(n_max, 30)))]


def _sign(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    c = _need_c(c)
    return [sign_pattern(c, _or(n_max, 12), d)]


def _counterexample(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    c = _need_c(c)
    return [verify_counterexample(c, _or(n_max, 64))]


def _table(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    c = _need_c(c)
    n = _or(n_max, 30)
    return [verify_table_agreement(kind, c, n) for kind in CHEB_KINDS] + [
        verify_parity_involution(kind, c, n) for kind in CHEB_KINDS
    ]


def _methods(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    c = _need_c(c)
    n = _or(n_max, 20 if d == 1 else 10)
    reports = [verify_methods(kind, c, n, d) for kind in CHEB_KINDS]
    if d == 1 and c != 0:
        reports.append(verify_explicit(c, n))
    return reports


def _trivial(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    return [verify_trivial(_or(n_max, 50))]


def _coefform(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    return [verify_coefform(_or(n_max, 64))]


def _identities(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    n = _or(n_max, 40)
    return [verify_derivdef(n), verify_moretrig_poly(max(2, n))]


def _census(c: Optional[Fraction], n_max: Optional[int], d: int, budget: int) -> List[VerifyReport]:
    return [verify_census(2, _or(n_max, 10), budget), verify_census(3, _or(n_max, 7), budget)]


# suite name -> (cell, default c sample); an empty sample marks a suite that does not depend on c
SUITES: Dict[str, Tuple[Cell, Tuple[Fraction, ...]]] = {
    "nonneg": (_nonneg, POSITIVE_SAMPLE),
    "abc": (_abc, POSITIVE_SAMPLE),
    "moretrig": (_moretrig, POSITIVE_SAMPLE),
    "sign": (_sign, NEGATIVE_SAMPLE),
    "counterexample": (_counterexample, SMALL_SAMPLE),
    "table": (_table, POSITIVE_SAMPLE),
    "methods": (_methods, METHOD_SAMPLE),
    "trivial": (_trivial, ()),
    "coefform": (_coefform, ()),
    "identities": (_identities, ()),
    "census": (_census, ()),
}

SUITE_NAMES: Tuple[str, ...] = (*SUITES, "all")


def _run_cell(
    suite: str, c: Optional[Fraction], n_max: Optional[int], d: int, budget: int = DEFAULT_NODE_BUDGET
) -> List[VerifyReport]:
    cell, _ = SUITES[suite]
    logger.debug("running suite %s for c=%s", suite, c)
    return cell(c, n_max, d, budget)


def plan_cells(
    suite: str,
    c_values: Optional[Sequence[Fraction]] = None,
) -> List[Tuple[str, Optional[Fraction]]]:
    """
    The (suite, c) cells a run consists of. Suites independent of c run once;
    the others run once per c, using the suite's own sample when none is given.
    """
    if suite != "all" and suite not in SUITES:
        raise DomainError(f"unknown suite {suite!r}, expected one of {', '.join(SUITE_NAMES)}")
    names = list(SUITES) if suite == "all" else [suite]
    cells: List[Tuple[str, Optional[Fraction]]] = []
    for name in names:
        _, sample = SUITES[name]
        if not sample:
            cells.append((name, None))
            continue
        for c in c_values or sample:
            cells.append((name, c))
    return cells


def run_suite(
    suite: str,
    c_values: Optional[Sequence[Fraction]] = None,
    n_max: Optional[int] = None,
    d: int = 1,
    workers: int = 1,
    budget: int = DEFAULT_NODE_BUDGET,
) -> List[VerifyReport]:
    """
    Run a named suite (or ``"all"``) and return its reports ordered by (c, property).
    ``budget`` caps the words the census enumerator may visit per length.
    """
    cells = plan_cells(suite, c_values)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            groups = list(
                pool.map(
                    _run_cell,
                    [name for name, _ in cells],
                    [c for _, c in cells],
                    [n_max] * len(cells),
                    [d] * len(cells),
                    [budget] * len(cells),
                )
            )
    else:
        groups = [_run_cell(name, c, n_max, d, budget) for name, c in cells]
    return merge_reports(groups)
