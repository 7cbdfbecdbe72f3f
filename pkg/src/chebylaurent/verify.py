"""
Exact checks of the positivity results for R_n and S_n, the identities they rest on,
and searches for the parameter ranges where positivity fails.

Every check returns a `VerifyReport`; a failing property is a report with its
first counterexample, never an exception.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .census import (
    DEFAULT_NODE_BUDGET,
    census_bruteforce,
    census_diff,
    census_genfn,
    census_total,
    genfn_polynomial,
    is_symmetric,
    total_count,
)
from .chebyshev import (
    cheb_coeff_closed,
    cheb_coeffs,
    cheb_u_coeff_closed,
    dense_scale,
    dense_sub,
)
from .domain import ChebKind, CoeffTable, Counterexample, ExpansionRequest, ExpVec, VerifyReport, check_kind
from .exceptions import DomainError
from .expansion import expand_compose, expand_recurrence, explicit_coeff, explicit_coeff_u
from .laurent import LaurentPoly, lp_derivative, lp_evaluate_ones, lp_scale
from .utils.misc import graded_lex_key
from .utils.rational import RationalLike, format_rational, sign, to_rational

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_CAP = 64
"""
Largest degree `find_counterexample` examines.
"""

Exponent = Union[int, ExpVec]


class _Tally:
    """
    Counts checks and keeps the first failure.
    """

    def __init__(self) -> None:
        self.checked = 0
        self.failure: Optional[Counterexample] = None
        self.notes: List[str] = []

    def check(self, ok: bool, n: int, k: Exponent, value: Fraction, note: Optional[str] = None) -> bool:
        self.checked += 1
        if not ok and self.failure is None:
            self.failure = Counterexample(n=n, k=k, value=value)
            if note:
                self.notes.append(note)
        return ok

    def report(self, prop: str, params: Dict[str, Any]) -> VerifyReport:
        passed = self.failure is None
        if not passed:
            logger.info("%s failed for %s at %s", prop, params, self.failure)
        return VerifyReport(
            property=prop,
            params=params,
            passed=passed,
            counterexample=self.failure,
            checked=self.checked,
            notes=tuple(self.notes),
        )


def _params(**kwargs: Any) -> Dict[str, Any]:
    return {k: format_rational(v) if isinstance(v, Fraction) else v for k, v in kwargs.items()}


def _k(e: ExpVec) -> Exponent:
    return e[0] if len(e) == 1 else e


def parity_support(n: int, d: int) -> List[ExpVec]:
    """
    Exponent vectors e with |e_1| + ... + |e_d| <= n and n - sum(e) even, graded-lex ordered.
    These are the only places a degree-n expansion can be non-zero.
    """
    vectors = [
        e for e in product(range(-n, n + 1), repeat=d) if sum(abs(x) for x in e) <= n and (n - sum(e)) % 2 == 0
    ]
    return sorted(vectors, key=graded_lex_key)


def _is_parity_compatible(e: ExpVec, n: int) -> bool:
    return sum(abs(x) for x in e) <= n and (n - sum(e)) % 2 == 0


def build_table(kind: ChebKind, c: RationalLike, n_max: int) -> CoeffTable:
    """
    Coefficient rows of T_n((c/2)(x + 1/x)) or U_n(...) for n = 0..n_max from

        a_{n+1}^k = c (a_n^{k-1} + a_n^{k+1}) - a_{n-1}^k

    seeded with a_0^0 = 1 and a_1^{+-1} = c (kind "U") or c/2 (kind "T").
    """
    check_kind(kind)
    c = to_rational(c)
    if n_max < 0:
        raise DomainError(f"n_max must be non-negative, got {n_max}")
    rows: List[Dict[int, Fraction]] = [{0: Fraction(1)}]
    if n_max >= 1:
        seed = c if kind == "U" else c / 2
        rows.append({-1: seed, 1: seed} if seed else {})
    for n in range(1, n_max):
        current, previous = rows[n], rows[n - 1]
        nxt: Dict[int, Fraction] = {}
        for k in range(-n - 1, n + 2):
            value = c * (current.get(k - 1, 0) + current.get(k + 1, 0)) - previous.get(k, 0)
            if value:
                nxt[k] = value
        rows.append(nxt)
    return CoeffTable(kind=kind, c=c, rows=tuple(rows))


def verify_nonneg(kind: ChebKind, c: RationalLike, n_max: int, d: int = 1) -> VerifyReport:
    """
    For n <= n_max: every parity-compatible coefficient of the d-variable expansion
    is strictly positive and every other coefficient is exactly zero.
    """
    c = to_rational(c)
    tally = _Tally()
    negative_seen = False
    for n in range(n_max + 1):
        poly = expand_recurrence(ExpansionRequest(kind, n, c, d))
        for e in parity_support(n, d):
            value = poly.coeff(e)
            negative_seen = negative_seen or value < 0
            tally.check(value > 0, n, _k(e), value)
        for e, value in poly.sorted_terms():
            if not _is_parity_compatible(e, n):
                tally.check(False, n, _k(e), value, note="non-zero coefficient off the parity support")
    if tally.failure is not None and not negative_seen:
        tally.notes.append("all coefficients are non-negative; strict positivity fails (boundary behaviour)")
    return tally.report("nonneg", _params(kind=kind, c=c, n_max=n_max, d=d))


def verify_abc(c: RationalLike, n_max: int) -> VerifyReport:
    """
    On the second-kind table, for n - k even and |k| <= n:

    (a) a_n^k > 0, (b) a_n^k > max(a_{n-1}^{k-1}, a_{n-1}^{k+1}), (c) a_n^k > a_{n-2}^k;

    for n - k odd, a_n^k = 0.
    """
    c = to_rational(c)
    if c <= 1:
        logger.warning("properties (a)-(c) are only claimed for c > 1, got c = %s", format_rational(c))
    table = build_table("U", c, n_max)
    tally = _Tally()
    for n in range(n_max + 1):
        for k in range(-n, n + 1):
            a = table.get(n, k)
            if (n - k) % 2:
                tally.check(a == 0, n, k, a, note=f"(a) a_{n}^{k} should vanish")
                continue
            tally.check(a > 0, n, k, a, note=f"(a) fails first at n={n}, k={k}")
            if n >= 1:
                bound = max(table.get(n - 1, k - 1), table.get(n - 1, k + 1))
                tally.check(a > bound, n, k, a, note=f"(b) fails first at n={n}, k={k}")
            if n >= 2:
                tally.check(a > table.get(n - 2, k), n, k, a, note=f"(c) fails first at n={n}, k={k}")
    if c == 1:
        tally.notes.append("c = 1 is the boundary: the base case a_1^1 = c > a_0^0 holds only with equality")
    return tally.report("abc", _params(c=c, n_max=n_max))


def verify_moretrig(c: RationalLike, n_max: int) -> VerifyReport:
    """
    b_n^k = (a_n^k - a_{n-2}^k) / 2 for 2 <= n <= n_max and |k| <= n, where a and b
    are the second- and first-kind tables. For c > 1 also b_n^k > 0 when n - k is even.

    The relation b_n^k = a_n^k - a_n^{k-2} is evaluated alongside; its outcome goes
    into the notes, it does not decide the report.
    """
    c = to_rational(c)
    if n_max < 2:
        raise DomainError(f"n_max must be at least 2, got {n_max}")
    a_table = build_table("U", c, n_max)
    b_table = build_table("T", c, n_max)
    tally = _Tally()
    other_mismatch: Optional[Tuple[int, int]] = None
    other_checked = 0
    for n in range(2, n_max + 1):
        for k in range(-n, n + 1):
            b = b_table.get(n, k)
            expected = (a_table.get(n, k) - a_table.get(n - 2, k)) / 2
            tally.check(b == expected, n, k, b)
            if c > 1 and (n - k) % 2 == 0:
                tally.check(b > 0, n, k, b, note=f"b_{n}^{k} is not positive")
            other_checked += 1
            if other_mismatch is None and b != a_table.get(n, k) - a_table.get(n, k - 2):
                other_mismatch = (n, k)
    if other_mismatch is None:
        tally.notes.append(f"b_n^k = a_n^k - a_n^(k-2) also holds on all {other_checked} entries")
    else:
        n, k = other_mismatch
        tally.notes.append(f"b_n^k = a_n^k - a_n^(k-2) does not hold: first mismatch at n={n}, k={k}")
    return tally.report("moretrig", _params(c=c, n_max=n_max))


def sign_pattern(c: RationalLike, n_max: int, d: int = 1, kinds: Sequence[ChebKind] = ("T", "U")) -> VerifyReport:
    """
    Every non-zero coefficient of R_n(c; .) and S_n(c; .) has sign (-1)^n, n <= n_max.
    """
    c = to_rational(c)
    if c >= -1:
        logger.warning("the (-1)^n sign pattern is only claimed for c < -1, got c = %s", format_rational(c))
    tally = _Tally()
    for kind in kinds:
        for n in range(n_max + 1):
            expected = (-1) ** n
            for e, value in expand_recurrence(ExpansionRequest(kind, n, c, d)).sorted_terms():
                tally.check(sign(value) == expected, n, _k(e), value, note=f"kind {kind}")
    return tally.report("sign", _params(kinds="".join(kinds), c=c, n_max=n_max, d=d))


def find_counterexample(
    c: RationalLike,
    cap: int = DEFAULT_SEARCH_CAP,
    kinds: Sequence[ChebKind] = ("T",),
) -> Optional[Counterexample]:
    """
    Smallest n <= cap for which R_n(c; x) (or S_n with kinds containing "U") has
    coefficients of both signs. The witness is the first coefficient, ordered by
    |k| then k, whose sign differs from that of the x^n coefficient.

    Returns None when no such n exists up to ``cap``.
    """
    c = to_rational(c)
    if not 0 < abs(c) < 1:
        logger.warning("mixed signs are only expected for 0 < |c| < 1, got c = %s", format_rational(c))
    tables = [build_table(kind, c, cap) for kind in kinds]
    for n in range(1, cap + 1):
        for table in tables:
            row = table.rows[n]
            leading = sign(row.get(n, Fraction(0)))
            if not leading:
                continue
            for k in sorted(row, key=lambda x: (abs(x), x)):
                if sign(row[k]) == -leading:
                    return Counterexample(n=n, k=k, value=row[k])
    return None


def verify_counterexample(
    c: RationalLike,
    cap: int = DEFAULT_SEARCH_CAP,
    kinds: Sequence[ChebKind] = ("T",),
) -> VerifyReport:
    """
    Mixed signs are found up to ``cap`` exactly when 0 < |c| < 1.

    A passing report for 0 < |c| < 1 carries the witness as its counterexample.
    When no witness turns up where one was expected, the report points at the
    x^cap coefficient of the last row searched.
    """
    c = to_rational(c)
    expected = 0 < abs(c) < 1
    witness = find_counterexample(c, cap, kinds)
    found = witness is not None
    params = _params(kinds="".join(kinds), c=c, cap=cap)
    notes: Tuple[str, ...] = ()
    if witness is not None:
        notes = (f"mixed signs at n={witness.n}",)
    elif expected:
        leading = build_table(kinds[0], c, cap).get(cap, cap)
        witness = Counterexample(n=cap, k=cap, value=leading)
        notes = (f"no mixed signs found up to n={cap}",)
    else:
        notes = (f"none found <= {cap}",)
    return VerifyReport(
        property="counterexample",
        params=params,
        passed=expected == found,
        counterexample=witness,
        checked=cap,
        notes=notes,
    )


def verify_trivial(n_max: int) -> VerifyReport:
    """
    R_n(1; x) = (x^n + x^-n) / 2 as exact polynomials for n <= n_max.
    """
    tally = _Tally()
    half = Fraction(1, 2)
    for n in range(n_max + 1):
        expected = LaurentPoly.monomial((n,), half) + LaurentPoly.monomial((-n,), half)
        _check_polys(tally, n, expand_recurrence(ExpansionRequest("T", n, Fraction(1), 1)), expected)
    return tally.report("trivial", _params(n_max=n_max))


def _first_difference(p: LaurentPoly, q: LaurentPoly) -> Optional[Tuple[Exponent, Fraction]]:
    """
    First exponent (graded-lex) where p and q differ, with p's coefficient there.
    """
    if p == q:
        return None
    keys = sorted(set(p.terms) | set(q.terms), key=graded_lex_key)
    for e in keys:
        if p.coeff(e) != q.coeff(e):
            return _k(e), p.coeff(e)
    return None


def _check_polys(tally: _Tally, n: int, actual: LaurentPoly, expected: LaurentPoly) -> None:
    mismatch = _first_difference(actual, expected)
    if mismatch is None:
        tally.check(True, n, 0, Fraction(0))
    else:
        tally.check(False, n, mismatch[0], mismatch[1])


def verify_table_agreement(kind: ChebKind, c: RationalLike, n_max: int) -> VerifyReport:
    """
    Row n of `build_table` equals the coefficients of the single-variable expansion.
    """
    c = to_rational(c)
    table = build_table(kind, c, n_max)
    tally = _Tally()
    for n in range(n_max + 1):
        row = LaurentPoly(1, {(k,): a for k, a in table.rows[n].items()})
        _check_polys(tally, n, row, expand_recurrence(ExpansionRequest(kind, n, c, 1)))
    return tally.report("table", _params(kind=kind, c=c, n_max=n_max))


def verify_parity_involution(kind: ChebKind, c: RationalLike, n_max: int) -> VerifyReport:
    """
    table(-c) row n = (-1)^n table(c) row n.
    """
    c = to_rational(c)
    plus = build_table(kind, c, n_max)
    minus = build_table(kind, -c, n_max)
    tally = _Tally()
    for n in range(n_max + 1):
        for k in range(-n, n + 1):
            value = minus.get(n, k)
            tally.check(value == (-1) ** n * plus.get(n, k), n, k, value)
    return tally.report("involution", _params(kind=kind, c=c, n_max=n_max))


def verify_coefform(n_max: int = 64) -> VerifyReport:
    """
    Closed-form coefficients of T_n and U_n equal the recurrence coefficients, 1 <= n <= n_max.
    """
    tally = _Tally()
    for n in range(1, n_max + 1):
        t_n = cheb_coeffs("T", n)
        u_n = cheb_coeffs("U", n)
        for m in range(n // 2 + 1):
            j = n - 2 * m
            closed = cheb_coeff_closed(n, m)
            tally.check(closed == t_n[j], n, j, closed, note="first kind")
            closed_u = cheb_u_coeff_closed(n, m)
            tally.check(closed_u == u_n[j], n, j, closed_u, note="second kind")
    return tally.report("coefform", _params(n_max=n_max))


def verify_derivdef(n_max: int = 40) -> VerifyReport:
    """
    T_{n+1}' / (n+1) = U_n for 0 <= n <= n_max.
    """
    tally = _Tally()
    for n in range(n_max + 1):
        derived = lp_scale(lp_derivative(cheb_coeffs("T", n + 1).to_laurent()), Fraction(1, n + 1))
        _check_polys(tally, n, derived, cheb_coeffs("U", n).to_laurent())
    return tally.report("derivdef", _params(n_max=n_max))


def verify_moretrig_poly(n_max: int = 40) -> VerifyReport:
    """
    (U_n - U_{n-2}) / 2 = T_n for 2 <= n <= n_max.
    """
    tally = _Tally()
    for n in range(2, n_max + 1):
        half_difference = dense_scale(dense_sub(cheb_coeffs("U", n), cheb_coeffs("U", n - 2)), Fraction(1, 2))
        _check_polys(tally, n, half_difference.to_laurent(), cheb_coeffs("T", n).to_laurent())
    return tally.report("moretrig-poly", _params(n_max=n_max))


def verify_methods(kind: ChebKind, c: RationalLike, n_max: int, d: int = 1) -> VerifyReport:
    """
    The recurrence and composition expansions agree term for term.
    """
    c = to_rational(c)
    tally = _Tally()
    for n in range(n_max + 1):
        req = ExpansionRequest(kind, n, c, d)
        _check_polys(tally, n, expand_compose(req), expand_recurrence(req))
    return tally.report("methods", _params(kind=kind, c=c, n_max=n_max, d=d))


def verify_explicit(c: RationalLike, n_max: int) -> VerifyReport:
    """
    `explicit_coeff` and `explicit_coeff_u` match the recurrence for all |k| <= n <= n_max.
    """
    c = to_rational(c)
    tally = _Tally()
    formulas: Tuple[Tuple[ChebKind, Callable[[int, RationalLike, int], Fraction]], ...] = (
        ("T", explicit_coeff),
        ("U", explicit_coeff_u),
    )
    for kind, formula in formulas:
        for n in range(n_max + 1):
            poly = expand_recurrence(ExpansionRequest(kind, n, c, 1))
            for k in range(-n, n + 1):
                value = formula(n, c, k)
                tally.check(value == poly.coeff((k,)), n, k, value, note=f"kind {kind}")
    return tally.report("explicit", _params(c=c, n_max=n_max))


def verify_census(r: int, k_max: int, budget: int = DEFAULT_NODE_BUDGET) -> VerifyReport:
    """
    Both census backends agree and sum to `total_count`, and the generating
    function evaluated at x_i = 1 gives the same total, for 1 <= k <= k_max.
    Each census is also checked to be invariant under sign flips and coordinate
    swaps, and to live on classes with |e_1| + ... + |e_r| <= k and sum(e) = k mod 2.
    """
    tally = _Tally()
    for k in range(1, k_max + 1):
        brute = census_bruteforce(r, k, budget=budget)
        genfn = census_genfn(r, k)
        diff = census_diff(genfn, brute)
        if diff:
            e, ours, theirs = diff[0]
            tally.check(False, k, e, Fraction(ours - theirs), note=f"census differs at k={k}")
        else:
            tally.check(True, k, 0, Fraction(0))
        asymmetric = is_symmetric(genfn, r)
        if asymmetric is None:
            tally.check(True, k, (0,) * r, Fraction(0))
        else:
            tally.check(False, k, asymmetric, Fraction(genfn[asymmetric]), note=f"census not symmetric at k={k}")
        for e, count in sorted(genfn.items()):
            tally.check(
                sum(abs(x) for x in e) <= k and (k - sum(e)) % 2 == 0,
                k,
                e,
                Fraction(count),
                note=f"class outside the parity support at k={k}",
            )
        total = total_count(r, k)
        for label, value in (
            ("bruteforce", census_total(brute)),
            ("genfn", census_total(genfn)),
            ("x_i = 1", lp_evaluate_ones(genfn_polynomial(r, k))),
        ):
            tally.check(value == total, k, (0,) * r, Fraction(value), note=f"{label} total differs at k={k}")
    return tally.report("census", _params(r=r, k_max=k_max))


def merge_reports(groups: Iterable[List[VerifyReport]]) -> List[VerifyReport]:
    """
    Concatenate reports and order them by (c, property, params) for deterministic output.
    """

    def key(report: VerifyReport) -> Tuple[int, Fraction, str, str]:
        c = report.params.get("c")
        has_c = c is not None
        return (0 if has_c else 1, to_rational(c) if has_c else Fraction(0), report.property, repr(report.params))

    return sorted((r for group in groups for r in group), key=key)
