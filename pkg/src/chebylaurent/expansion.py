"""
The Laurent polynomials R_n(c; x_1..x_d) = T_n(A) and S_n(c; x_1..x_d) = U_n(A),
A = (c / 2d) * sum_i (x_i + 1/x_i), built three independent ways:

* `expand_recurrence` runs the three-term recurrence directly on Laurent polynomials;
* `expand_compose` substitutes A into the dense Chebyshev coefficients (Horner in A^2);
* `explicit_coeff` / `explicit_coeff_u` give single coefficients in closed form (d = 1).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Dict, Literal, Tuple

from .chebyshev import cheb_coeffs
from .domain import ChebKind, ExpansionRequest, check_kind
from .exceptions import DomainError
from .laurent import LaurentPoly, cheb_arg, lp_add, lp_mul, lp_scale, lp_sub
from .utils.rational import RationalLike, format_rational, to_rational

logger = logging.getLogger(__name__)

ExpansionMethod = Literal["recurrence", "compose", "explicit"]
EXPANSION_METHODS: Tuple[ExpansionMethod, ...] = ("recurrence", "compose", "explicit")


@dataclass(frozen=True)
class ExpansionResult:
    request: ExpansionRequest
    method: ExpansionMethod
    poly: LaurentPoly

    def to_dict(self) -> Dict[str, Any]:
        return {**self.request.to_dict(), "poly": self.poly.to_dict()}


def expand_recurrence(req: ExpansionRequest) -> LaurentPoly:
    """
    p_{n+1} = 2A p_n - p_{n-1} with p_0 = 1 and p_1 = A (kind "T") or 2A (kind "U").

    Example:
    ```python
    expand_recurrence(ExpansionRequest("T", 3, Fraction(1)))  # (1/2) x^3 + (1/2) x^-3
    ```
    """
    a = cheb_arg(req.c, req.d)
    two_a = lp_scale(a, 2)
    previous = LaurentPoly.one(req.d)
    if req.n == 0:
        return previous
    current = a if req.kind == "T" else two_a
    for _ in range(req.n - 1):
        previous, current = current, lp_sub(lp_mul(two_a, current), previous)
    return current


def expand_compose(req: ExpansionRequest) -> LaurentPoly:
    """
    Horner evaluation of the dense coefficients of T_n or U_n at A.

    Only coefficients with the parity of n are non-zero, so the loop runs over A^2
    and multiplies by A once at the end when n is odd.
    """
    coeffs = cheb_coeffs(req.kind, req.n)
    a = cheb_arg(req.c, req.d)
    a_squared = lp_mul(a, a)
    result = LaurentPoly.zero(req.d)
    for j in range(req.n, -1, -2):
        result = lp_add(lp_mul(result, a_squared), LaurentPoly.constant(coeffs[j], req.d))
    if req.n % 2:
        result = lp_mul(result, a)
    return result


def _binom(a: int, b2: int) -> int:
    # binom(a, b2 / 2): zero when b2 is odd or b2 / 2 is outside [0, a]
    if b2 % 2:
        return 0
    b = b2 // 2
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def _require_nonzero(c: Fraction) -> None:
    if not c:
        raise DomainError("the explicit coefficient formula divides by c^2 and needs c != 0")


def explicit_coeff(n: int, c: RationalLike, k: int) -> Fraction:
    """
    Coefficient of x^k in R_n(c; x):

        (c^n / 2) * sum_m (-1/c^2)^m * n/(n-m) * binom(n-m, m) * binom(n-2m, (n-2m-k)/2)

    where binom(a, b) is zero unless b is an integer in [0, a]. For n = 0 the
    polynomial is the constant one.
    """
    c = to_rational(c)
    _require_nonzero(c)
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    if abs(k) > n or (n - k) % 2:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for m in range(n // 2 + 1):
        inner = _binom(n - 2 * m, n - 2 * m - k)
        if inner:
            total += Fraction(-1, c * c) ** m * Fraction(n, n - m) * comb(n - m, m) * inner
    return c**n * total / 2


def explicit_coeff_u(n: int, c: RationalLike, k: int) -> Fraction:
    """
    Coefficient of x^k in S_n(c; x).

    Solving T_j = (U_j - U_{j-2}) / 2 forward telescopes to
    U_n = 2 * (T_n + T_{n-2} + ... ) + [n even], the last T being T_2 or T_1,
    so the coefficient is a sum of `explicit_coeff` values.
    """
    c = to_rational(c)
    _require_nonzero(c)
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    if abs(k) > n or (n - k) % 2:
        return Fraction(0)
    total = sum((explicit_coeff(j, c, k) for j in range(n, 0, -2)), Fraction(0)) * 2
    if n % 2 == 0 and k == 0:
        total += 1
    return total


def explicit_coeff_u_direct(n: int, c: RationalLike, k: int) -> Fraction:
    """
    Coefficient of x^k in S_n(c; x) straight from the second-kind closed form:

        sum_m (-1)^m * binom(n-m, m) * c^(n-2m) * binom(n-2m, (n-2m-k)/2)
    """
    c = to_rational(c)
    _require_nonzero(c)
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    if abs(k) > n or (n - k) % 2:
        return Fraction(0)
    total = Fraction(0)
    for m in range(n // 2 + 1):
        inner = _binom(n - 2 * m, n - 2 * m - k)
        if inner:
            total += (-1) ** m * comb(n - m, m) * c ** (n - 2 * m) * inner
    return total


def expand_explicit(req: ExpansionRequest) -> LaurentPoly:
    if req.d != 1:
        raise DomainError("the explicit formula is single-variable only; use recurrence or compose for d > 1")
    coeff = explicit_coeff if req.kind == "T" else explicit_coeff_u
    return LaurentPoly(1, {(k,): coeff(req.n, req.c, k) for k in range(-req.n, req.n + 1, 2)})


def expand(req: ExpansionRequest, method: ExpansionMethod = "recurrence") -> ExpansionResult:
    if method == "recurrence":
        poly = expand_recurrence(req)
    elif method == "compose":
        poly = expand_compose(req)
    elif method == "explicit":
        poly = expand_explicit(req)
    else:
        raise DomainError(f"unknown expansion method {method!r}")
    logger.debug(
        "expanded %s_%d(c=%s, d=%d) by %s: %d terms",
        req.kind,
        req.n,
        format_rational(req.c),
        req.d,
        method,
        len(poly),
    )
    return ExpansionResult(request=req, method=method, poly=poly)


def make_request(kind: str, n: int, c: RationalLike, d: int = 1) -> ExpansionRequest:
    return ExpansionRequest(kind=check_kind(kind), n=n, c=to_rational(c), d=d)
