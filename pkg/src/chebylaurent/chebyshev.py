"""
Exact Chebyshev polynomials of both kinds and their closed-form coefficients.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Sequence, Tuple

from .domain import ChebKind, check_kind
from .exceptions import ConsistencyError, DomainError
from .laurent import LaurentPoly
from .utils.rational import RationalLike, format_rational, to_rational


@dataclass(frozen=True)
class DensePoly:
    """
    Single-variable polynomial as a coefficient sequence, index = exponent.
    Trailing zeros are trimmed, so the zero polynomial is the empty tuple.
    """

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = [to_rational(a) for a in self.coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @staticmethod
    def of(values: Sequence[RationalLike]) -> "DensePoly":
        return DensePoly(tuple(to_rational(v) for v in values))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, index: int) -> Fraction:
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coefficients)

    def to_laurent(self) -> LaurentPoly:
        return LaurentPoly(1, {(j,): a for j, a in enumerate(self.coefficients) if a})

    def to_list(self) -> List[str]:
        return [format_rational(a) for a in self.coefficients]

    @staticmethod
    def from_list(values: Sequence[str]) -> "DensePoly":
        return DensePoly.of(values)


def dense_sub(p: DensePoly, q: DensePoly) -> DensePoly:
    size = max(len(p), len(q))
    return DensePoly(tuple(p[j] - q[j] for j in range(size)))


def dense_scale(p: DensePoly, a: RationalLike) -> DensePoly:
    factor = to_rational(a)
    return DensePoly(tuple(factor * b for b in p.coefficients))


def dense_derivative(p: DensePoly) -> DensePoly:
    return DensePoly(tuple(j * a for j, a in enumerate(p.coefficients) if j))


def _next_term(current: List[Fraction], previous: List[Fraction]) -> List[Fraction]:
    # 2x * current - previous
    out = [Fraction(0)] * (len(current) + 1)
    for j, a in enumerate(current):
        out[j + 1] += 2 * a
    for j, a in enumerate(previous):
        out[j] -= a
    return out


def cheb_coeffs(kind: ChebKind, n: int) -> DensePoly:
    """
    Coefficients of T_n (kind "T") or U_n (kind "U") from the three-term recurrence
    f_{n+1} = 2x f_n - f_{n-1}, seeded with T_0 = 1, T_1 = x, U_0 = 1, U_1 = 2x.

    Example:
    ```python
    cheb_coeffs("T", 2).to_list()  # ["-1", "0", "2"]
    ```
    """
    check_kind(kind)
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    previous = [Fraction(1)]
    if n == 0:
        return DensePoly(tuple(previous))
    current = [Fraction(0), Fraction(1 if kind == "T" else 2)]
    for _ in range(n - 1):
        previous, current = current, _next_term(current, previous)
    return DensePoly(tuple(current))


def _require_integral(value: Fraction, what: str) -> Fraction:
    if value.denominator != 1:
        raise ConsistencyError(f"{what} = {format_rational(value)} is not an integer")
    return value


def cheb_coeff_closed(n: int, m: int) -> Fraction:
    """
    Coefficient of x^(n-2m) in T_n from the closed form
    (-1)^m * n/(n-m) * binom(n-m, m) * 2^(n-2m-1), for n >= 1 and 0 <= m <= n/2.

    The division is done exactly and the result is asserted to be an integer.
    """
    if n < 1:
        raise DomainError(f"closed form needs n >= 1, got {n}")
    if not 0 <= m <= n // 2:
        raise DomainError(f"m must lie in [0, {n // 2}] for n = {n}, got {m}")
    value = (-1) ** m * Fraction(n, n - m) * comb(n - m, m) * Fraction(2) ** (n - 2 * m - 1)
    return _require_integral(value, f"closed-form coefficient c({n}, {m})")


def cheb_u_coeff_closed(n: int, m: int) -> Fraction:
    """
    Coefficient of x^(n-2m) in U_n: (-1)^m * binom(n-m, m) * 2^(n-2m).
    """
    if n < 0:
        raise DomainError(f"degree must be non-negative, got {n}")
    if not 0 <= m <= n // 2:
        raise DomainError(f"m must lie in [0, {n // 2}] for n = {n}, got {m}")
    return Fraction((-1) ** m * comb(n - m, m) * 2 ** (n - 2 * m))


def scaled_t_coeffs(k: int, s: int) -> DensePoly:
    """
    The rescaled polynomial 2 * (sqrt s)^k * T_k(y / (2 sqrt s)), expanded in y.

    Its coefficient of y^(k-2m) is (-1)^m * k/(k-m) * binom(k-m, m) * s^m, so every
    coefficient is an integer and no square root is ever formed. For k = 0 the
    result is the constant 2 (twice T_0).
    """
    if k < 0:
        raise DomainError(f"degree must be non-negative, got {k}")
    if s < 1:
        raise DomainError(f"scale must be positive, got {s}")
    if k == 0:
        return DensePoly((Fraction(2),))
    coeffs = [Fraction(0)] * (k + 1)
    for m in range(k // 2 + 1):
        value = (-1) ** m * Fraction(k, k - m) * comb(k - m, m) * s**m
        coeffs[k - 2 * m] = _require_integral(value, f"scaled coefficient ({k}, {m}, s={s})")
    return DensePoly(tuple(coeffs))


def dickson_coeffs(k: int, s: int) -> DensePoly:
    """
    Same polynomial as `scaled_t_coeffs`, built by the Dickson recurrence
    D_{k+1} = y D_k - s D_{k-1}, D_0 = 2, D_1 = y.
    """
    if k < 0:
        raise DomainError(f"degree must be non-negative, got {k}")
    if s < 1:
        raise DomainError(f"scale must be positive, got {s}")
    previous = [Fraction(2)]
    if k == 0:
        return DensePoly(tuple(previous))
    current = [Fraction(0), Fraction(1)]
    for _ in range(k - 1):
        nxt = [Fraction(0)] + current
        for j, a in enumerate(previous):
            nxt[j] -= s * a
        previous, current = current, nxt
    return DensePoly(tuple(current))


def has_chebyshev_parity(p: DensePoly, n: int) -> bool:
    """
    True when the coefficient of x^j vanishes for n - j odd and the remaining
    coefficients alternate in sign going down from x^n.
    """
    expected_sign = 1
    for j in range(n, -1, -1):
        a = p[j]
        if (n - j) % 2:
            if a:
                return False
            continue
        if not a or (a > 0) != (expected_sign > 0):
            return False
        expected_sign = -expected_sign
    return p.degree == n
