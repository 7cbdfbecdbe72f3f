"""
Sparse multivariate Laurent polynomials with exact rational coefficients.

A `LaurentPoly` is an immutable map from exponent vectors (tuples of signed
ints, one entry per variable) to non-zero `Fraction` coefficients. Zero
coefficients are purged after every operation, so structural equality is
mathematical equality.
"""

from collections import defaultdict
from fractions import Fraction
from types import MappingProxyType
from typing import Any, DefaultDict, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .domain import ExpVec
from .exceptions import DimensionMismatchError, DomainError, ExponentOverflowError
from .utils.misc import graded_lex_key
from .utils.rational import RationalLike, format_rational, to_rational

EXPONENT_LIMIT = 10**6
"""
Largest accepted absolute value of a single exponent.
"""

Scalar = Union[int, Fraction]


def _check_exponents(e: ExpVec) -> None:
    for x in e:
        if abs(x) > EXPONENT_LIMIT:
            raise ExponentOverflowError(f"exponent {x} exceeds the limit of {EXPONENT_LIMIT}")


class LaurentPoly:
    """
    Immutable sparse Laurent polynomial in ``dimension`` variables x_1..x_d.

    Example:
    ```python
    x = LaurentPoly.monomial((1,))
    p = x + LaurentPoly.monomial((-1,))  # x + 1/x
    (p * p).coeff((0,))  # Fraction(2, 1)
    ```
    """

    __slots__ = ("_dimension", "_terms")

    _dimension: int
    _terms: Dict[ExpVec, Fraction]

    def __init__(self, dimension: int, terms: Optional[Mapping[Sequence[int], RationalLike]] = None):
        if dimension < 1:
            raise DomainError(f"dimension must be positive, got {dimension}")
        clean: Dict[ExpVec, Fraction] = {}
        for raw_exp, raw_coeff in (terms or {}).items():
            e = tuple(int(x) for x in raw_exp)
            if len(e) != dimension:
                raise DimensionMismatchError(dimension, len(e))
            _check_exponents(e)
            coeff = to_rational(raw_coeff)
            if coeff:
                clean[e] = clean.get(e, Fraction(0)) + coeff
        object.__setattr__(self, "_dimension", dimension)
        object.__setattr__(self, "_terms", {e: a for e, a in clean.items() if a})

    @classmethod
    def _trusted(cls, dimension: int, terms: Dict[ExpVec, Fraction]) -> "LaurentPoly":
        # terms must already be zero-free with keys of the right length
        poly = cls.__new__(cls)
        object.__setattr__(poly, "_dimension", dimension)
        object.__setattr__(poly, "_terms", terms)
        return poly

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("LaurentPoly is immutable")

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def terms(self) -> Mapping[ExpVec, Fraction]:
        return MappingProxyType(self._terms)

    @staticmethod
    def zero(dimension: int) -> "LaurentPoly":
        return LaurentPoly(dimension)

    @staticmethod
    def constant(value: RationalLike, dimension: int = 1) -> "LaurentPoly":
        return LaurentPoly(dimension, {(0,) * dimension: value})

    @staticmethod
    def one(dimension: int = 1) -> "LaurentPoly":
        return LaurentPoly.constant(1, dimension)

    @staticmethod
    def monomial(exponents: Sequence[int], coeff: RationalLike = 1) -> "LaurentPoly":
        return LaurentPoly(len(exponents), {tuple(exponents): coeff})

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[ExpVec]:
        return iter(self._terms)

    def sorted_terms(self) -> List[Tuple[ExpVec, Fraction]]:
        """
        Terms in graded-lex order (total absolute degree, then lexicographic).
        """
        return sorted(self._terms.items(), key=lambda item: graded_lex_key(item[0]))

    def max_abs_exponent(self) -> int:
        return max((abs(x) for e in self._terms for x in e), default=0)

    def coeff(self, e: Sequence[int]) -> Fraction:
        return lp_coeff(self, e)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._dimension == other._dimension and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._dimension, frozenset(self._terms.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_add(self, other)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return lp_sub(self, other)

    def __neg__(self) -> "LaurentPoly":
        return lp_neg(self)

    def __mul__(self, other: Union["LaurentPoly", Scalar]) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return lp_mul(self, other)
        return lp_scale(self, other)

    def __rmul__(self, other: Scalar) -> "LaurentPoly":
        return lp_scale(self, other)

    def __pow__(self, e: int) -> "LaurentPoly":
        return lp_pow(self, e)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dimension": self._dimension,
            "terms": [
                {"exp": list(e), "num": str(a.numerator), "den": str(a.denominator)} for e, a in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> "LaurentPoly":
        return LaurentPoly(
            int(data["dimension"]),
            {tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]},
        )

    def __repr__(self) -> str:
        return f"LaurentPoly({self._dimension}, {dict(self.sorted_terms())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = ["x"] if self._dimension == 1 else [f"x{i + 1}" for i in range(self._dimension)]
        parts = []
        for e, a in self.sorted_terms():
            factors = [n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x]
            if not factors:
                parts.append(format_rational(a))
            elif a == 1:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([format_rational(a), *factors]))
        return " + ".join(parts)


def _same_dimension(p: LaurentPoly, q: LaurentPoly) -> int:
    if p.dimension != q.dimension:
        raise DimensionMismatchError(p.dimension, q.dimension)
    return p.dimension


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    d = _same_dimension(p, q)
    terms = dict(p._terms)
    for e, a in q._terms.items():
        s = terms.get(e, 0) + a
        if s:
            terms[e] = s
        else:
            terms.pop(e, None)
    return LaurentPoly._trusted(d, terms)


def lp_neg(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly._trusted(p.dimension, {e: -a for e, a in p._terms.items()})


def lp_sub(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return lp_add(p, lp_neg(q))


def lp_scale(p: LaurentPoly, a: Scalar) -> LaurentPoly:
    factor = to_rational(a)
    if not factor:
        return LaurentPoly.zero(p.dimension)
    return LaurentPoly._trusted(p.dimension, {e: factor * b for e, b in p._terms.items()})


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """
    Exact convolution over exponent vectors.
    """
    d = _same_dimension(p, q)
    if p.max_abs_exponent() + q.max_abs_exponent() > EXPONENT_LIMIT:
        raise ExponentOverflowError(f"product may exceed the exponent limit of {EXPONENT_LIMIT}")
    acc: DefaultDict[ExpVec, Fraction] = defaultdict(Fraction)
    if d == 1:
        for (i,), a in p._terms.items():
            for (j,), b in q._terms.items():
                acc[(i + j,)] += a * b
    else:
        for e1, a in p._terms.items():
            for e2, b in q._terms.items():
                acc[tuple(x + y for x, y in zip(e1, e2))] += a * b
    return LaurentPoly._trusted(d, {e: a for e, a in acc.items() if a})


def lp_pow(p: LaurentPoly, e: int) -> LaurentPoly:
    """
    ``p ** e`` by repeated squaring; ``p ** 0`` is the constant one in p's dimension.
    """
    if e < 0:
        raise DomainError(f"exponent must be non-negative, got {e}")
    result = LaurentPoly.one(p.dimension)
    base = p
    while e:
        if e & 1:
            result = lp_mul(result, base)
        e >>= 1
        if e:
            base = lp_mul(base, base)
    return result


def lp_coeff(p: LaurentPoly, e: Sequence[int]) -> Fraction:
    key = tuple(e)
    if len(key) != p.dimension:
        raise DimensionMismatchError(p.dimension, len(key))
    return p._terms.get(key, Fraction(0))


def lp_derivative(p: LaurentPoly) -> LaurentPoly:
    """
    Formal derivative of a single-variable Laurent polynomial.
    """
    if p.dimension != 1:
        raise DimensionMismatchError(1, p.dimension)
    return LaurentPoly._trusted(1, {(k - 1,): k * a for (k,), a in p._terms.items() if k})


def lp_invert_variables(p: LaurentPoly) -> LaurentPoly:
    """
    Substitute x_i -> 1/x_i for every variable.
    """
    return LaurentPoly._trusted(p.dimension, {tuple(-x for x in e): a for e, a in p._terms.items()})


def lp_permute(p: LaurentPoly, perm: Sequence[int]) -> LaurentPoly:
    """
    Rename variables: the exponent of x_i moves to position ``perm[i]``.
    """
    d = p.dimension
    if sorted(perm) != list(range(d)):
        raise DomainError(f"{list(perm)} is not a permutation of range({d})")
    terms: Dict[ExpVec, Fraction] = {}
    for e, a in p._terms.items():
        moved = [0] * d
        for i, x in enumerate(e):
            moved[perm[i]] = x
        terms[tuple(moved)] = a
    return LaurentPoly._trusted(d, terms)


def lp_evaluate_ones(p: LaurentPoly) -> Fraction:
    """
    Value at x_1 = ... = x_d = 1, i.e. the sum of all coefficients.
    """
    return sum(p._terms.values(), Fraction(0))


def cheb_arg(c: RationalLike, d: int) -> LaurentPoly:
    """
    The Chebyshev argument (c / 2d) * sum_{i=1..d} (x_i + 1/x_i).
    """
    if d < 1:
        raise DomainError(f"variable count must be positive, got {d}")
    weight = to_rational(c) / (2 * d)
    if not weight:
        return LaurentPoly.zero(d)
    terms: Dict[ExpVec, Fraction] = {}
    for i in range(d):
        for s in (1, -1):
            e = [0] * d
            e[i] = s
            terms[tuple(e)] = weight
    return LaurentPoly._trusted(d, terms)
