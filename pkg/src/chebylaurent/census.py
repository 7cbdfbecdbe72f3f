"""
Counting cyclically reduced words of length k in the free group F_r by homology class.

Two independent backends produce a `CensusMap`:

* `census_bruteforce` enumerates words by depth-first backtracking;
* `census_genfn` extracts coefficients of the generating function
  2 (sqrt(2r-1))^k R_k(r / sqrt(2r-1); x_1..x_r) + (r-1)(1 + (-1)^k),
  computed over the integers through the rescaled polynomial of `scaled_t_coeffs`.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Counter, Dict, List, Literal, Optional, Tuple

from .chebyshev import scaled_t_coeffs
from .domain import CensusMap, HomologyVector, Letter, Word
from .exceptions import BudgetExceededError, ConsistencyError, DomainError
from .laurent import LaurentPoly, cheb_arg, lp_add, lp_mul
from .utils.misc import graded_lex_key, graded_lex_sorted
from .utils.rational import format_rational

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**8
"""
Largest number of leaf words `census_bruteforce` will enumerate.
"""

CensusBackend = Literal["bruteforce", "genfn"]


@dataclass(frozen=True)
class CensusResult:
    rank: int
    length: int
    backend: CensusBackend
    census: CensusMap

    @property
    def total(self) -> int:
        return census_total(self.census)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "r": self.rank,
            "k": self.length,
            "backend": self.backend,
            "census": [{"e": list(e), "count": str(n)} for e, n in sorted_census(self.census)],
            "total": str(self.total),
        }


def _check_rank_length(r: int, k: int) -> None:
    if r < 1:
        raise DomainError(f"rank must be >= 1, got {r}")
    if k < 1:
        raise DomainError(f"word length must be >= 1, got {k}")


def _check_letters(w: Word) -> None:
    for letter in w.letters:
        if letter.generator > w.rank:
            raise DomainError(f"letter {letter} is outside rank {w.rank}")


def is_cyclically_reduced(w: Word) -> bool:
    """
    True when no adjacent pair, including the wrap-around pair last -> first,
    is a letter followed by its inverse. Words of length 0 and 1 qualify.
    """
    _check_letters(w)
    letters = w.letters
    size = len(letters)
    if size < 2:
        return True
    # for size 2 the wrap-around pair is the same pair reversed, and inversion is symmetric
    return not any(letters[i].is_inverse_of(letters[(i + 1) % size]) for i in range(size))


def abelianize(w: Word) -> HomologyVector:
    """
    Signed count of every generator, e.g. a1 a2^-1 -> (1, -1).
    """
    _check_letters(w)
    sums = [0] * w.rank
    for letter in w.letters:
        sums[letter.generator - 1] += letter.sign
    return tuple(sums)


def sorted_census(census: CensusMap) -> List[Tuple[HomologyVector, int]]:
    return graded_lex_sorted(census.items())


def census_total(census: CensusMap) -> int:
    return sum(census.values())


def census_diff(a: CensusMap, b: CensusMap) -> List[Tuple[HomologyVector, int, int]]:
    """
    Classes whose counts differ, as (class, count in a, count in b), graded-lex ordered.
    """
    keys = sorted(set(a) | set(b), key=graded_lex_key)
    return [(e, a.get(e, 0), b.get(e, 0)) for e in keys if a.get(e, 0) != b.get(e, 0)]


def enumeration_size(r: int, k: int) -> int:
    """
    Number of reduced words of length k, (2r)(2r-1)^(k-1): the leaves of the search tree.
    """
    return 2 * r * (2 * r - 1) ** (k - 1)


def _alphabet(r: int) -> List[Letter]:
    return sorted(Letter(g, s) for g in range(1, r + 1) for s in (1, -1))


def _count_from_first(r: int, k: int, first_index: int) -> Dict[HomologyVector, int]:
    # letters are encoded by their index in the sorted alphabet; inv[i] is the index of the inverse
    alphabet = _alphabet(r)
    inv = [alphabet.index(letter.inverse()) for letter in alphabet]
    gen = [letter.generator - 1 for letter in alphabet]
    sgn = [letter.sign for letter in alphabet]
    size = len(alphabet)
    counts: Dict[HomologyVector, int] = {}
    sums = [0] * r
    sums[gen[first_index]] += sgn[first_index]
    first_inverse = inv[first_index]

    def walk(depth: int, last: int) -> None:
        if depth == k:
            key = tuple(sums)
            counts[key] = counts.get(key, 0) + 1
            return
        forbidden = inv[last]
        final = depth == k - 1
        for i in range(size):
            if i == forbidden or (final and i == first_inverse):
                continue
            sums[gen[i]] += sgn[i]
            walk(depth + 1, i)
            sums[gen[i]] -= sgn[i]

    if k == 1:
        counts[tuple(sums)] = 1
    else:
        walk(1, first_index)
    return counts


def census_bruteforce(
    r: int,
    k: int,
    budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> CensusMap:
    """
    Count cyclically reduced words of length k in F_r per homology class by
    backtracking: a letter may not follow its inverse, and the last letter may
    not be the inverse of the first.

    The search is split by first letter; with ``workers > 1`` the branches run in
    a process pool and their maps are merged by addition.

    Raises:
        BudgetExceededError: when (2r)(2r-1)^(k-1) exceeds ``budget``.
    """
    _check_rank_length(r, k)
    required = enumeration_size(r, k)
    if required > budget:
        raise BudgetExceededError(required, budget)
    logger.debug("enumerating %d reduced words of length %d in F_%d", required, k, r)
    firsts = range(2 * r)
    merged: Counter[HomologyVector] = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_count_from_first, [r] * len(firsts), [k] * len(firsts), firsts):
                merged.update(part)
    else:
        for first in firsts:
            merged.update(_count_from_first(r, k, first))
    return dict(sorted_census(dict(merged)))


def genfn_polynomial(r: int, k: int) -> LaurentPoly:
    """
    The generating function of the census as a Laurent polynomial in x_1..x_r:
    D(Y) + (r-1)(1 + (-1)^k), where Y = sum_i (x_i + 1/x_i) and D is the rescaled
    Chebyshev polynomial with scale s = 2r - 1.
    """
    _check_rank_length(r, k)
    d = scaled_t_coeffs(k, 2 * r - 1)
    y = cheb_arg(2 * r, r)
    y_squared = lp_mul(y, y)
    poly = LaurentPoly.zero(r)
    for j in range(k, -1, -2):
        poly = lp_add(lp_mul(poly, y_squared), LaurentPoly.constant(d[j], r))
    if k % 2:
        poly = lp_mul(poly, y)
    correction = (r - 1) * (1 + (-1) ** k)
    return lp_add(poly, LaurentPoly.constant(correction, r))


def census_genfn(r: int, k: int) -> CensusMap:
    """
    Read the census off the generating function.

    Raises:
        ConsistencyError: a coefficient is negative or not an integer.
    """
    poly = genfn_polynomial(r, k)
    census: CensusMap = {}
    for e, a in poly.sorted_terms():
        if a.denominator != 1 or a < 0:
            raise ConsistencyError(
                f"generating function coefficient at {list(e)} is {format_rational(a)}, not a count"
            )
        census[e] = a.numerator
    return census


def total_count(r: int, k: int) -> int:
    """
    Total number of cyclically reduced words of length k in F_r:
    (2r-1)^k + 1 + (r-1)(1 + (-1)^k).
    """
    _check_rank_length(r, k)
    return (2 * r - 1) ** k + 1 + (r - 1) * (1 + (-1) ** k)


def run_census(
    r: int,
    k: int,
    backend: CensusBackend = "genfn",
    budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> CensusResult:
    if backend == "bruteforce":
        census = census_bruteforce(r, k, budget=budget, workers=workers)
    elif backend == "genfn":
        census = census_genfn(r, k)
    else:
        raise DomainError(f"unknown census backend {backend!r}")
    return CensusResult(rank=r, length=k, backend=backend, census=census)


def is_symmetric(census: CensusMap, rank: int) -> Optional[HomologyVector]:
    """
    Return a class whose count changes under negating one coordinate or swapping
    two coordinates, or None when the census has both symmetries.
    """
    for e, n in census.items():
        for i in range(rank):
            flipped = list(e)
            flipped[i] = -flipped[i]
            if census.get(tuple(flipped), 0) != n:
                return e
            for j in range(i + 1, rank):
                swapped = list(e)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                if census.get(tuple(swapped), 0) != n:
                    return e
    return None
