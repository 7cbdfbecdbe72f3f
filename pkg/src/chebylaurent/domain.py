import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from .exceptions import DomainError
from .utils.rational import format_rational, to_rational

ChebKind = Literal["T", "U"]
"""
  "T" is the Chebyshev polynomial of the first kind, "U" of the second kind.
"""

CHEB_KINDS: Tuple[ChebKind, ...] = ("T", "U")

ExpVec = Tuple[int, ...]
"""
Signed exponent vector of a Laurent monomial; its length is the number of variables.
"""

HomologyVector = Tuple[int, ...]
"""
Exponent sums (e_1, ..., e_r) of a word, its image in Z^r.
"""

CensusMap = Dict[HomologyVector, int]
"""
Homology class -> number of cyclically reduced words in that class.
Only classes with a non-zero count are stored.
"""


def check_kind(kind: str) -> ChebKind:
    if kind == "T":
        return "T"
    if kind == "U":
        return "U"
    raise DomainError(f"unknown Chebyshev kind {kind!r}, expected 'T' or 'U'")


@dataclass(frozen=True)
class ExpansionRequest:
    """
    What to expand: T_n or U_n evaluated at (c / 2d) * sum_i (x_i + 1/x_i).
    """

    kind: ChebKind
    n: int
    c: Fraction
    d: int = 1

    def __post_init__(self) -> None:
        check_kind(self.kind)
        if self.n < 0:
            raise DomainError(f"degree must be non-negative, got {self.n}")
        if self.d < 1:
            raise DomainError(f"variable count must be positive, got {self.d}")
        object.__setattr__(self, "c", to_rational(self.c))

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind, "n": self.n, "c": format_rational(self.c), "d": self.d}


_LETTER_RE = re.compile(r"^a(\d+)(\^(-?1))?$")


@dataclass(frozen=True, order=True)
class Letter:
    """
    A generator a_i (sign +1) or its inverse (sign -1).
    Ordering is by generator, then sign, which is the enumeration order.
    """

    generator: int
    sign: int

    def __post_init__(self) -> None:
        if self.generator < 1:
            raise DomainError(f"generator index must be >= 1, got {self.generator}")
        if self.sign not in (1, -1):
            raise DomainError(f"letter sign must be +1 or -1, got {self.sign}")

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    def is_inverse_of(self, other: "Letter") -> bool:
        return self.generator == other.generator and self.sign == -other.sign

    def __str__(self) -> str:
        return f"a{self.generator}" if self.sign == 1 else f"a{self.generator}^-1"


@dataclass(frozen=True)
class Word:
    """
    A sequence of letters in the free group of the given rank.
    Reducedness is a predicate (see `census.is_cyclically_reduced`), not an invariant.
    """

    letters: Tuple[Letter, ...]
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise DomainError(f"rank must be >= 1, got {self.rank}")
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)

    @staticmethod
    def from_string(text: str, rank: int) -> "Word":
        """
        Parse whitespace-separated letters such as ``"a1 a2^-1 a1"``.
        """
        letters: List[Letter] = []
        for token in text.split():
            match = _LETTER_RE.match(token)
            if match is None:
                raise DomainError(f"malformed letter {token!r}")
            letters.append(Letter(int(match.group(1)), -1 if match.group(3) == "-1" else 1))
        return Word(tuple(letters), rank)


@dataclass(frozen=True)
class Counterexample:
    """
    First place a checked property failed. ``k`` is an int in one variable,
    an exponent vector otherwise.
    """

    n: int
    k: Union[int, ExpVec]
    value: Fraction

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": list(self.k) if isinstance(self.k, tuple) else self.k,
            "value": format_rational(self.value),
        }


@dataclass(frozen=True)
class VerifyReport:
    """
    Outcome of checking one property over a range of parameters.
    A failed report always carries its first counterexample.
    """

    property: str
    params: Dict[str, Any]
    passed: bool
    counterexample: Optional[Counterexample] = None
    checked: int = 0
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not self.passed and self.counterexample is None:
            raise ValueError(f"failed report for {self.property!r} needs a counterexample")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "property": self.property,
            "params": self.params,
            "pass": self.passed,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "checked": self.checked,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class CoeffTable:
    """
    Coefficients of x^k in T_n((c/2)(x + 1/x)) (kind "T") or U_n(...) (kind "U"),
    one row per degree n = 0..n_max. Rows store non-zero entries only.
    """

    kind: ChebKind
    c: Fraction
    rows: Tuple[Dict[int, Fraction], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def get(self, n: int, k: int) -> Fraction:
        if n < 0 or n >= len(self.rows):
            return Fraction(0)
        return self.rows[n].get(k, Fraction(0))
