import json
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple, TypeVar

from .rational import format_rational

T = TypeVar("T")


def graded_lex_key(exponents: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """
    Sort key for exponent vectors: total absolute degree first, then lexicographic.
    """
    return (sum(abs(e) for e in exponents), tuple(exponents))


def graded_lex_sorted(items: Iterable[Tuple[Tuple[int, ...], T]]) -> List[Tuple[Tuple[int, ...], T]]:
    return sorted(items, key=lambda item: graded_lex_key(item[0]))


def json_default(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, tuple):
        return list(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return str(obj)


def dumps(payload: Any) -> str:
    """
    Deterministic JSON rendering used for every machine-readable output.
    """
    return json.dumps(payload, indent=2, default=json_default)
