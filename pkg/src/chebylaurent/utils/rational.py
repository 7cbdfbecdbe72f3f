from fractions import Fraction
from typing import Union

from ..exceptions import DomainError

ExactRational = Fraction
"""
Arbitrary-precision reduced fraction; the scalar of every polynomial.
"""

RationalLike = Union[int, Fraction, str]


def parse_rational(text: str) -> Fraction:
    """
    Parse ``"p/q"`` or an integer string into an exact rational.

    Floats and decimal points are rejected so nothing inexact crosses the boundary.

    Example:
    ```python
    parse_rational("3/2")  # Fraction(3, 2)
    parse_rational("-4")  # Fraction(-4, 1)
    ```
    """
    num, sep, den = text.strip().partition("/")
    try:
        numerator = int(num)
        denominator = int(den) if sep else 1
    except ValueError:
        raise DomainError(f"malformed rational {text!r}, expected p/q or an integer") from None
    if denominator == 0:
        raise DomainError(f"zero denominator in rational {text!r}")
    return Fraction(numerator, denominator)


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"cannot convert {type(value).__name__} to an exact rational")


def format_rational(value: Fraction) -> str:
    """
    Render as ``"p/q"``, or just ``"p"`` when the denominator is one.
    """
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)
