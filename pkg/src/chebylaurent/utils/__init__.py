"""
Utility functions for chebylaurent.
"""

from .misc import dumps, graded_lex_key, graded_lex_sorted
from .rational import ExactRational, format_rational, parse_rational, to_rational

__all__ = [
    "ExactRational",
    "dumps",
    "format_rational",
    "graded_lex_key",
    "graded_lex_sorted",
    "parse_rational",
    "to_rational",
]
