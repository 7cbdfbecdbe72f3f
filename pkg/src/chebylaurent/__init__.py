from .census import (
    CensusResult,
    abelianize,
    census_bruteforce,
    census_genfn,
    is_cyclically_reduced,
    run_census,
    total_count,
)
from .domain import (
    CHEB_KINDS,
    CensusMap,
    ChebKind,
    CoeffTable,
    Counterexample,
    ExpansionRequest,
    HomologyVector,
    Letter,
    VerifyReport,
    Word,
)
from .exceptions import (
    BudgetExceededError,
    ChebyLaurentError,
    ConsistencyError,
    DimensionMismatchError,
    DomainError,
    ExponentOverflowError,
)
from .expansion import ExpansionResult, expand, explicit_coeff, explicit_coeff_u, make_request
from .laurent import LaurentPoly
from .suites import run_suite

__all__ = [
    "CHEB_KINDS",
    "BudgetExceededError",
    "CensusMap",
    "CensusResult",
    "ChebKind",
    "ChebyLaurentError",
    "CoeffTable",
    "ConsistencyError",
    "Counterexample",
    "DimensionMismatchError",
    "DomainError",
    "ExpansionRequest",
    "ExpansionResult",
    "ExponentOverflowError",
    "HomologyVector",
    "LaurentPoly",
    "Letter",
    "VerifyReport",
    "Word",
    "abelianize",
    "census_bruteforce",
    "census_genfn",
    "expand",
    "explicit_coeff",
    "explicit_coeff_u",
    "is_cyclically_reduced",
    "make_request",
    "run_census",
    "run_suite",
    "total_count",
]
