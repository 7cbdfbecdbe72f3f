class ChebyLaurentError(Exception):
    """
    Base class of every error raised by chebylaurent.
    """

    pass


class DimensionMismatchError(ChebyLaurentError, ValueError):
    """
    Exception raised when two operands live in different numbers of variables,
    or when a single-variable operation receives a multivariate polynomial.
    """

    def __init__(self, expected: int, got: int):
        super().__init__(f"dimension mismatch: expected {expected}, got {got}")
        self._expected = expected
        self._got = got

    @property
    def expected(self) -> int:
        return self._expected

    @property
    def got(self) -> int:
        return self._got


class ExponentOverflowError(ChebyLaurentError, ValueError):
    """
    Exception raised when an exponent leaves the supported range.
    """

    pass


class DomainError(ChebyLaurentError, ValueError):
    """
    Exception raised when an argument is outside the domain of an operation.
    """

    pass


class BudgetExceededError(ChebyLaurentError):
    """
    Exception raised when the word enumerator would visit more nodes than allowed.
    """

    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} leaf words, budget is {budget}")
        self._required = required
        self._budget = budget

    @property
    def required(self) -> int:
        return self._required

    @property
    def budget(self) -> int:
        return self._budget


class ConsistencyError(ChebyLaurentError):
    """
    Exception raised when an identity the computation relies on does not hold,
    e.g. a closed-form coefficient that should be an integer is not.
    """

    pass
