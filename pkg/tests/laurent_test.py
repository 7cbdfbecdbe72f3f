"""
Tests for the sparse Laurent polynomial type: construction invariants, the ring
operations, and the single-variable helpers.
"""

from fractions import Fraction
from math import comb
from typing import Tuple

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chebylaurent.exceptions import DimensionMismatchError, DomainError, ExponentOverflowError
from chebylaurent.laurent import (
    EXPONENT_LIMIT,
    LaurentPoly,
    cheb_arg,
    lp_add,
    lp_derivative,
    lp_evaluate_ones,
    lp_invert_variables,
    lp_mul,
    lp_permute,
    lp_pow,
)

x = LaurentPoly.monomial((1,))
x_inv = LaurentPoly.monomial((-1,))

coefficients = st.fractions(min_value=-9, max_value=9, max_denominator=6)


def laurent_polys(dimension: int, max_terms: int = 4) -> st.SearchStrategy[LaurentPoly]:
    exponents = st.tuples(*[st.integers(-3, 3)] * dimension)
    return st.dictionaries(exponents, coefficients, max_size=max_terms).map(
        lambda terms: LaurentPoly(dimension, terms)
    )


@st.composite
def poly_triples(draw: st.DrawFn) -> Tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    dimension = draw(st.integers(1, 3))
    return draw(laurent_polys(dimension)), draw(laurent_polys(dimension)), draw(laurent_polys(dimension))


class TestConstruction:
    def test_zero_coefficients_are_purged(self):
        """Test zero coefficients never reach the term map."""
        p = LaurentPoly(1, {(2,): 0, (1,): Fraction(1, 2), (0,): "0/5"})
        assert dict(p.terms) == {(1,): Fraction(1, 2)}
        assert len(p) == 1

    def test_zero_polynomial(self):
        """Test the zero polynomial keeps its dimension."""
        z = LaurentPoly.zero(3)
        assert z.is_zero()
        assert z.dimension == 3
        assert str(z) == "0"

    def test_wrong_key_length(self):
        """Test exponent vectors must match the dimension."""
        with pytest.raises(DimensionMismatchError) as info:
            LaurentPoly(2, {(1,): 1})
        assert info.value.expected == 2
        assert info.value.got == 1

    def test_dimension_must_be_positive(self):
        """Test a polynomial needs at least one variable."""
        with pytest.raises(DomainError):
            LaurentPoly(0)

    def test_exponent_limit(self):
        """Test exponents beyond the limit are rejected."""
        LaurentPoly.monomial((EXPONENT_LIMIT,))
        with pytest.raises(ExponentOverflowError):
            LaurentPoly.monomial((-EXPONENT_LIMIT - 1,))

    def test_immutable(self):
        """Test neither the polynomial nor its term view can be mutated."""
        p = x + x_inv
        with pytest.raises(AttributeError):
            p._terms = {}  # type: ignore[misc]
        with pytest.raises(TypeError):
            p.terms[(5,)] = Fraction(1)  # type: ignore[index]

    def test_str_and_repr(self):
        """Test text rendering in graded-lex order."""
        p = LaurentPoly(1, {(1,): 1, (-1,): Fraction(1, 2), (0,): -3})
        assert str(p) == "-3 + 1/2*x^-1 + x"
        q = LaurentPoly(2, {(1, -1): 2})
        assert str(q) == "2*x1*x2^-1"
        assert repr(LaurentPoly.one()) == "LaurentPoly(1, {(0,): Fraction(1, 1)})"


class TestArithmetic:
    def test_square_of_x_plus_inverse(self):
        """Test (x + 1/x)^2 = x^2 + 2 + x^-2."""
        p = (x + x_inv) ** 2
        assert dict(p.terms) == {(2,): 1, (0,): 2, (-2,): 1}

    @pytest.mark.parametrize("k", range(15))
    def test_binomial_coefficients(self, k: int):
        """Test the coefficient of x^(k-2i) in (x + 1/x)^k is C(k, i)."""
        p = lp_pow(x + x_inv, k)
        assert len(p) == k + 1
        for i in range(k + 1):
            assert p.coeff((k - 2 * i,)) == comb(k, i)

    def test_subtraction_to_zero(self):
        """Test p - p is the zero polynomial."""
        p = x + x_inv
        assert (p - p).is_zero()

    def test_scalar_multiplication(self):
        """Test scaling by a rational and by zero."""
        p = Fraction(1, 2) * (x + x_inv)
        assert p.coeff((1,)) == Fraction(1, 2)
        assert (p * 0).is_zero()

    def test_dimension_mismatch(self):
        """Test operands must have the same number of variables."""
        with pytest.raises(DimensionMismatchError):
            x + LaurentPoly.monomial((1, 0))

    def test_power_zero_is_one(self):
        """Test p^0 is the constant one of the same dimension."""
        assert lp_pow(LaurentPoly.monomial((1, 1)), 0) == LaurentPoly.one(2)

    def test_negative_power(self):
        """Test negative powers are rejected."""
        with pytest.raises(DomainError):
            lp_pow(x, -1)

    def test_product_exponent_overflow(self):
        """Test a product that pushes an exponent past the limit raises."""
        big = LaurentPoly.monomial((EXPONENT_LIMIT,))
        with pytest.raises(ExponentOverflowError):
            lp_mul(big, x)

    def test_equality_and_hash(self):
        """Test equal term maps compare and hash equal."""
        a = LaurentPoly(2, {(1, 0): 1, (0, 1): 1})
        b = LaurentPoly(2, {(0, 1): Fraction(2, 2), (1, 0): 1})
        assert a == b
        assert hash(a) == hash(b)
        assert a != LaurentPoly(1, {(1,): 1})


class TestRingProperties:
    @given(poly_triples())
    def test_addition_is_commutative_and_associative(self, triple: Tuple[LaurentPoly, LaurentPoly, LaurentPoly]):
        """Test lp_add commutes and associates."""
        p, q, r = triple
        assert lp_add(p, q) == lp_add(q, p)
        assert lp_add(lp_add(p, q), r) == lp_add(p, lp_add(q, r))
        assert (p - p).is_zero()

    @given(poly_triples())
    def test_multiplication_is_commutative_and_associative(
        self, triple: Tuple[LaurentPoly, LaurentPoly, LaurentPoly]
    ):
        """Test lp_mul commutes and associates."""
        p, q, r = triple
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)

    @given(poly_triples())
    def test_distributive(self, triple: Tuple[LaurentPoly, LaurentPoly, LaurentPoly]):
        """Test multiplication distributes over addition."""
        p, q, r = triple
        assert p * (q + r) == p * q + p * r

    @given(st.integers(1, 2).flatmap(lambda d: laurent_polys(d, max_terms=3)), st.integers(0, 6), st.integers(0, 6))
    def test_power_of_sum_of_exponents(self, p: LaurentPoly, a: int, b: int):
        """Test p^(a+b) = p^a * p^b."""
        assert lp_pow(p, a + b) == lp_mul(lp_pow(p, a), lp_pow(p, b))

    @given(st.integers(1, 3).flatmap(laurent_polys), st.data())
    def test_inversion_and_permutation_are_automorphisms(self, p: LaurentPoly, data: st.DataObject):
        """Test inverting or permuting variables commutes with products and is reversible."""
        q = data.draw(laurent_polys(p.dimension))
        perm = data.draw(st.permutations(range(p.dimension)))
        assert lp_invert_variables(lp_invert_variables(p)) == p
        assert lp_invert_variables(p * q) == lp_invert_variables(p) * lp_invert_variables(q)
        assert lp_permute(p * q, perm) == lp_permute(p, perm) * lp_permute(q, perm)
        assert lp_evaluate_ones(lp_permute(p, perm)) == lp_evaluate_ones(p)


class TestHelpers:
    def test_coeff_requires_matching_length(self):
        """Test coefficient lookup by exponent vector."""
        with pytest.raises(DimensionMismatchError):
            x.coeff((1, 0))
        assert x.coeff((7,)) == 0

    def test_derivative(self):
        """Test the derivative of a single-variable Laurent polynomial."""
        p = LaurentPoly(1, {(2,): 1, (-1,): 1, (0,): 5})
        assert lp_derivative(p) == LaurentPoly(1, {(1,): 2, (-2,): -1})

    def test_derivative_single_variable_only(self):
        """Test the derivative rejects several variables."""
        with pytest.raises(DimensionMismatchError) as info:
            lp_derivative(LaurentPoly.monomial((1, 1)))
        assert (info.value.expected, info.value.got) == (1, 2)

    def test_invert_variables(self):
        """Test every exponent changes sign."""
        p = LaurentPoly(2, {(2, -1): 3, (0, 1): 1})
        assert lp_invert_variables(p) == LaurentPoly(2, {(-2, 1): 3, (0, -1): 1})

    def test_permute(self):
        """Test permuting variables and rejecting non-permutations."""
        p = LaurentPoly(3, {(1, 2, 3): 1})
        assert lp_permute(p, [2, 0, 1]) == LaurentPoly(3, {(2, 3, 1): 1})
        with pytest.raises(DomainError):
            lp_permute(p, [0, 0, 1])

    def test_evaluate_ones(self):
        """Test evaluation at x = 1 sums the coefficients."""
        assert lp_evaluate_ones((x + x_inv) ** 4) == 16

    def test_to_dict_from_dict(self):
        """Test the JSON-ready form."""
        p = LaurentPoly(2, {(1, -1): Fraction(-3, 7), (0, 0): 2})
        data = p.to_dict()
        assert data == {
            "dimension": 2,
            "terms": [{"exp": [0, 0], "num": "2", "den": "1"}, {"exp": [1, -1], "num": "-3", "den": "7"}],
        }
        assert LaurentPoly.from_dict(data) == p


class TestChebArg:
    def test_single_variable(self):
        """Test (c/2)(x + 1/x)."""
        assert cheb_arg(2, 1) == x + x_inv
        assert cheb_arg(Fraction(1, 2), 1) == LaurentPoly(1, {(1,): Fraction(1, 4), (-1,): Fraction(1, 4)})

    def test_two_variables(self):
        """Test (c/4) sum of x_i + 1/x_i over two variables."""
        a = cheb_arg(4, 2)
        assert len(a) == 4
        assert all(coefficient == 1 for coefficient in a.terms.values())

    def test_zero_parameter(self):
        """Test c = 0 gives the zero argument."""
        assert cheb_arg(0, 2).is_zero()

    def test_requires_variables(self):
        """Test at least one variable is required."""
        with pytest.raises(DomainError):
            cheb_arg(1, 0)
