"""
Tests for the positivity checks, the identities behind them and the
counterexample search.
"""

import logging
from fractions import Fraction
from typing import List

import pytest

from chebylaurent.domain import Counterexample, VerifyReport
from chebylaurent.exceptions import BudgetExceededError, DomainError
from chebylaurent.verify import (
    build_table,
    find_counterexample,
    merge_reports,
    parity_support,
    sign_pattern,
    verify_abc,
    verify_census,
    verify_coefform,
    verify_counterexample,
    verify_derivdef,
    verify_explicit,
    verify_methods,
    verify_moretrig,
    verify_moretrig_poly,
    verify_nonneg,
    verify_parity_involution,
    verify_table_agreement,
    verify_trivial,
)


class TestTable:
    def test_known_rows(self):
        """Test table rows against hand expansions."""
        table = build_table("T", 2, 3)
        assert table.n_max == 3
        assert table.rows[2] == {-2: 2, 0: 3, 2: 2}
        assert table.get(3, 1) == 9
        assert table.get(3, 3) == 4
        assert build_table("U", 2, 2).get(2, 0) == 7

    def test_zero_parameter(self):
        """Test c = 0 keeps only the constant terms of T_n(0)."""
        table = build_table("T", 0, 4)
        assert table.rows[1] == {}
        assert table.rows[2] == {0: -1}

    def test_negative_range(self):
        """Test a negative degree range is rejected."""
        with pytest.raises(DomainError):
            build_table("T", 2, -1)

    def test_parity_support(self):
        """Test the exponent vectors a degree-n expansion can reach."""
        assert parity_support(2, 1) == [(0,), (-2,), (2,)]
        assert parity_support(1, 2) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
        assert len(parity_support(0, 3)) == 1


class TestNonneg:
    def test_single_variable_positive(self, positive_cs: List[Fraction]):
        """Test both kinds are positive for c > 1 up to degree 30."""
        for c in positive_cs:
            for kind in ("T", "U"):
                report = verify_nonneg(kind, c, 30)
                assert report.passed, report
                assert report.counterexample is None
                assert report.checked > 0

    def test_small_parameter_first_kind(self):
        """Test the first kind fails at c = 1/2 with its first counterexample."""
        report = verify_nonneg("T", Fraction(1, 2), 6)
        assert not report.passed
        assert report.counterexample == Counterexample(2, 0, Fraction(-3, 4))
        assert report.params == {"kind": "T", "c": "1/2", "n_max": 6, "d": 1}

    def test_small_parameter_second_kind(self):
        """Test the second kind fails at c = 1/2 with its first counterexample."""
        report = verify_nonneg("U", Fraction(1, 2), 6)
        assert report.counterexample == Counterexample(2, 0, Fraction(-1, 2))

    def test_boundary_parameter(self):
        """Test c = 1 reports the zero coefficient with a boundary note."""
        report = verify_nonneg("T", 1, 4)
        assert not report.passed
        assert report.counterexample == Counterexample(2, 0, Fraction(0))
        assert any("boundary" in note for note in report.notes)

    @pytest.mark.parametrize("c", [Fraction(3, 2), Fraction(2), Fraction(10)])
    def test_two_variables_away_from_one(self, c: Fraction):
        """Test both kinds stay positive in two variables away from c = 1."""
        for kind in ("T", "U"):
            assert verify_nonneg(kind, c, 10, d=2).passed

    def test_two_variables_near_one(self):
        """Test the first kind fails in two variables just above c = 1 while the second kind holds."""
        c = Fraction(101, 100)
        first_kind = verify_nonneg("T", c, 4, d=2)
        assert not first_kind.passed
        assert first_kind.counterexample == Counterexample(2, (0, 0), Fraction(-9799, 20000))
        assert verify_nonneg("U", c, 4, d=2).passed


class TestAbc:
    @pytest.mark.parametrize("c", [Fraction(101, 100), Fraction(3, 2), Fraction(2), Fraction(10)])
    def test_holds_above_one(self, c: Fraction):
        """Test properties (a) to (c) for c > 1 up to degree 30."""
        report = verify_abc(c, 30)
        assert report.passed, report

    def test_fails_at_one(self, caplog: pytest.LogCaptureFixture):
        """Test c = 1 fails property (b) and logs a warning."""
        with caplog.at_level(logging.WARNING):
            report = verify_abc(1, 5)
        assert not report.passed
        assert report.counterexample == Counterexample(1, -1, Fraction(1))
        assert any(note.startswith("(b)") for note in report.notes)
        assert any("boundary" in note for note in report.notes)
        assert "only claimed for c > 1" in caplog.text


class TestMoretrig:
    @pytest.mark.parametrize("c", [Fraction(101, 100), Fraction(2), Fraction(1, 2), Fraction(-3, 2)])
    def test_half_difference_holds(self, c: Fraction):
        """Test the half-difference relation for every sampled c."""
        assert verify_moretrig(c, 30).passed

    def test_other_relation_noted(self):
        """Test the single-step relation is reported in the notes."""
        report = verify_moretrig(2, 6)
        assert "does not hold: first mismatch at n=2, k=-2" in report.notes[0]

    def test_needs_degree_two(self):
        """Test the relation needs degree two or more."""
        with pytest.raises(DomainError):
            verify_moretrig(2, 1)


class TestSignPattern:
    @pytest.mark.parametrize("c", [Fraction(-101, 100), Fraction(-3, 2), Fraction(-2)])
    def test_alternating_below_minus_one(self, c: Fraction):
        """Test the alternating sign pattern for c < -1."""
        assert sign_pattern(c, 12).passed

    def test_two_variables(self):
        """Test the alternating sign pattern in two variables."""
        assert sign_pattern(-10, 5, d=2).passed

    def test_breaks_for_small_parameter(self):
        """Test the sign pattern breaks for -1 < c < 0."""
        report = sign_pattern(Fraction(-1, 2), 4)
        assert report.counterexample == Counterexample(2, 0, Fraction(-3, 4))


class TestCounterexample:
    @pytest.mark.parametrize(
        ("c", "expected"),
        [
            (Fraction(1, 2), Counterexample(2, 0, Fraction(-3, 4))),
            (Fraction(9, 10), Counterexample(2, 0, Fraction(-19, 100))),
            (Fraction(-1, 2), Counterexample(2, 0, Fraction(-3, 4))),
        ],
    )
    def test_first_kind(self, c: Fraction, expected: Counterexample):
        """Test the first mixed-sign coefficient of the first kind."""
        assert find_counterexample(c, 10) == expected

    def test_small_parameter_general(self):
        """Test the witness c^2 - 1 for 0 < c < 1."""
        for c in (Fraction(1, 10), Fraction(1, 3), Fraction(99, 100)):
            assert find_counterexample(c, 10) == Counterexample(2, 0, c * c - 1)

    def test_second_kind(self):
        """Test the mixed-sign search restricted to the second kind."""
        assert find_counterexample(Fraction(1, 2), 10, kinds=("U",)) == Counterexample(2, 0, Fraction(-1, 2))

    def test_none_above_one(self):
        """Test no mixed signs are found for c > 1."""
        assert find_counterexample(2, 16) is None

    def test_reports(self):
        """Test the counterexample search reports found and absent witnesses."""
        found = verify_counterexample(Fraction(1, 2), 10)
        assert found.passed
        assert found.counterexample is not None
        assert found.counterexample.n == 2
        absent = verify_counterexample(2, 10)
        assert absent.passed
        assert absent.counterexample is None
        assert absent.notes == ("none found <= 10",)
        assert verify_counterexample(1, 10).passed


class TestIdentities:
    def test_trivial(self):
        """Test R_n(1; x) = (x^n + x^-n)/2 up to degree 50."""
        report = verify_trivial(50)
        assert report.passed
        assert report.checked == 51

    def test_table_and_involution(self):
        """Test table rows match expansions and are palindromic."""
        for kind in ("T", "U"):
            assert verify_table_agreement(kind, Fraction(3, 2), 10).passed
            assert verify_parity_involution(kind, Fraction(2), 10).passed

    def test_polynomial_identities(self):
        """Test the Chebyshev identities behind the positivity checks."""
        assert verify_coefform(64).passed
        assert verify_derivdef(40).passed
        assert verify_moretrig_poly(40).passed

    def test_methods(self):
        """Test the expansion methods agree through the report interface."""
        assert verify_methods("U", Fraction(-3, 2), 6, d=2).passed
        assert verify_methods("T", Fraction(1, 2), 10).passed
        assert verify_explicit(Fraction(3, 2), 20).passed

    def test_census(self):
        """Test the census cross-check passes for ranks two and three."""
        report = verify_census(2, 5)
        assert report.passed
        assert report.params == {"r": 2, "k_max": 5}
        assert verify_census(3, 4).passed


class TestCensusReport:
    def test_asymmetric_census_fails(self, monkeypatch: pytest.MonkeyPatch):
        """Test a census that breaks sign symmetry fails the cross-check."""
        census = {(1, 0): 1}
        monkeypatch.setattr("chebylaurent.verify.census_genfn", lambda r, k: dict(census))
        monkeypatch.setattr("chebylaurent.verify.census_bruteforce", lambda r, k, budget=0: dict(census))
        report = verify_census(2, 1)
        assert not report.passed
        assert report.counterexample == Counterexample(1, (1, 0), Fraction(1))
        assert report.notes == ("census not symmetric at k=1",)

    def test_class_outside_parity_support_fails(self, monkeypatch: pytest.MonkeyPatch):
        """Test a class unreachable at the given length fails the cross-check."""
        census = {(2, 0): 1, (-2, 0): 1, (0, 2): 1, (0, -2): 1}
        monkeypatch.setattr("chebylaurent.verify.census_genfn", lambda r, k: dict(census))
        monkeypatch.setattr("chebylaurent.verify.census_bruteforce", lambda r, k, budget=0: dict(census))
        report = verify_census(2, 1)
        assert not report.passed
        assert report.counterexample == Counterexample(1, (-2, 0), Fraction(1))
        assert report.notes == ("class outside the parity support at k=1",)

    def test_budget(self):
        """Test the census cross-check honours the enumerator budget."""
        with pytest.raises(BudgetExceededError):
            verify_census(2, 3, budget=35)
        assert verify_census(2, 3, budget=36).passed


def test_merge_reports_orders_by_c_then_property():
    """Test merged reports are ordered by c, then property."""
    def report(prop: str, **params: object) -> VerifyReport:
        return VerifyReport(property=prop, params=dict(params), passed=True)

    merged = merge_reports([
        [report("trivial", n_max=3)],
        [report("nonneg", c="2"), report("abc", c="2")],
        [report("nonneg", c="-3/2")],
    ])
    assert [(r.property, r.params.get("c")) for r in merged] == [
        ("nonneg", "-3/2"),
        ("abc", "2"),
        ("nonneg", "2"),
        ("trivial", None),
    ]
