"""Shared fixtures and hypothesis settings for the chebylaurent test-suite."""

from fractions import Fraction
from typing import List

import pytest
from hypothesis import HealthCheck, settings

# exact arithmetic on larger powers has no useful per-example deadline
settings.register_profile("chebylaurent", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("chebylaurent")


@pytest.fixture
def positive_cs() -> List[Fraction]:
    return [Fraction(101, 100), Fraction(3, 2), Fraction(2), Fraction(10)]
