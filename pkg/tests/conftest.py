"""
Shared fixtures for the probability tests.
"""
import sys
from fractions import Fraction

import pytest

# Add parent directory to path
sys.path.insert(0, '.')

from models.binomial import NumericMode


@pytest.fixture
def exact():
    return NumericMode.exact()


@pytest.fixture
def float53():
    return NumericMode.float(53)


@pytest.fixture
def float1024():
    return NumericMode.float(1024)


@pytest.fixture
def small_exact_limit(monkeypatch):
    """Force the sample-size search onto the float path beyond n = 10"""
    monkeypatch.setenv("INVERSIO_EXACT_LIMIT", "10")
    return 10


@pytest.fixture
def clean_settings(monkeypatch):
    for name in ("INVERSIO_FLOAT_PRECISION", "INVERSIO_EXACT_LIMIT", "INVERSIO_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def bernoulli_theta():
    return Fraction(3, 5)
