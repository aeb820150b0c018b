"""
Tests for the normal approximation, the middle term and the log-factorial series.
"""

import math
from fractions import Fraction

import pytest

from models.binomial import BinomialModel, NumericMode
from probability.demoivre_approx import (
    bernoulli_numbers,
    exact_log_factorial,
    implied_log_sqrt_two_pi,
    log_factorial,
    middle_term_ratio,
    normal_deviation_approx,
    normal_interval,
    normal_sample_size,
    series_coefficient,
    series_terms,
    std_normal_cdf,
)
from probability.errors import DomainError


class TestBernoulliNumbers:
    """Test exact Bernoulli numbers and series coefficients"""

    def test_first_values(self):
        """Test B_0..B_10"""
        numbers = bernoulli_numbers(10)
        assert numbers[:3] == [1, Fraction(-1, 2), Fraction(1, 6)]
        assert numbers[4] == Fraction(-1, 30)
        assert numbers[6] == Fraction(1, 42)
        assert numbers[8] == Fraction(-1, 30)
        assert numbers[10] == Fraction(5, 66)
        assert all(numbers[k] == 0 for k in (3, 5, 7, 9))

    def test_series_coefficients(self):
        """Test B_2k / (2k (2k - 1)) for k = 1..5"""
        expected = [Fraction(1, 12), Fraction(-1, 360), Fraction(1, 1260), Fraction(-1, 1680), Fraction(1, 1188)]
        assert [series_coefficient(k) for k in range(1, 6)] == expected

    def test_series_terms_at_one(self):
        """Test that the terms at n = 1 equal the coefficients"""
        expansion = series_terms(1, 5)
        assert expansion.terms == [series_coefficient(k) for k in range(1, 6)]

    def test_series_terms_scale_with_n(self):
        """Test t_k = c_k / n^(2k - 1)"""
        expansion = series_terms(3, 4)
        assert expansion.terms[1] == Fraction(-1, 360) / 27


class TestSeriesDivergence:
    """Test that the log-factorial series diverges for fixed n"""

    @pytest.mark.parametrize("n", range(1, 19))
    def test_magnitudes_grow_within_sixty_terms(self, n):
        """Test a finite diverges_after for n <= 18 at 60 terms"""
        expansion = series_terms(n, 60)
        assert expansion.diverges_after is not None
        assert expansion.magnitude(expansion.diverges_after + 1) > expansion.magnitude(expansion.diverges_after)

    @pytest.mark.parametrize("n", [19, 20])
    def test_magnitudes_grow_within_seventy_terms(self, n):
        """Test a finite diverges_after for n = 19, 20 at 70 terms"""
        assert series_terms(n, 70).diverges_after is not None

    def test_smallest_term_near_pi_n(self):
        """Test that the smallest term sits near k = pi n"""
        for n in (2, 5, 10):
            expansion = series_terms(n, 60)
            assert abs(expansion.min_abs_index - math.pi * n) <= 2

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(1, 21))
    def test_truncation_at_smallest_term_wins(self, n, float1024):
        """Test truncation at the smallest term against truncation ten terms later"""
        k_min = series_terms(n, 70).min_abs_index
        exact = exact_log_factorial(n, float1024)
        error_min = abs(log_factorial(n, k_min, float1024) - exact)
        error_later = abs(log_factorial(n, k_min + 10, float1024) - exact)
        assert error_min < error_later

    def test_divergence_at_n_one(self):
        """Test |t_40| > |t_10| at n = 1"""
        expansion = series_terms(1, 40)
        assert expansion.diverges_after is not None
        assert expansion.magnitude(40) > expansion.magnitude(10)

    def test_implied_constant(self):
        """Test the ln sqrt(2 pi) implied by ln 10! and five terms"""
        assert implied_log_sqrt_two_pi(10, 5) == pytest.approx(0.5 * math.log(2 * math.pi), abs=1e-12)

    def test_log_factorial_of_one(self):
        """Test the bare Stirling formula at n = 1 against ln 1! = 0"""
        assert abs(log_factorial(1, 0)) < 0.082

    def test_log_factorial_two_terms(self):
        """Test ln 10! with two correction terms"""
        assert log_factorial(10, 2) == pytest.approx(math.lgamma(11), abs=1e-6)

    def test_log_factorial_no_terms(self):
        """Test the bare Stirling formula at n = 10"""
        assert log_factorial(10, 0) == pytest.approx(math.lgamma(11), rel=1e-2)

    def test_exact_mode_rejected(self, exact):
        """Test that log-factorials refuse Exact mode"""
        with pytest.raises(DomainError):
            log_factorial(10, 3, exact)


class TestMiddleTerm:
    """Test C(n, n/2) / 2^n against 2 / sqrt(2 pi n)"""

    def test_n_two(self):
        """Test the smallest even n"""
        comparison = middle_term_ratio(2)
        assert comparison.exact_rational == Fraction(1, 2)
        assert comparison.approx == pytest.approx(2 / math.sqrt(4 * math.pi))

    def test_relative_error_order(self):
        """Test rel_error close to 1/(4n)"""
        for n in (100, 1000, 10000):
            assert 0.2 < middle_term_ratio(n).rel_error * n < 0.3

    def test_n_ten_thousand(self):
        """Test rel_error below 1e-4 at n = 10000"""
        assert middle_term_ratio(10000).rel_error < 1e-4

    def test_odd_n_rejected(self):
        """Test that odd n raises DomainError"""
        with pytest.raises(DomainError):
            middle_term_ratio(7)


class TestNormalApproximation:
    """Test the normal approximation to deviation probabilities"""

    def test_std_normal_cdf(self):
        """Test Phi at 0 and the 95% interval"""
        assert std_normal_cdf(0.0) == 0.5
        assert normal_interval(-1.959963984540054, 1.959963984540054) == pytest.approx(0.95, abs=1e-12)

    def test_normal_interval_empty(self):
        """Test z_lo >= z_hi"""
        assert normal_interval(1.0, 1.0) == 0.0

    def test_accuracy_n100(self):
        """Test |approx - exact| < 5e-3 at n = 100"""
        comparison = normal_deviation_approx(BinomialModel(100, Fraction(1, 2)), Fraction(1, 10))
        assert comparison.abs_error < 5e-3
        assert comparison.exact_rational is not None

    def test_accuracy_n10000(self):
        """Test |approx - exact| < 5e-4 at n = 10000"""
        comparison = normal_deviation_approx(BinomialModel(10000, Fraction(3, 5)), Fraction(1, 100))
        assert comparison.abs_error < 5e-4

    def test_error_shrinks_with_n(self):
        """Test that the error decreases along n = 100, 1000, 10000"""
        errors = [
            normal_deviation_approx(BinomialModel(n, Fraction(3, 5)), Fraction(1, 50)).abs_error
            for n in (100, 1000, 10000)
        ]
        assert errors[0] > errors[1] > errors[2]

    def test_without_correction_is_worse(self):
        """Test that the raw band loses accuracy at small n"""
        model = BinomialModel(100, Fraction(1, 2))
        corrected = normal_deviation_approx(model, Fraction(1, 10))
        raw = normal_deviation_approx(model, Fraction(1, 10), continuity_correction=False)
        assert raw.abs_error > corrected.abs_error

    def test_degenerate_theta_rejected(self):
        """Test that theta = 0 raises DomainError"""
        with pytest.raises(DomainError):
            normal_deviation_approx(BinomialModel(10, 0), Fraction(1, 10))

    def test_normal_sample_size(self):
        """Test ceil((z / eps)^2 theta (1 - theta))"""
        assert normal_sample_size(Fraction(1, 2), Fraction(1, 10), Fraction(95, 100)) == 97

    def test_float1024_log_factorial(self, float1024):
        """Test that 1024-bit log-factorials resolve tiny truncation errors"""
        exact = exact_log_factorial(30, float1024)
        error = abs(log_factorial(30, 20, float1024) - exact)
        assert 0 < error < 1e-40
