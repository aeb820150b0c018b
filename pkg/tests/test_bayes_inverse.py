"""
Tests for Beta posteriors and the incomplete beta function.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from models.bayes import UNIFORM_PRIOR, BetaParams, IntervalQuery, ObservedCounts
from models.binomial import NumericMode
from probability.bayes_inverse import (
    EXACT_OBSERVATION_LIMIT,
    exact_incomplete_beta,
    hartley_deviation,
    laplace_sequence,
    posterior,
    posterior_interval_prob,
    posterior_mean,
    regularized_incomplete_beta,
    regularized_incomplete_beta_complement,
)
from probability.errors import DomainError, NumericalError, UnsupportedSpecError

counts = st.builds(ObservedCounts, st.integers(0, 30), st.integers(0, 30))
priors = st.builds(BetaParams, st.integers(1, 5), st.integers(1, 5))
limits = st.lists(
    st.builds(Fraction, st.integers(0, 20), st.just(20)),
    min_size=2, max_size=2,
).map(sorted)

GRID = [Fraction(j, 20) for j in range(21)]


class TestPosterior:
    """Test the conjugate update"""

    def test_uniform_update(self):
        """Test Beta(1, 1) -> Beta(1 + p, 1 + q)"""
        assert posterior(UNIFORM_PRIOR, ObservedCounts(6, 4)) == BetaParams(7, 5)

    @settings(max_examples=500, deadline=None)
    @given(prior=priors, first=counts, second=counts)
    def test_composition(self, prior, first, second):
        """Test that two updates equal one update on the pooled counts"""
        assert posterior(posterior(prior, first), second) == posterior(prior, first + second)

    def test_rule_of_succession(self):
        """Test the posterior mean (p + 1) / (p + q + 2)"""
        assert posterior_mean(posterior(UNIFORM_PRIOR, ObservedCounts(9, 1))) == Fraction(10, 12)

    def test_fractional_prior_mean_is_float(self):
        """Test that non-integer shapes give a float mean"""
        assert posterior_mean(BetaParams(Fraction(1, 2), Fraction(1, 2))) == pytest.approx(0.5)


class TestIncompleteBeta:
    """Test the continued fraction against exact integration"""

    def test_endpoints(self):
        """Test I(0) = 0 and I(1) = 1"""
        assert regularized_incomplete_beta(0, 3, 4) == 0.0
        assert regularized_incomplete_beta(1, 3, 4) == 1.0
        assert regularized_incomplete_beta_complement(0, 3, 4) == 1.0

    def test_exact_symmetric_shapes(self):
        """Test I(1/2; a, a) = 1/2"""
        for a in range(1, 12):
            assert exact_incomplete_beta(Fraction(1, 2), a, a) == Fraction(1, 2)

    def test_exact_uniform(self):
        """Test I(x; 1, 1) = x"""
        assert exact_incomplete_beta(Fraction(3, 7), 1, 1) == Fraction(3, 7)

    def test_linear_shape(self):
        """Test I(1/2; 2, 1) = 1/4"""
        assert exact_incomplete_beta(Fraction(1, 2), 2, 1) == Fraction(1, 4)
        assert regularized_incomplete_beta(0.5, 2, 1) == pytest.approx(0.25, rel=1e-14)

    def test_non_convergence(self, monkeypatch):
        """Test NumericalError when the continued fraction runs out of iterations"""
        monkeypatch.setattr("probability.bayes_inverse.CF_MAX_ITER", 1)
        with pytest.raises(NumericalError) as info:
            regularized_incomplete_beta(0.3, 20, 20)
        assert info.value.iterations == 1
        assert info.value.partial_value is not None

    def test_exact_needs_integer_shapes(self):
        """Test that fractional shapes are unsupported in exact integration"""
        with pytest.raises(UnsupportedSpecError):
            exact_incomplete_beta(Fraction(1, 2), Fraction(1, 2), 1)

    def test_domain(self):
        """Test x outside [0, 1] and non-positive shapes"""
        with pytest.raises(DomainError):
            regularized_incomplete_beta(1.5, 2, 2)
        with pytest.raises(DomainError):
            regularized_incomplete_beta(0.5, 0, 2)

    def test_complement_precision(self):
        """Test the upper tail where I is close to one"""
        exact = 1 - exact_incomplete_beta(Fraction(19, 20), 2, 40)
        assert regularized_incomplete_beta_complement(0.95, 2, 40) == pytest.approx(float(exact), rel=1e-10)

    @pytest.mark.slow
    def test_oracle_grid(self):
        """Test the continued fraction within 1e-10 relative error for p + q <= 60"""
        for total in range(EXACT_OBSERVATION_LIMIT + 1):
            for p in range(total + 1):
                a, b = p + 1, total - p + 1
                for x in GRID:
                    expected = float(exact_incomplete_beta(x, a, b))
                    assert regularized_incomplete_beta(float(x), a, b) == pytest.approx(expected, rel=1e-10), (x, a, b)


class TestIntervalProbability:
    """Test posterior interval probabilities"""

    def test_one_success(self):
        """Test P(1/2 < theta < 1 | one success) = 3/4"""
        value = posterior_interval_prob(UNIFORM_PRIOR, ObservedCounts(1, 0),
                                        IntervalQuery(Fraction(1, 2), Fraction(1)), NumericMode.exact())
        assert value == Fraction(3, 4)

    def test_float_default(self):
        """Test that the default mode returns a float"""
        value = posterior_interval_prob(UNIFORM_PRIOR, ObservedCounts(1, 0), IntervalQuery(Fraction(1, 2), Fraction(1)))
        assert value == pytest.approx(0.75, rel=1e-12)

    def test_full_support(self):
        """Test that [0, 1] carries all posterior mass"""
        value = posterior_interval_prob(UNIFORM_PRIOR, ObservedCounts(7, 3), IntervalQuery(), NumericMode.exact())
        assert value == 1

    def test_exact_mode_limit(self):
        """Test that Exact mode refuses more than 60 observations"""
        with pytest.raises(UnsupportedSpecError):
            posterior_interval_prob(UNIFORM_PRIOR, ObservedCounts(40, 21), IntervalQuery(), NumericMode.exact())

    def test_exact_mode_fractional_prior(self):
        """Test that Exact mode refuses a fractional prior"""
        with pytest.raises(UnsupportedSpecError):
            posterior_interval_prob(BetaParams(Fraction(1, 2), 1), ObservedCounts(1, 1),
                                    IntervalQuery(), NumericMode.exact())

    def test_high_precision(self):
        """Test the mpmath path against the exact value"""
        query = IntervalQuery(Fraction(1, 2), Fraction(7, 10))
        data = ObservedCounts(6, 4)
        exact = posterior_interval_prob(UNIFORM_PRIOR, data, query, NumericMode.exact())
        value = posterior_interval_prob(UNIFORM_PRIOR, data, query, NumericMode.float(200))
        assert float(value) == pytest.approx(float(exact), rel=1e-15)

    @settings(max_examples=500, deadline=None)
    @given(prior=priors, data=counts, cut=st.integers(1, 19))
    def test_complement(self, prior, data, cut):
        """Test P(0 < theta < x) + P(x < theta < 1) = 1"""
        x = Fraction(cut, 20)
        mode = NumericMode.exact()
        lower = posterior_interval_prob(prior, data, IntervalQuery(0, x), mode)
        upper = posterior_interval_prob(prior, data, IntervalQuery(x, 1), mode)
        assert lower + upper == 1
        a, b = posterior(prior, data).a, posterior(prior, data).b
        total = regularized_incomplete_beta(float(x), a, b) + regularized_incomplete_beta_complement(float(x), a, b)
        assert total == pytest.approx(1.0, abs=1e-14)

    @settings(max_examples=500, deadline=None)
    @given(prior=priors, data=counts, bounds=limits)
    def test_swap_symmetry(self, prior, data, bounds):
        """Test P(l1 < theta < l2 | p, q, a, b) = P(1 - l2 < theta < 1 - l1 | q, p, b, a)"""
        query = IntervalQuery(*bounds)
        swapped_prior = BetaParams(prior.b, prior.a)
        mode = NumericMode.exact()
        assert (posterior_interval_prob(prior, data, query, mode)
                == posterior_interval_prob(swapped_prior, data.swapped(), query.mirrored(), mode))

    @settings(max_examples=500, deadline=None)
    @given(prior=priors, data=counts, bounds=limits)
    def test_float_matches_exact(self, prior, data, bounds):
        """Test the float path against exact integration"""
        query = IntervalQuery(*bounds)
        exact = posterior_interval_prob(prior, data, query, NumericMode.exact())
        value = posterior_interval_prob(prior, data, query)
        assert value == pytest.approx(float(exact), rel=1e-9, abs=1e-14)


class TestHartley:
    """Test the posterior mass of the band around the observed ratio"""

    def test_band_covers_support(self):
        """Test p = q = 1 with eps = 1/2"""
        assert hartley_deviation(UNIFORM_PRIOR, ObservedCounts(1, 1), Fraction(1, 2)) == 1

    def test_exact_value(self):
        """Test Beta(7, 5) over [1/2, 7/10]"""
        expected = exact_incomplete_beta(Fraction(7, 10), 7, 5) - exact_incomplete_beta(Fraction(1, 2), 7, 5)
        assert hartley_deviation(UNIFORM_PRIOR, ObservedCounts(6, 4), Fraction(1, 10)) == expected

    def test_large_sample(self):
        """Test p = 600, q = 400, eps = 1/10"""
        assert hartley_deviation(UNIFORM_PRIOR, ObservedCounts(600, 400), Fraction(1, 10)) >= 0.999

    def test_no_observations(self):
        """Test that empty counts raise DomainError"""
        with pytest.raises(DomainError):
            hartley_deviation(UNIFORM_PRIOR, ObservedCounts(0, 0), Fraction(1, 10))

    def test_inverse_convergence(self):
        """Test growth along p + q = 100, 1000, 10000 at ratio 3:2"""
        rows = laplace_sequence(3, 2, Fraction(1, 50), [100, 1000, 10000])
        probabilities = [prob for _, prob in rows]
        assert probabilities[0] < probabilities[1] < probabilities[2]
        assert probabilities[2] > 0.999

    def test_sequence_rejects_uneven_total(self):
        """Test totals that are not multiples of the ratio"""
        with pytest.raises(DomainError):
            laplace_sequence(3, 2, Fraction(1, 50), [101])
