"""
De Moivre's Approximatio and the Stirling–De Moivre series.

- normal approximation to binomial deviation probabilities, with and
  without continuity correction
- the middle-term ratio C(n, n/2) / 2^n against 2 / sqrt(2 pi n)
- the log-factorial correction series with exact Bernoulli-number
  coefficients, whose terms eventually grow for every fixed n
"""

import logging
import math
import threading
from fractions import Fraction
from typing import List, Optional

import mpmath
from scipy.special import erfc, ndtri

from models.approximation import ApproxComparison, SeriesExpansion, create_comparison
from models.binomial import BinomialModel, NumericMode
from probability.errors import DomainError
from probability.exact_binomial import band_limits, deviation_prob
from probability.numeric import literal_rational, probability_as_rational, working_precision
from storage.settings import get_exact_limit

logger = logging.getLogger(__name__)

_SQRT2 = math.sqrt(2.0)

_bernoulli_cache: List[Fraction] = []
_bernoulli_lock = threading.Lock()


def bernoulli_numbers(m: int) -> List[Fraction]:
    """
    Exact Bernoulli numbers B_0..B_m (B_1 = -1/2 convention).

    Built from sum_{j<=m} C(m+1, j) B_j = 0 and cached; later calls only
    extend the cache.
    """
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")
    with _bernoulli_lock:
        for index in range(len(_bernoulli_cache), m + 1):
            _bernoulli_cache.append(_next_bernoulli(index))
        return list(_bernoulli_cache[:m + 1])


def _next_bernoulli(m: int) -> Fraction:
    if m == 0:
        return Fraction(1)
    if m > 1 and m % 2:
        return Fraction(0)
    total = sum(math.comb(m + 1, j) * _bernoulli_cache[j] for j in range(m))
    return -total / (m + 1)


def bernoulli_number(index: int) -> Fraction:
    """B_index from the cache"""
    if index >= len(_bernoulli_cache):
        bernoulli_numbers(index)
    return _bernoulli_cache[index]


def series_coefficient(k: int) -> Fraction:
    """B_2k / (2k (2k - 1)): the coefficient of n^-(2k-1)"""
    b = bernoulli_number(2 * k)
    return b / (2 * k * (2 * k - 1))


def series_terms(n: int, k_max: int) -> SeriesExpansion:
    """
    First k_max terms of the log-factorial correction series at n.

    Args:
        n: Evaluation point, n >= 1
        k_max: Number of terms, at least 2

    Returns:
        SeriesExpansion with exact terms, the index of the smallest term and
        the first index after which the magnitudes grow
    """
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if k_max < 2:
        raise DomainError(f"k_max must be at least 2, got {k_max}")

    bernoulli_numbers(2 * k_max)
    terms = [series_coefficient(k) / Fraction(n) ** (2 * k - 1) for k in range(1, k_max + 1)]
    magnitudes = [abs(term) for term in terms]

    min_abs_index = 1 + min(range(k_max), key=lambda i: magnitudes[i])
    diverges_after = None
    for i in range(k_max - 1):
        if magnitudes[i + 1] > magnitudes[i]:
            diverges_after = i + 1
            break

    logger.debug("Series at n=%d: min term %d, grows after %s", n, min_abs_index, diverges_after)
    return SeriesExpansion(
        n=n,
        terms=terms,
        min_abs_index=min_abs_index,
        diverges_after=diverges_after,
    )


def _float_mode(mode: Optional[NumericMode]) -> NumericMode:
    mode = mode or NumericMode.float(53)
    if mode.is_exact:
        raise DomainError("log-factorial values are transcendental; use a Float mode")
    return mode


def _series_sum(n: int, k_terms: int, mode: NumericMode):
    if k_terms == 0:
        return 0
    terms = series_terms(n, max(k_terms, 2)).terms[:k_terms]
    if mode.float_precision <= 53:
        return math.fsum(float(term) for term in terms)
    return mpmath.fsum(mpmath.mpf(term.numerator) / term.denominator for term in terms)


def log_factorial(n: int, k_terms: int, mode: Optional[NumericMode] = None):
    """
    Stirling–De Moivre approximation of ln n!.

    (n + 1/2) ln n - n + ln sqrt(2 pi) + sum of the first k_terms series terms.

    Args:
        n: Argument, n >= 1
        k_terms: Number of correction terms, >= 0
        mode: Float mode; precisions above 53 bits use mpmath

    Returns:
        Approximate ln n!
    """
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    if k_terms < 0:
        raise DomainError(f"k_terms must be non-negative, got {k_terms}")
    mode = _float_mode(mode)

    if mode.float_precision <= 53:
        base = (n + 0.5) * math.log(n) - n + 0.5 * math.log(2 * math.pi)
        return base + _series_sum(n, k_terms, mode)
    with working_precision(mode):
        base = (n + mpmath.mpf(1) / 2) * mpmath.log(n) - n + mpmath.log(2 * mpmath.pi) / 2
        return base + _series_sum(n, k_terms, mode)


def exact_log_factorial(n: int, mode: Optional[NumericMode] = None):
    """ln n! from the exact big-integer factorial, rounded once in the given mode"""
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    mode = _float_mode(mode)
    if mode.float_precision <= 53:
        return math.lgamma(n + 1)
    with working_precision(mode):
        return mpmath.log(mpmath.mpf(math.factorial(n)))


def implied_log_sqrt_two_pi(n: int, k_terms: int, mode: Optional[NumericMode] = None):
    """
    The value of ln sqrt(2 pi) implied by ln n! and a truncated series.

    If the series converged this would tend to ln sqrt(2 pi) as k_terms grows;
    past the smallest term it moves away again.
    """
    mode = _float_mode(mode)
    if mode.float_precision <= 53:
        return exact_log_factorial(n, mode) - (n + 0.5) * math.log(n) + n - _series_sum(n, k_terms, mode)
    with working_precision(mode):
        head = (n + mpmath.mpf(1) / 2) * mpmath.log(n) - n
        return exact_log_factorial(n, mode) - head - _series_sum(n, k_terms, mode)


def middle_term_ratio(n: int) -> ApproxComparison:
    """
    Central binomial probability C(n, n/2) / 2^n against 2 / sqrt(2 pi n).

    Args:
        n: Even count, n >= 2

    Returns:
        ApproxComparison; exact_rational holds the exact value
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 2 or n % 2:
        raise DomainError(f"n must be an even integer >= 2, got {n!r}")
    exact = Fraction(math.comb(n, n // 2), 2 ** n)
    approx = 2.0 / math.sqrt(2 * math.pi * n)
    return create_comparison(exact, approx, exact_rational=exact)


def std_normal_cdf(z: float) -> float:
    """Standard normal CDF via the complementary error function"""
    return 0.5 * float(erfc(-z / _SQRT2))


def normal_interval(z_lo: float, z_hi: float) -> float:
    """Phi(z_hi) - Phi(z_lo), evaluated on the tail that avoids cancellation"""
    if z_lo >= z_hi:
        return 0.0
    if z_lo >= 0:
        return 0.5 * float(erfc(z_lo / _SQRT2) - erfc(z_hi / _SQRT2))
    if z_hi <= 0:
        return 0.5 * float(erfc(-z_hi / _SQRT2) - erfc(-z_lo / _SQRT2))
    return 1.0 - 0.5 * float(erfc(z_hi / _SQRT2)) - 0.5 * float(erfc(-z_lo / _SQRT2))


def normal_deviation_approx(
    model: BinomialModel,
    eps,
    continuity_correction: bool = True,
) -> ApproxComparison:
    """
    Normal approximation to P(|X/n - theta| < eps) next to the exact value.

    With continuity correction the normal law is integrated over
    [k_lo - 1/2, k_hi + 1/2] for the strict-interior lattice points k_lo..k_hi;
    without it, over the raw band theta +/- eps as De Moivre wrote it.

    Args:
        model: Binomial model with 0 < theta < 1
        eps: Band half-width, positive
        continuity_correction: Apply the half-unit lattice correction

    Returns:
        ApproxComparison of the binomial value and its normal approximation
    """
    eps = literal_rational(eps, name="eps")
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    if model.theta in (0, 1):
        raise DomainError("normal approximation needs 0 < theta < 1")

    mean = float(model.mean)
    sd = math.sqrt(float(model.variance))

    if continuity_correction:
        k_lo, k_hi = band_limits(model.n, model.theta, eps)
        if k_lo > k_hi:
            approx = 0.0
        else:
            approx = normal_interval((k_lo - 0.5 - mean) / sd, (k_hi + 0.5 - mean) / sd)
    else:
        half_width = model.n * float(eps)
        approx = normal_interval(-half_width / sd, half_width / sd)

    if model.n <= get_exact_limit():
        exact = deviation_prob(model, eps, NumericMode.exact())
        return create_comparison(exact, approx, exact_rational=exact)
    exact = deviation_prob(model, eps, NumericMode.float(53))
    return create_comparison(exact, approx)


def normal_sample_size(theta, eps, target) -> int:
    """
    Normal-theory sample size n = ceil((z / eps)^2 theta (1 - theta)).

    z is the two-sided quantile, Phi^-1((1 + target) / 2).
    """
    theta = literal_rational(theta, name="theta")
    eps = literal_rational(eps, name="eps")
    target = probability_as_rational(target)
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    if not 0 < target < 1:
        raise DomainError(f"target must lie in (0, 1), got {target}")
    z = float(ndtri((1 + float(target)) / 2))
    return max(1, math.ceil((z / float(eps)) ** 2 * float(theta * (1 - theta))))
