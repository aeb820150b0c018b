"""
Binomial distribution kernel.

Exact mode works in big-integer arithmetic and returns Fractions; it is the
oracle every other module checks against. Float mode evaluates the log-pmf
with the saddle-point form of the log-gamma ratio (Stirling remainder plus a
deviance term), which keeps binary64 results within 2^-40 relative error of
the exact value for n up to a few thousand.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import mpmath

from models.binomial import BinomialModel, NumericMode
from probability.errors import DomainError
from probability.numeric import Number, as_rational, to_number, working_precision

logger = logging.getLogger(__name__)

_LN_SQRT_2PI = 0.5 * math.log(2 * math.pi)

# Stirling series coefficients B_2k / (2k (2k-1)) for k = 1..5
_STIRLING_COEFFICIENTS = (
    1.0 / 12,
    -1.0 / 360,
    1.0 / 1260,
    -1.0 / 1680,
    1.0 / 1188,
)


def _default_mode() -> NumericMode:
    return NumericMode.exact()


def _check_count(model: BinomialModel, k: int, name: str = "k"):
    if isinstance(k, bool) or not isinstance(k, int):
        raise DomainError(f"{name} must be an integer, got {k!r}")
    if not 0 <= k <= model.n:
        raise DomainError(f"{name}={k} outside [0, {model.n}]")


@lru_cache(maxsize=256)
def stirling_error(n: float) -> float:
    """
    Remainder of Stirling's formula: ln n! - [(n + 1/2) ln n - n + ln sqrt(2 pi)].

    Small arguments use lgamma directly; from 15 on the asymptotic series is
    accurate to full binary64 precision with five terms.
    """
    if n <= 15:
        return math.lgamma(n + 1.0) - (n + 0.5) * math.log(n) + n - _LN_SQRT_2PI
    inv = 1.0 / n
    inv_sq = inv * inv
    total = 0.0
    power = inv
    for coefficient in _STIRLING_COEFFICIENTS:
        total += coefficient * power
        power *= inv_sq
    return total


def _deviance(x: float, mean: float) -> float:
    """
    x ln(x / mean) + mean - x, computed without cancellation near x = mean.
    """
    if x == 0:
        return mean
    if abs(x - mean) < 0.1 * (x + mean):
        v = (x - mean) / (x + mean)
        s = (x - mean) * v
        ej = 2 * x * v
        v_sq = v * v
        j = 1
        while True:
            ej *= v_sq
            s1 = s + ej / (2 * j + 1)
            if s1 == s:
                return s1
            s = s1
            j += 1
    return x * math.log(x / mean) + mean - x


def log_pmf(model: BinomialModel, k: int) -> float:
    """
    Natural log of the binomial probability of k successes, in binary64.

    Args:
        model: Binomial model
        k: Success count in [0, n]

    Returns:
        ln P(X = k), or -inf when the probability is zero
    """
    _check_count(model, k)
    n = model.n
    theta = float(model.theta)
    q = 1.0 - theta

    if model.theta == 0:
        return 0.0 if k == 0 else -math.inf
    if model.theta == 1:
        return 0.0 if k == n else -math.inf
    if k == 0:
        return n * math.log1p(-theta)
    if k == n:
        return n * math.log(theta)

    m = n - k
    log_core = (
        stirling_error(n) - stirling_error(k) - stirling_error(m)
        - _deviance(k, n * theta) - _deviance(m, n * q)
    )
    log_scale = 0.5 * (math.log(n) - math.log(2 * math.pi) - math.log(k) - math.log(m))
    return log_core + log_scale


def _mp_pmf(model: BinomialModel, k: int):
    """pmf at the current mpmath working precision"""
    theta = mpmath.mpf(model.theta.numerator) / model.theta.denominator
    if model.theta == 0:
        return mpmath.mpf(1) if k == 0 else mpmath.mpf(0)
    if model.theta == 1:
        return mpmath.mpf(1) if k == model.n else mpmath.mpf(0)
    n = model.n
    log_value = (
        mpmath.loggamma(n + 1) - mpmath.loggamma(k + 1) - mpmath.loggamma(n - k + 1)
        + k * mpmath.log(theta) + (n - k) * mpmath.log1p(-theta)
    )
    return mpmath.exp(log_value)


def _exact_terms(model: BinomialModel, lo: int, hi: int) -> Tuple[List[int], int]:
    """
    Integer numerators of pmf(lo..hi) over the common denominator t^n.

    theta = a/t; the numerator of pmf(k) is C(n, k) a^k (t - a)^(n - k), updated
    multiplicatively from one k to the next.
    """
    n = model.n
    a = model.theta.numerator
    t = model.theta.denominator
    c = t - a
    denominator = t ** n

    if a == 0 or c == 0:
        # Degenerate theta: all mass on k = 0 or k = n
        target = 0 if a == 0 else n
        return [denominator if k == target else 0 for k in range(lo, hi + 1)], denominator

    term = math.comb(n, lo) * a ** lo * c ** (n - lo)
    numerators = [term]
    for k in range(lo, hi):
        term = term * (n - k) * a // ((k + 1) * c)
        numerators.append(term)
    return numerators, denominator


def pmf(model: BinomialModel, k: int, mode: NumericMode = None) -> Number:
    """
    Binomial probability C(n, k) theta^k (1 - theta)^(n - k).

    Args:
        model: Binomial model
        k: Success count in [0, n]
        mode: Exact (default) or Float

    Returns:
        Fraction in Exact mode, float or mpmath number in Float mode
    """
    mode = mode or _default_mode()
    _check_count(model, k)

    if mode.is_exact:
        numerators, denominator = _exact_terms(model, k, k)
        return Fraction(numerators[0], denominator)
    if mode.float_precision <= 53:
        return math.exp(log_pmf(model, k))
    with working_precision(mode):
        return +_mp_pmf(model, k)


def pmf_table(model: BinomialModel, mode: NumericMode = None) -> List[Number]:
    """All probabilities pmf(0..n)"""
    mode = mode or _default_mode()
    if mode.is_exact:
        numerators, denominator = _exact_terms(model, 0, model.n)
        return [Fraction(value, denominator) for value in numerators]
    return [pmf(model, k, mode) for k in range(model.n + 1)]


def interval_count_prob(model: BinomialModel, lo: int, hi: int, mode: NumericMode = None) -> Number:
    """
    Probability that the success count lies in [lo, hi].

    Args:
        model: Binomial model
        lo: Smallest count included
        hi: Largest count included
        mode: Exact (default) or Float

    Returns:
        Sum of pmf(lo..hi); Exact mode equals the term-by-term rational sum
    """
    mode = mode or _default_mode()
    _check_count(model, lo, "lo")
    _check_count(model, hi, "hi")
    if lo > hi:
        raise DomainError(f"lo={lo} exceeds hi={hi}")

    if mode.is_exact:
        numerators, denominator = _exact_terms(model, lo, hi)
        return Fraction(sum(numerators), denominator)
    if mode.float_precision <= 53:
        return math.fsum(math.exp(log_pmf(model, k)) for k in range(lo, hi + 1))
    with working_precision(mode):
        return mpmath.fsum(_mp_pmf(model, k) for k in range(lo, hi + 1))


def band_limits(n: int, theta: Fraction, eps: Fraction) -> Tuple[int, int]:
    """
    Lattice points k with |k/n - theta| < eps, as an inclusive range.

    Points exactly on the band edge are excluded. When no lattice point lies
    strictly inside, the returned range is empty (k_lo > k_hi).
    """
    center = n * theta
    half_width = n * eps
    # Smallest k with k > center - half_width
    lower_edge = center - half_width
    k_lo = math.floor(lower_edge) + 1
    # Largest k with k < center + half_width
    upper_edge = center + half_width
    k_hi = math.ceil(upper_edge) - 1
    return max(k_lo, 0), min(k_hi, n)


def deviation_prob(model: BinomialModel, eps, mode: NumericMode = None) -> Number:
    """
    P(theta - eps < X/n < theta + eps | theta), strict inequalities.

    Args:
        model: Binomial model
        eps: Half-width of the band (Fraction; floats only in Float mode)
        mode: Exact (default) or Float

    Returns:
        Probability that the sample mean lies strictly inside the band
    """
    mode = mode or _default_mode()
    eps = as_rational(eps, mode, "eps")
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")

    k_lo, k_hi = band_limits(model.n, model.theta, eps)
    if k_lo > k_hi:
        return to_number(Fraction(0), mode)
    logger.debug("deviation_prob n=%d theta=%s eps=%s band=[%d, %d]", model.n, model.theta, eps, k_lo, k_hi)
    return interval_count_prob(model, k_lo, k_hi, mode)
