"""
Bayes's solution of the inverse problem.

Given p successes and q failures, the posterior of the unknown probability
under a Beta(a, b) prior is Beta(a + p, b + q). Interval probabilities are
differences of the regularized incomplete beta function: a continued
fraction in Float mode, exact polynomial integration for integer shapes.
"""

import logging
import math
from fractions import Fraction
from typing import Optional

import mpmath
from scipy.special import betaln

from models.bayes import UNIFORM_PRIOR, BetaParams, IntervalQuery, ObservedCounts
from models.binomial import NumericMode
from probability.errors import DomainError, NumericalError, UnsupportedSpecError
from probability.numeric import Number, as_rational, working_precision

logger = logging.getLogger(__name__)

EXACT_OBSERVATION_LIMIT = 60
CF_EPS = 1e-15
CF_TINY = 1e-300
CF_MAX_ITER = 10000


def posterior(prior: BetaParams, data: ObservedCounts) -> BetaParams:
    """
    Conjugate update Beta(a, b) -> Beta(a + p, b + q).

    Args:
        prior: Prior shapes
        data: Observed successes and failures

    Returns:
        Posterior shapes
    """
    return BetaParams(prior.a + data.p, prior.b + data.q)


def posterior_mean(params: BetaParams):
    """a / (a + b); under the uniform prior this is (p + 1) / (p + q + 2)"""
    if params.is_integral:
        return Fraction(params.a, params.a + params.b)
    return float(params.a) / float(params.a + params.b)


def _beta_continued_fraction(x: float, a: float, b: float) -> float:
    """
    Continued fraction for I(x; a, b), modified Lentz evaluation.

    Converges quickly for x < (a + 1) / (a + b + 2).
    """
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < CF_TINY:
        d = CF_TINY
    d = 1.0 / d
    h = d

    for m in range(1, CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < CF_TINY:
            d = CF_TINY
        c = 1.0 + aa / c
        if abs(c) < CF_TINY:
            c = CF_TINY
        d = 1.0 / d
        h *= d * c

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < CF_TINY:
            d = CF_TINY
        c = 1.0 + aa / c
        if abs(c) < CF_TINY:
            c = CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < CF_EPS:
            logger.debug("Incomplete beta converged in %d iterations (x=%g, a=%g, b=%g)", m, x, a, b)
            return h

    raise NumericalError(
        f"Incomplete beta continued fraction did not converge in {CF_MAX_ITER} iterations "
        f"(x={x}, a={a}, b={b})",
        partial_value=h,
        iterations=CF_MAX_ITER,
    )


def _lower_tail(x: float, a: float, b: float) -> float:
    """I(x; a, b) for 0 < x < 1 where the direct continued fraction converges"""
    log_front = a * math.log(x) + b * math.log1p(-x) - float(betaln(a, b))
    return math.exp(log_front) * _beta_continued_fraction(x, a, b) / a


def _check_beta_args(x, a, b):
    if not 0 <= x <= 1:
        raise DomainError(f"x must lie in [0, 1], got {x}")
    if not (a > 0 and b > 0):
        raise DomainError(f"shapes must be positive, got a={a}, b={b}")


def regularized_incomplete_beta(x, a, b) -> float:
    """
    I(x; a, b), the Beta(a, b) cumulative distribution function.

    Uses the continued fraction on whichever side of (a + 1) / (a + b + 2)
    makes it converge fast, with the symmetry I(x; a, b) = 1 - I(1 - x; b, a).
    I(0) = 0 and I(1) = 1 exactly.
    """
    _check_beta_args(x, a, b)
    if x == 0:
        return 0.0
    if x == 1:
        return 1.0
    x, a, b = float(x), float(a), float(b)
    if x < (a + 1.0) / (a + b + 2.0):
        return _lower_tail(x, a, b)
    return 1.0 - _lower_tail(1.0 - x, b, a)


def regularized_incomplete_beta_complement(x, a, b) -> float:
    """1 - I(x; a, b) without cancellation when I is close to one"""
    _check_beta_args(x, a, b)
    if x == 0:
        return 1.0
    if x == 1:
        return 0.0
    x, a, b = float(x), float(a), float(b)
    if x < (a + 1.0) / (a + b + 2.0):
        return 1.0 - _lower_tail(x, a, b)
    return _lower_tail(1.0 - x, b, a)


def exact_incomplete_beta(x: Fraction, a: int, b: int) -> Fraction:
    """
    I(x; a, b) for integer shapes and rational x, in exact arithmetic.

    Integrates theta^(a-1) (1 - theta)^(b-1) term by term after expanding
    (1 - theta)^(b-1) binomially, and divides by B(a, b) = (a-1)! (b-1)! / (a+b-1)!.
    """
    x = as_rational(x, NumericMode.exact(), "x")
    if not (isinstance(a, int) and isinstance(b, int)) or a < 1 or b < 1:
        raise UnsupportedSpecError(f"exact incomplete beta needs positive integer shapes, got a={a}, b={b}")
    if not 0 <= x <= 1:
        raise DomainError(f"x must lie in [0, 1], got {x}")

    integral = Fraction(0)
    x_power = x ** a
    for j in range(b):
        term = Fraction(math.comb(b - 1, j), a + j) * x_power
        integral += -term if j % 2 else term
        x_power *= x
    beta = Fraction(math.factorial(a - 1) * math.factorial(b - 1), math.factorial(a + b - 1))
    return integral / beta


def _exact_eligible(prior: BetaParams, data: ObservedCounts) -> bool:
    return prior.is_integral and data.total <= EXACT_OBSERVATION_LIMIT


def posterior_interval_prob(
    prior: BetaParams,
    data: ObservedCounts,
    query: IntervalQuery,
    mode: Optional[NumericMode] = None,
) -> Number:
    """
    P(l1 < theta < l2 | p successes, q failures) under a Beta prior.

    Args:
        prior: Prior shapes (uniform by default in callers)
        data: Observed counts
        query: Interval limits
        mode: Float (default) or Exact; Exact needs integer shapes and p + q <= 60

    Returns:
        I(l2; a', b') - I(l1; a', b') for the posterior (a', b')
    """
    mode = mode or NumericMode.float(53)
    post = posterior(prior, data)

    if mode.is_exact:
        if not _exact_eligible(prior, data):
            raise UnsupportedSpecError(
                "Exact mode needs integer prior shapes and at most "
                f"{EXACT_OBSERVATION_LIMIT} observations"
            )
        return (
            exact_incomplete_beta(query.l2, post.a, post.b)
            - exact_incomplete_beta(query.l1, post.a, post.b)
        )

    if mode.float_precision > 53:
        with working_precision(mode):
            l1 = mpmath.mpf(query.l1.numerator) / query.l1.denominator
            l2 = mpmath.mpf(query.l2.numerator) / query.l2.denominator
            return mpmath.betainc(_mp_shape(post.a), _mp_shape(post.b), l1, l2, regularized=True)

    a, b = float(post.a), float(post.b)
    mean = a / (a + b)
    l1, l2 = float(query.l1), float(query.l2)
    if l1 >= mean:
        # Both limits in the upper half: difference of upper tails
        value = (
            regularized_incomplete_beta_complement(l1, a, b)
            - regularized_incomplete_beta_complement(l2, a, b)
        )
    else:
        value = regularized_incomplete_beta(l2, a, b) - regularized_incomplete_beta(l1, a, b)
    return min(max(value, 0.0), 1.0)


def _mp_shape(value):
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def hartley_deviation(
    prior: BetaParams,
    data: ObservedCounts,
    eps,
    mode: Optional[NumericMode] = None,
) -> Number:
    """
    Posterior probability that theta lies within eps of the observed ratio p/(p+q).

    The band [p/(p+q) - eps, p/(p+q) + eps] is clipped to [0, 1].

    Args:
        prior: Prior shapes
        data: Observed counts, p + q >= 1
        eps: Band half-width, positive
        mode: None picks Exact when eligible (integer shapes, p + q <= 60)
            and Float otherwise

    Returns:
        Posterior probability of the band
    """
    if data.is_empty:
        raise DomainError("hartley_deviation needs at least one observation")
    eps = as_rational(eps, mode, "eps")
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")

    center = data.ratio
    query = IntervalQuery(max(Fraction(0), center - eps), min(Fraction(1), center + eps))
    if mode is None:
        mode = NumericMode.exact() if _exact_eligible(prior, data) else NumericMode.float(53)
    return posterior_interval_prob(prior, data, query, mode)


def laplace_sequence(ratio_p: int, ratio_q: int, eps, totals, prior: BetaParams = UNIFORM_PRIOR):
    """
    hartley_deviation along growing samples with a fixed success ratio.

    Args:
        ratio_p: Success part of the ratio p:q
        ratio_q: Failure part of the ratio p:q
        eps: Band half-width
        totals: Sample sizes p + q, each a multiple of ratio_p + ratio_q

    Returns:
        List of (total, probability) pairs
    """
    unit = ratio_p + ratio_q
    rows = []
    for total in totals:
        if total % unit:
            raise DomainError(f"total {total} is not a multiple of {unit}")
        scale = total // unit
        data = ObservedCounts(ratio_p * scale, ratio_q * scale)
        rows.append((total, hartley_deviation(prior, data, eps)))
    return rows
