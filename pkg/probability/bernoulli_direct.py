"""
Bernoulli's direct theorem.

Given theta and eps, how many trials make the sample mean fall within eps of
theta with a prescribed probability? Two answers: Bernoulli's own
conservative bound (odds form, as in Ars Conjectandi Part IV) and the exact
minimal n found by searching the binomial distribution.
"""

import logging
import math
from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from scipy.special import bdtr

from models.binomial import BinomialModel, NumericMode
from models.bernoulli import (
    BERNOULLI_BOUND,
    EXACT_SEARCH,
    MoralCertaintySpec,
    SampleSizeResult,
)
from probability.errors import DomainError, NotFoundError, UnsupportedSpecError
from probability.exact_binomial import band_limits, deviation_prob
from probability.numeric import literal_rational, probability_as_rational
from storage.settings import get_exact_limit

logger = logging.getLogger(__name__)

FLOAT_CUSHION = 2.0 ** -40
# Screening margin; well above the error of the library binomial CDF
SCREEN_MARGIN = 1e-9
FALLBACK_WINDOW = 10


def odds_from_target(target) -> int:
    """
    Convert a target probability to Bernoulli's odds c : 1.

    Args:
        target: Probability in (0, 1); floats are read at their decimal literal

    Returns:
        c = round(target / (1 - target)), at least 1
    """
    target = probability_as_rational(target)
    if not 0 < target < 1:
        raise DomainError(f"target must lie in (0, 1), got {target}")
    return max(1, round(target / (1 - target)))


def _least_power(base_num: int, base_den: int, bound: int) -> int:
    """Smallest m >= 1 with (base_num / base_den)^m >= bound, in integers"""
    m = 1
    num, den = base_num, base_den
    while num < bound * den:
        num *= base_num
        den *= base_den
        m += 1
    return m


def _one_sided_count(near: int, far: int, c: int) -> int:
    """
    Bernoulli's count of blocks of t trials for one tail.

    m = ceil(ln(c (far - 1)) / ln((near + 1) / near)),
    N = ceil(m + far (m - 1) / (near + 1)).
    """
    m = _least_power(near + 1, near, c * (far - 1))
    return math.ceil(m + Fraction(far * (m - 1), near + 1))


def _evaluation_mode(n: int) -> NumericMode:
    if n <= get_exact_limit():
        return NumericMode.exact()
    return NumericMode.float(53)


def _clamp(prob):
    if isinstance(prob, float):
        return min(max(prob, 0.0), 1.0)
    return prob


def verify_bound(spec: MoralCertaintySpec, n: int, mode: Optional[NumericMode] = None):
    """
    Deviation probability at a proposed sample size for the theta and eps of a moral certainty spec.

    Args:
        spec: Moral certainty spec
        n: Number of trials
        mode: Evaluation mode (defaults to Exact up to the exact limit)

    Returns:
        P(|X/n - r/t| < 1/t)
    """
    mode = mode or _evaluation_mode(n)
    return _clamp(deviation_prob(BinomialModel(n=n, theta=spec.theta), spec.eps, mode))


def bernoulli_bound_n(spec: MoralCertaintySpec) -> SampleSizeResult:
    """
    Bernoulli's conservative sample size for theta = r/t, eps = 1/t, odds c : 1.

    Args:
        spec: Moral certainty spec with r >= 2 and s >= 2

    Returns:
        SampleSizeResult with n = t * max(N1, N2) and the probability reached there
    """
    if spec.r < 2 or spec.s < 2:
        raise UnsupportedSpecError(
            f"Bernoulli's bound needs r >= 2 and s >= 2, got r={spec.r}, s={spec.s}"
        )

    success_blocks = _one_sided_count(spec.r, spec.s, spec.c)
    failure_blocks = _one_sided_count(spec.s, spec.r, spec.c)
    n = spec.t * max(success_blocks, failure_blocks)
    mode = _evaluation_mode(n)
    achieved = verify_bound(spec, n, mode)
    logger.debug(
        "Bernoulli bound r=%d s=%d c=%d: N1=%d N2=%d n=%d",
        spec.r, spec.s, spec.c, success_blocks, failure_blocks, n,
    )

    return SampleSizeResult(
        n=n,
        achieved_prob=achieved,
        method=BERNOULLI_BOUND,
        target=spec.target,
        exact=mode.is_exact,
        success_side_n=spec.t * success_blocks,
        failure_side_n=spec.t * failure_blocks,
    )


def _screen_prob(model: BinomialModel, eps: Fraction) -> float:
    """Fast float deviation probability from the library binomial CDF"""
    k_lo, k_hi = band_limits(model.n, model.theta, eps)
    if k_lo > k_hi:
        return 0.0
    p = float(model.theta)
    below = float(bdtr(k_lo - 1, model.n, p)) if k_lo > 0 else 0.0
    return _clamp(float(bdtr(k_hi, model.n, p)) - below)


class _CrossingProbe:
    """
    Evaluates "deviation_prob(n) >= target" with float screening.

    Every n is first screened with the binomial CDF from scipy. Survivors up
    to the exact limit are confirmed in exact arithmetic; beyond it the
    accurate float sum must clear the target by FLOAT_CUSHION.
    """

    def __init__(self, theta: Fraction, eps: Fraction, target: Fraction):
        self.theta = theta
        self.eps = eps
        self.target = target
        self.target_float = float(target)
        self.exact_limit = get_exact_limit()
        self.float_mode = NumericMode.float(53)
        self.best: Tuple[int, float] = (0, 0.0)
        self._cache: Dict[int, Tuple[bool, Union[Fraction, float], bool]] = {}

    def __call__(self, n: int) -> Tuple[bool, Union[Fraction, float], bool]:
        if n in self._cache:
            return self._cache[n]

        model = BinomialModel(n=n, theta=self.theta)
        screened = _screen_prob(model, self.eps)
        if screened > self.best[1]:
            self.best = (n, screened)

        if screened < self.target_float - SCREEN_MARGIN:
            outcome = (False, screened, n <= self.exact_limit)
        elif n <= self.exact_limit:
            exact = deviation_prob(model, self.eps, NumericMode.exact())
            logger.debug("Exact confirmation at n=%d: %.15g", n, float(exact))
            outcome = (exact >= self.target, exact, True)
        else:
            approx = _clamp(deviation_prob(model, self.eps, self.float_mode))
            outcome = (approx - FLOAT_CUSHION >= self.target_float, approx, False)

        self._cache[n] = outcome
        return outcome


def exact_search_n(theta, eps, target, n_max: int = 10**6) -> SampleSizeResult:
    """
    Smallest n <= n_max whose deviation probability reaches the target.

    The deviation probability is not monotone in n, so the result is the
    first crossing: doubling brackets it, then every n up to the bracket's
    upper end is scanned in order.

    Args:
        theta: Success probability (Fraction or "a/b")
        eps: Band half-width, positive
        target: Probability in (0, 1)
        n_max: Largest n considered

    Returns:
        SampleSizeResult with the first crossing and a falls_back flag
    """
    theta = literal_rational(theta, name="theta")
    eps = literal_rational(eps, name="eps")
    target = probability_as_rational(target)
    if not 0 <= theta <= 1:
        raise DomainError(f"theta must lie in [0, 1], got {theta}")
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    if not 0 < target < 1:
        raise DomainError(f"target must lie in (0, 1), got {target}")
    if n_max < 1:
        raise DomainError(f"n_max must be at least 1, got {n_max}")

    probe = _CrossingProbe(theta, eps, target)

    upper = None
    checkpoint = 1
    while True:
        checkpoint = min(checkpoint, n_max)
        if probe(checkpoint)[0]:
            upper = checkpoint
            break
        if checkpoint == n_max:
            break
        checkpoint *= 2
    logger.debug("Doubling bracket for theta=%s eps=%s: upper=%s", theta, eps, upper)

    scan_end = upper if upper is not None else n_max
    for n in range(1, scan_end + 1):
        met, prob, was_exact = probe(n)
        if met:
            window_end = min(n + eps.denominator * FALLBACK_WINDOW, n_max)
            falls_back = any(not probe(m)[0] for m in range(n + 1, window_end + 1))
            return SampleSizeResult(
                n=n,
                achieved_prob=prob,
                method=EXACT_SEARCH,
                target=target,
                exact=was_exact,
                falls_back=falls_back,
            )

    best_n, best_prob = probe.best
    raise NotFoundError(
        f"No n <= {n_max} reaches {target}; best was n={best_n} with {best_prob:.6g}",
        best_n=best_n,
        best_prob=best_prob,
    )


def hoeffding_n(eps, target) -> int:
    """
    Sample size from Hoeffding's inequality (modern, non-historical comparison).

    n = ceil(ln(2 / (1 - target)) / (2 eps^2))
    """
    eps = literal_rational(eps, name="eps")
    target = probability_as_rational(target)
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    if not 0 < target < 1:
        raise DomainError(f"target must lie in (0, 1), got {target}")
    return math.ceil(math.log(2 / float(1 - target)) / (2 * float(eps) ** 2))
