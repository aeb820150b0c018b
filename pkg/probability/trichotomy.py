"""
Bernoulli's law, its inverse use and Bayes's theorem, side by side.

The three answers are reported without ranking. The inverse-use answer
never carries a probability: at finite n it is only the statement that the
observed frequency approximates the unknown probability.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List

from models.bayes import UNIFORM_PRIOR, BetaParams
from models.trichotomy import (
    BayesAnswer,
    DirectAnswer,
    InverseUseAnswer,
    Scenario,
    TrichotomyReport,
)
from probability.bayes_inverse import hartley_deviation, laplace_sequence, posterior
from probability.bernoulli_direct import exact_search_n
from probability.errors import NothingComputableError

logger = logging.getLogger(__name__)

DIRECT_NOTE = "direct_answer: Bernoulli's law, for given θ and ε find n with P(θ−ε < X̄ₙ < θ+ε | θ) near 1"
INVERSE_NOTE = "inverse_use_answer: inverse use of Bernoulli's law, θ unknown, x̄ₙ ≈ θ when n is large"
BAYES_NOTE = "bayes_answer: Bayes's theorem, θ unknown with a prior, P(ℓ₁ < θ < ℓ₂ | x̄ₙ) over the same band"
NO_THETA_NOTE = "direct_answer: unavailable, θ is unknown"
NO_DATA_NOTE = "inverse_use_answer: unavailable, no observations"
PRIOR_ONLY_NOTE = "bayes_answer: prior only, no observations to update on"


def _clip(value: Fraction) -> Fraction:
    return min(max(value, Fraction(0)), Fraction(1))


def run_trichotomy(scenario: Scenario, n_max: int = 10**6) -> TrichotomyReport:
    """
    Evaluate the three procedures on one scenario.

    Args:
        scenario: Known theta (optional), observed counts, band, target and prior
        n_max: Search limit for the direct answer

    Returns:
        TrichotomyReport; the Bayes band equals the inverse-use band
    """
    counts = scenario.counts
    if counts.is_empty and scenario.theta_true is None:
        raise NothingComputableError("scenario has no observations and no known theta")

    report = TrichotomyReport(scenario=scenario)

    if scenario.theta_true is not None:
        result = exact_search_n(scenario.theta_true, scenario.eps, scenario.target, n_max)
        report.direct_answer = DirectAnswer(n=result.n, achieved_prob=result.achieved_prob)
        report.notes.append(DIRECT_NOTE)
    else:
        report.notes.append(NO_THETA_NOTE)

    if counts.is_empty:
        report.bayes_answer = BayesAnswer(posterior=scenario.prior)
        report.notes.extend([NO_DATA_NOTE, PRIOR_ONLY_NOTE])
        return report

    estimate = counts.ratio
    band_lo = _clip(estimate - scenario.eps)
    band_hi = _clip(estimate + scenario.eps)
    report.inverse_use_answer = InverseUseAnswer(estimate=estimate, band_lo=band_lo, band_hi=band_hi)
    report.notes.append(INVERSE_NOTE)

    report.bayes_answer = BayesAnswer(
        posterior=posterior(scenario.prior, counts),
        band_lo=band_lo,
        band_hi=band_hi,
        interval_prob=hartley_deviation(scenario.prior, counts, scenario.eps),
    )
    report.notes.append(BAYES_NOTE)
    logger.info("Trichotomy for counts=%s eps=%s computed", counts, scenario.eps)
    return report


def laplace_convergence(
    ratio_p: int,
    ratio_q: int,
    eps,
    totals: Iterable[int],
    prior: BetaParams = UNIFORM_PRIOR,
) -> List[Dict]:
    """
    Bayes band probability as the sample grows at a fixed ratio p:q.

    The observed frequency equals p/(p+q) at every size by construction, so
    the inverse-use statement holds throughout while the posterior mass of
    the band tends to one.
    """
    estimate = Fraction(ratio_p, ratio_p + ratio_q)
    return [
        {'total': total, 'estimate': estimate, 'band_prob': prob}
        for total, prob in laplace_sequence(ratio_p, ratio_q, eps, list(totals), prior)
    ]
