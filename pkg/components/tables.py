"""
pandas tables for the web pages.

Each builder returns a DataFrame of plain floats and ints ready for
st.dataframe; exact rationals are kept in a separate string column where
they matter.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional

import pandas as pd

from components.rendering import rational_string
from models.approximation import SeriesExpansion
from models.binomial import BinomialModel, NumericMode
from models.runs import RunQuery
from models.trichotomy import TrichotomyReport
from probability.demoivre_approx import normal_deviation_approx
from probability.exact_binomial import band_limits, deviation_prob, pmf_table
from probability.runs import run_state_trace


def _display(value):
    if isinstance(value, Fraction):
        return float(value)
    return value


def pmf_frame(model: BinomialModel, eps: Optional[Fraction] = None) -> pd.DataFrame:
    """pmf(0..n) with an in_band flag for |k/n - theta| < eps"""
    probabilities = pmf_table(model, NumericMode.float(53))
    frame = pd.DataFrame({'k': range(model.n + 1), 'pmf': probabilities})
    if eps is not None:
        k_lo, k_hi = band_limits(model.n, model.theta, eps)
        frame['in_band'] = frame['k'].between(k_lo, k_hi)
    return frame


def deviation_frame(theta: Fraction, eps: Fraction, trial_counts: Iterable[int], exact: bool = False) -> pd.DataFrame:
    mode = NumericMode.exact() if exact else NumericMode.float(53)
    rows = []
    for n in trial_counts:
        model = BinomialModel(n=n, theta=theta)
        k_lo, k_hi = band_limits(n, model.theta, eps)
        prob = deviation_prob(model, eps, mode)
        row = {'n': n, 'k_lo': k_lo, 'k_hi': k_hi, 'prob': _display(prob)}
        if exact:
            row['prob_exact'] = rational_string(prob)
        rows.append(row)
    return pd.DataFrame(rows)


def comparison_frame(
    theta: Fraction,
    eps: Fraction,
    trial_counts: Iterable[int],
    continuity_correction: bool = True,
) -> pd.DataFrame:
    rows = []
    for n in trial_counts:
        comparison = normal_deviation_approx(BinomialModel(n=n, theta=theta), eps, continuity_correction)
        rows.append({
            'n': n,
            'binomial': comparison.exact,
            'normal': comparison.approx,
            'abs_error': comparison.abs_error,
            'rel_error': comparison.rel_error,
        })
    return pd.DataFrame(rows)


def series_frame(expansion: SeriesExpansion) -> pd.DataFrame:
    return pd.DataFrame({
        'k': range(1, expansion.k_max + 1),
        'term': expansion.float_terms(),
        'abs_term': [abs(term) for term in expansion.float_terms()],
        'smallest': [k == expansion.min_abs_index for k in range(1, expansion.k_max + 1)],
    })


def laplace_frame(rows: List[Dict]) -> pd.DataFrame:
    """Rows from laplace_convergence: total, estimate, band_prob"""
    return pd.DataFrame([{key: _display(value) for key, value in row.items()} for row in rows])


def runs_frame(query: RunQuery) -> pd.DataFrame:
    """Probability that a run of length r has appeared after each trial 0..n"""
    trace = run_state_trace(query, NumericMode.float(53))
    return pd.DataFrame({
        'trials': range(len(trace)),
        'run_prob': [absorbed for _, absorbed in trace],
        'no_run_mass': [sum(states) for states, _ in trace],
    })


def trichotomy_frame(report: TrichotomyReport) -> pd.DataFrame:
    """One row per answer; absent answers are omitted"""
    rows = []
    if report.direct_answer:
        rows.append({
            'procedure': "Bernoulli's law (θ known)",
            'answer': f"n = {report.direct_answer.n}",
            'probability': _display(report.direct_answer.achieved_prob),
        })
    if report.inverse_use_answer:
        inverse = report.inverse_use_answer
        rows.append({
            'procedure': "Inverse use of Bernoulli's law",
            'answer': f"θ ≈ {float(inverse.estimate):.4f}, band [{float(inverse.band_lo):.4f}, {float(inverse.band_hi):.4f}]",
            'probability': None,
        })
    if report.bayes_answer:
        bayes = report.bayes_answer
        answer = f"Beta({bayes.posterior.a}, {bayes.posterior.b})"
        if not bayes.prior_only:
            answer += f" on [{float(bayes.band_lo):.4f}, {float(bayes.band_hi):.4f}]"
        rows.append({
            'procedure': "Bayes's theorem (prior on θ)",
            'answer': answer,
            'probability': _display(bayes.interval_prob),
        })
    return pd.DataFrame(rows, columns=['procedure', 'answer', 'probability'])
