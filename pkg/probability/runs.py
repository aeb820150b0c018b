"""
The problem of runs: probability of at least r consecutive successes in n trials.

The recurrence tracks the current success streak 0..r-1 for sequences that
have not yet produced a run; mass reaching streak r is absorbed.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from models.binomial import NumericMode
from models.runs import RunQuery
from probability.errors import ResourceError
from probability.numeric import Number, to_number, working_precision

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 22


def _step(states: List[Number], absorbed: Number, p: Number, q: Number) -> Tuple[List[Number], Number]:
    r = len(states)
    new_states = [q * sum(states)] + [p * states[i] for i in range(r - 1)]
    return new_states, absorbed + p * states[r - 1]


def run_state_trace(query: RunQuery, mode: Optional[NumericMode] = None) -> List[Tuple[List[Number], Number]]:
    """
    State vector and absorbed mass after each trial.

    Returns:
        List of n + 1 pairs; entry i holds the no-run probabilities by streak
        length and the probability that a run has occurred after i trials
    """
    mode = mode or NumericMode.exact()
    with working_precision(mode):
        p = to_number(query.theta, mode)
        q = to_number(1 - query.theta, mode)
        zero = to_number(Fraction(0), mode)
        states = [to_number(Fraction(1), mode)] + [zero] * (query.r - 1)
        absorbed = zero
        trace = [(list(states), absorbed)]
        for _ in range(query.n):
            states, absorbed = _step(states, absorbed, p, q)
            trace.append((list(states), absorbed))
    return trace


def run_prob(query: RunQuery, mode: Optional[NumericMode] = None) -> Number:
    """
    Probability that some r consecutive trials are all successes.

    Args:
        query: Trials, run length and success probability
        mode: Exact (default) or Float

    Returns:
        Fraction in Exact mode, float or mpmath number in Float mode
    """
    mode = mode or NumericMode.exact()
    with working_precision(mode):
        p = to_number(query.theta, mode)
        q = to_number(1 - query.theta, mode)
        zero = to_number(Fraction(0), mode)
        states = [to_number(Fraction(1), mode)] + [zero] * (query.r - 1)
        absorbed = zero
        for _ in range(query.n):
            states, absorbed = _step(states, absorbed, p, q)
    logger.debug("run_prob n=%d r=%d theta=%s", query.n, query.r, query.theta)
    return absorbed


@lru_cache(maxsize=512)
def _run_counts(n: int, r: int) -> Tuple[int, ...]:
    """Number of length-n binary sequences with k ones that contain a run of r ones, by k"""
    counts = [0] * (n + 1)
    for bits in range(1 << n):
        window = bits
        for _ in range(r - 1):
            window &= window >> 1
        if window:
            counts[bin(bits).count("1")] += 1
    return tuple(counts)


def run_prob_bruteforce(query: RunQuery) -> Fraction:
    """
    Run probability by enumerating all 2^n outcome sequences.

    Args:
        query: Trials (n <= 22), run length and success probability

    Returns:
        Exact probability as a Fraction
    """
    if query.n > BRUTE_FORCE_LIMIT:
        raise ResourceError(f"enumeration limited to n <= {BRUTE_FORCE_LIMIT}, got n={query.n}")
    theta = query.theta
    counts = _run_counts(query.n, query.r)
    return sum(
        (count * theta ** k * (1 - theta) ** (query.n - k) for k, count in enumerate(counts) if count),
        Fraction(0),
    )
