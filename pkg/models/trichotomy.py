"""
Scenario and report models for the three-way comparison of Bernoulli's law,
its inverse use and Bayes's theorem.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Union

from models.bayes import UNIFORM_PRIOR, BetaParams, ObservedCounts
from probability.errors import DomainError
from probability.numeric import literal_rational, probability_as_rational

Probability = Union[Fraction, float]


def _prob_out(value: Optional[Probability]):
    if value is None or isinstance(value, float):
        return value
    return str(value)


def _prob_in(value) -> Optional[Probability]:
    if value is None or isinstance(value, float):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class Scenario:
    """
    One comparison case.

    theta_true is only set for known-theta scenarios (the direct bullet).
    """
    counts: ObservedCounts = field(default_factory=ObservedCounts)
    eps: Fraction = Fraction(1, 50)
    target: Fraction = Fraction(999, 1000)
    prior: BetaParams = UNIFORM_PRIOR
    theta_true: Optional[Fraction] = None

    def __post_init__(self):
        eps = literal_rational(self.eps, name="eps")
        if eps <= 0:
            raise DomainError(f"eps must be positive, got {eps}")
        target = probability_as_rational(self.target)
        if not 0 < target < 1:
            raise DomainError(f"target must lie in (0, 1), got {target}")
        object.__setattr__(self, 'eps', eps)
        object.__setattr__(self, 'target', target)
        if self.theta_true is not None:
            theta = literal_rational(self.theta_true, name="theta_true")
            if not 0 <= theta <= 1:
                raise DomainError(f"theta_true must lie in [0, 1], got {theta}")
            object.__setattr__(self, 'theta_true', theta)

    def to_dict(self) -> Dict:
        return {
            'theta_true': None if self.theta_true is None else str(self.theta_true),
            'counts': self.counts.to_dict(),
            'eps': str(self.eps),
            'target': str(self.target),
            'prior': self.prior.to_dict(),
        }

    @staticmethod
    def from_dict(data: Dict) -> 'Scenario':
        return Scenario(
            theta_true=data.get('theta_true'),
            counts=ObservedCounts.from_dict(data.get('counts', {})),
            eps=data['eps'],
            target=data['target'],
            prior=BetaParams.from_dict(data.get('prior', {})),
        )


@dataclass
class DirectAnswer:
    """Bernoulli's law: for known theta, the n reaching the target"""
    n: int
    achieved_prob: Probability

    def to_dict(self) -> Dict:
        return {'n': self.n, 'achieved_prob': _prob_out(self.achieved_prob)}

    @staticmethod
    def from_dict(data: Dict) -> 'DirectAnswer':
        return DirectAnswer(n=int(data['n']), achieved_prob=_prob_in(data['achieved_prob']))


@dataclass
class InverseUseAnswer:
    """Inverse use of Bernoulli's law: a point estimate and a band, no probability"""
    estimate: Fraction
    band_lo: Fraction
    band_hi: Fraction
    statement: str = "x̄ ≈ θ for large n"

    def to_dict(self) -> Dict:
        return {
            'estimate': str(self.estimate),
            'band_lo': str(self.band_lo),
            'band_hi': str(self.band_hi),
            'statement': self.statement,
        }

    @staticmethod
    def from_dict(data: Dict) -> 'InverseUseAnswer':
        return InverseUseAnswer(
            estimate=Fraction(data['estimate']),
            band_lo=Fraction(data['band_lo']),
            band_hi=Fraction(data['band_hi']),
            statement=data.get('statement', "x̄ ≈ θ for large n"),
        )


@dataclass
class BayesAnswer:
    """Bayes's theorem: posterior shapes and the posterior probability of the band"""
    posterior: BetaParams
    band_lo: Optional[Fraction] = None
    band_hi: Optional[Fraction] = None
    interval_prob: Optional[Probability] = None

    @property
    def prior_only(self) -> bool:
        return self.interval_prob is None

    def to_dict(self) -> Dict:
        return {
            'posterior': self.posterior.to_dict(),
            'band_lo': None if self.band_lo is None else str(self.band_lo),
            'band_hi': None if self.band_hi is None else str(self.band_hi),
            'interval_prob': _prob_out(self.interval_prob),
        }

    @staticmethod
    def from_dict(data: Dict) -> 'BayesAnswer':
        return BayesAnswer(
            posterior=BetaParams.from_dict(data['posterior']),
            band_lo=None if data.get('band_lo') is None else Fraction(data['band_lo']),
            band_hi=None if data.get('band_hi') is None else Fraction(data['band_hi']),
            interval_prob=_prob_in(data.get('interval_prob')),
        )


@dataclass
class TrichotomyReport:
    """
    Side-by-side answers of the three procedures for one scenario.

    Absent answers are None; notes name the bullet each field comes from.
    """
    scenario: Scenario
    direct_answer: Optional[DirectAnswer] = None
    inverse_use_answer: Optional[InverseUseAnswer] = None
    bayes_answer: Optional[BayesAnswer] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            'scenario': self.scenario.to_dict(),
            'direct_answer': self.direct_answer.to_dict() if self.direct_answer else None,
            'inverse_use_answer': self.inverse_use_answer.to_dict() if self.inverse_use_answer else None,
            'bayes_answer': self.bayes_answer.to_dict() if self.bayes_answer else None,
            'notes': list(self.notes),
        }

    @staticmethod
    def from_dict(data: Dict) -> 'TrichotomyReport':
        return TrichotomyReport(
            scenario=Scenario.from_dict(data['scenario']),
            direct_answer=DirectAnswer.from_dict(data['direct_answer']) if data.get('direct_answer') else None,
            inverse_use_answer=(
                InverseUseAnswer.from_dict(data['inverse_use_answer'])
                if data.get('inverse_use_answer') else None
            ),
            bayes_answer=BayesAnswer.from_dict(data['bayes_answer']) if data.get('bayes_answer') else None,
            notes=list(data.get('notes', [])),
        )
