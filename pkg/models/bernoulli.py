"""
Models for Bernoulli's direct problem: moral certainty specs and sample sizes.
"""

from dataclasses import dataclass, asdict
from fractions import Fraction
from typing import Dict, Optional, Union

from probability.errors import DomainError

BERNOULLI_BOUND = "bernoulli_bound"
EXACT_SEARCH = "exact_search"


@dataclass(frozen=True)
class MoralCertaintySpec:
    """
    Bernoulli's setup: theta = r/t, eps = 1/t, odds c : 1.

    The target probability is c/(c + 1).
    """
    r: int
    s: int
    c: int

    def __post_init__(self):
        for name in ('r', 's', 'c'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"{name} must be an integer, got {value!r}")
        if self.r < 1 or self.s < 1:
            raise DomainError(f"r and s must be at least 1, got r={self.r}, s={self.s}")
        if self.c < 1:
            raise DomainError(f"odds c must be at least 1, got {self.c}")

    @property
    def t(self) -> int:
        return self.r + self.s

    @property
    def theta(self) -> Fraction:
        return Fraction(self.r, self.t)

    @property
    def eps(self) -> Fraction:
        return Fraction(1, self.t)

    @property
    def target(self) -> Fraction:
        return Fraction(self.c, self.c + 1)

    def to_dict(self) -> Dict:
        return {'r': self.r, 's': self.s, 't': self.t, 'c': self.c}

    @staticmethod
    def from_dict(data: Dict) -> 'MoralCertaintySpec':
        spec = MoralCertaintySpec(r=int(data['r']), s=int(data['s']), c=int(data['c']))
        if 't' in data and int(data['t']) != spec.t:
            raise DomainError(f"t must equal r + s = {spec.t}, got {data['t']}")
        return spec


def create_spec(theta: Fraction, eps: Fraction, odds: int) -> MoralCertaintySpec:
    """
    Build a moral certainty spec from theta and eps given as fractions.

    Args:
        theta: Success probability r/t
        eps: Band half-width, must equal 1/t for the same t
        odds: Moral-certainty odds c

    Returns:
        MoralCertaintySpec instance
    """
    theta = Fraction(theta)
    eps = Fraction(eps)
    if eps <= 0 or eps.numerator != 1:
        raise DomainError(f"eps must be of the form 1/t, got {eps}")
    t = eps.denominator
    r = theta * t
    if r.denominator != 1:
        raise DomainError(f"theta={theta} is not a multiple of eps={eps}")
    return MoralCertaintySpec(r=int(r), s=t - int(r), c=odds)


@dataclass
class SampleSizeResult:
    """
    A sample size together with the probability achieved there.

    For exact searches falls_back records whether some larger n shortly after
    the first crossing drops below the target again.
    """
    n: int
    achieved_prob: Union[Fraction, float]
    method: str
    target: Optional[Fraction] = None
    exact: bool = False
    falls_back: Optional[bool] = None
    success_side_n: Optional[int] = None
    failure_side_n: Optional[int] = None

    def __post_init__(self):
        if self.method not in (BERNOULLI_BOUND, EXACT_SEARCH):
            raise DomainError(f"method must be one of: {BERNOULLI_BOUND}, {EXACT_SEARCH}")
        if not 0 <= self.achieved_prob <= 1:
            raise DomainError(f"achieved_prob must lie in [0, 1], got {self.achieved_prob}")

    def to_dict(self) -> Dict:
        return asdict(self)

    @staticmethod
    def from_dict(data: Dict) -> 'SampleSizeResult':
        data = dict(data)
        for key in ('achieved_prob', 'target'):
            if isinstance(data.get(key), str):
                data[key] = Fraction(data[key])
        return SampleSizeResult(**data)
