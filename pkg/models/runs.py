"""
Run query model: at least r consecutive successes somewhere in n trials.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from probability.errors import DomainError
from probability.numeric import as_rational


@dataclass(frozen=True)
class RunQuery:
    """n trials, run length r, success probability theta"""
    n: int
    r: int
    theta: Fraction = Fraction(1, 2)

    def __post_init__(self):
        for name in ('n', 'r'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"{name} must be an integer, got {value!r}")
        if not 1 <= self.r <= self.n:
            raise DomainError(f"need 1 <= r <= n, got r={self.r}, n={self.n}")
        theta = as_rational(self.theta, name="theta")
        if not 0 <= theta <= 1:
            raise DomainError(f"theta must lie in [0, 1], got {theta}")
        object.__setattr__(self, 'theta', theta)

    def to_dict(self) -> Dict:
        return {'n': self.n, 'r': self.r, 'theta': str(self.theta)}

    @staticmethod
    def from_dict(data: Dict) -> 'RunQuery':
        return RunQuery(n=int(data['n']), r=int(data['r']), theta=as_rational(data['theta'], name="theta"))
