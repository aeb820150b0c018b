"""
Binomial data models.

BinomialModel parameterizes every direct computation; NumericMode selects
exact rational or floating-point evaluation.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from probability.errors import DomainError
from probability.numeric import as_rational

EXACT = "exact"
FLOAT = "float"


@dataclass(frozen=True)
class NumericMode:
    """
    Evaluation mode for a computation.

    Exact mode produces Fraction results; Float mode produces binary floating
    results at float_precision bits (53 is plain binary64).
    """
    tag: str = FLOAT
    float_precision: int = 53

    def __post_init__(self):
        if self.tag not in (EXACT, FLOAT):
            raise DomainError(f"Mode must be one of: {EXACT}, {FLOAT}")
        if self.float_precision < 2:
            raise DomainError("float_precision must be at least 2 bits")

    @property
    def is_exact(self) -> bool:
        return self.tag == EXACT

    @classmethod
    def exact(cls) -> 'NumericMode':
        return cls(tag=EXACT)

    @classmethod
    def float(cls, precision: Optional[int] = None) -> 'NumericMode':
        """Float mode at the given precision, or the configured default"""
        if precision is None:
            from storage.settings import get_float_precision
            precision = get_float_precision()
        return cls(tag=FLOAT, float_precision=precision)

    def to_dict(self) -> Dict:
        if self.is_exact:
            return {'tag': self.tag}
        return {'tag': self.tag, 'float_precision': self.float_precision}

    @classmethod
    def from_dict(cls, data: Dict) -> 'NumericMode':
        return cls(**data)


@dataclass(frozen=True)
class BinomialModel:
    """
    n independent trials with common success probability theta.

    theta is stored as a Fraction; a float theta is converted exactly.
    """
    n: int
    theta: Fraction = field(default=Fraction(1, 2))

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise DomainError(f"n must be an integer, got {self.n!r}")
        if self.n < 1:
            raise DomainError(f"n must be at least 1, got {self.n}")
        theta = as_rational(self.theta, name="theta")
        if not 0 <= theta <= 1:
            raise DomainError(f"theta must lie in [0, 1], got {theta}")
        object.__setattr__(self, 'theta', theta)

    @property
    def mean(self) -> Fraction:
        return self.n * self.theta

    @property
    def variance(self) -> Fraction:
        return self.n * self.theta * (1 - self.theta)

    def mirrored(self) -> 'BinomialModel':
        """Same trials counted as failures: theta -> 1 - theta"""
        return BinomialModel(n=self.n, theta=1 - self.theta)

    def to_dict(self) -> Dict:
        return {'n': self.n, 'theta': str(self.theta)}

    @staticmethod
    def from_dict(data: Dict) -> 'BinomialModel':
        return BinomialModel(n=int(data['n']), theta=as_rational(data['theta'], name="theta"))


def create_model(n: int, theta) -> BinomialModel:
    """
    Create a binomial model from loosely typed inputs.

    Args:
        n: Number of trials
        theta: Success probability as Fraction, int, "a/b" string or float

    Returns:
        BinomialModel instance
    """
    return BinomialModel(n=int(n), theta=as_rational(theta, name="theta"))
