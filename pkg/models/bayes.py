"""
Models for Bayes's inverse problem: Beta priors, observed counts and interval queries.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Union

from probability.errors import DomainError
from probability.numeric import as_rational

Shape = Union[int, float, Fraction]


def _coerce_shape(value, name: str) -> Shape:
    if isinstance(value, bool):
        raise DomainError(f"{name} must be a number, got bool")
    if isinstance(value, str):
        value = as_rational(value, name=name)
    if isinstance(value, Fraction) and value.denominator == 1:
        value = int(value)
    if not isinstance(value, (int, float, Fraction)):
        raise DomainError(f"{name} must be a number, got {type(value).__name__}")
    if not value > 0:
        raise DomainError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class BetaParams:
    """
    Shapes (a, b) of a Beta prior or posterior.

    Beta(1, 1) is the uniform prior, the default reading of Bayes's postulate.
    """
    a: Shape = 1
    b: Shape = 1

    def __post_init__(self):
        object.__setattr__(self, 'a', _coerce_shape(self.a, 'a'))
        object.__setattr__(self, 'b', _coerce_shape(self.b, 'b'))

    @property
    def is_integral(self) -> bool:
        return isinstance(self.a, int) and isinstance(self.b, int)

    def to_dict(self) -> Dict:
        return {'a': _shape_out(self.a), 'b': _shape_out(self.b)}

    @staticmethod
    def from_dict(data: Dict) -> 'BetaParams':
        return BetaParams(a=data.get('a', 1), b=data.get('b', 1))


def _shape_out(value: Shape):
    return str(value) if isinstance(value, Fraction) else value


UNIFORM_PRIOR = BetaParams(1, 1)


@dataclass(frozen=True)
class ObservedCounts:
    """An event happened p times and failed q times"""
    p: int = 0
    q: int = 0

    def __post_init__(self):
        for name in ('p', 'q'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise DomainError(f"{name} must be an integer, got {value!r}")
            if value < 0:
                raise DomainError(f"{name} must be non-negative, got {value}")

    @property
    def total(self) -> int:
        return self.p + self.q

    @property
    def is_empty(self) -> bool:
        return self.total == 0

    @property
    def ratio(self) -> Fraction:
        """Observed relative frequency p / (p + q)"""
        if self.is_empty:
            raise DomainError("no observations: the ratio p/(p+q) is undefined")
        return Fraction(self.p, self.total)

    def __add__(self, other: 'ObservedCounts') -> 'ObservedCounts':
        return ObservedCounts(self.p + other.p, self.q + other.q)

    def swapped(self) -> 'ObservedCounts':
        return ObservedCounts(self.q, self.p)

    def to_dict(self) -> Dict:
        return {'p': self.p, 'q': self.q}

    @staticmethod
    def from_dict(data: Dict) -> 'ObservedCounts':
        return ObservedCounts(p=int(data.get('p', 0)), q=int(data.get('q', 0)))


@dataclass(frozen=True)
class IntervalQuery:
    """Limits l1 <= l2 in [0, 1] for P(l1 < theta < l2 | data)"""
    l1: Fraction = Fraction(0)
    l2: Fraction = Fraction(1)

    def __post_init__(self):
        l1 = as_rational(self.l1, name="l1")
        l2 = as_rational(self.l2, name="l2")
        if not (0 <= l1 <= 1 and 0 <= l2 <= 1):
            raise DomainError(f"limits must lie in [0, 1], got [{l1}, {l2}]")
        if l1 > l2:
            raise DomainError(f"l1={l1} exceeds l2={l2}")
        object.__setattr__(self, 'l1', l1)
        object.__setattr__(self, 'l2', l2)

    def mirrored(self) -> 'IntervalQuery':
        """[l1, l2] -> [1 - l2, 1 - l1]"""
        return IntervalQuery(1 - self.l2, 1 - self.l1)

    def to_dict(self) -> Dict:
        return {'l1': str(self.l1), 'l2': str(self.l2)}

    @staticmethod
    def from_dict(data: Dict) -> 'IntervalQuery':
        return IntervalQuery(l1=data['l1'], l2=data['l2'])
