"""
Models for De Moivre's approximations and the Stirling series.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from probability.errors import DomainError


@dataclass
class SeriesExpansion:
    """
    Terms t_k = B_2k / (2k (2k - 1) n^(2k - 1)) of the log-factorial correction series.

    Terms are kept as exact fractions. min_abs_index and diverges_after are
    1-based term indices; diverges_after is None when the magnitudes never
    turn upward within the computed terms.
    """
    n: int
    terms: List[Fraction] = field(default_factory=list)
    min_abs_index: int = 1
    diverges_after: Optional[int] = None

    @property
    def k_max(self) -> int:
        return len(self.terms)

    def float_terms(self) -> List[float]:
        return [float(term) for term in self.terms]

    def magnitude(self, k: int) -> Fraction:
        """|t_k| for a 1-based index"""
        return abs(self.terms[k - 1])

    def to_dict(self) -> Dict:
        return {
            'n': self.n,
            'terms': [str(term) for term in self.terms],
            'min_abs_index': self.min_abs_index,
            'diverges_after': self.diverges_after,
        }

    @staticmethod
    def from_dict(data: Dict) -> 'SeriesExpansion':
        return SeriesExpansion(
            n=int(data['n']),
            terms=[Fraction(term) for term in data['terms']],
            min_abs_index=int(data['min_abs_index']),
            diverges_after=data.get('diverges_after'),
        )


@dataclass
class ApproxComparison:
    """An exact probability next to its approximation"""
    exact: float
    approx: float
    abs_error: float = 0.0
    rel_error: float = 0.0
    exact_rational: Optional[Fraction] = None

    def __post_init__(self):
        if self.abs_error < 0 or self.rel_error < 0:
            raise DomainError("errors must be non-negative")

    def to_dict(self) -> Dict:
        return {
            'exact': self.exact,
            'approx': self.approx,
            'abs_error': self.abs_error,
            'rel_error': self.rel_error,
            'exact_rational': None if self.exact_rational is None else str(self.exact_rational),
        }

    @staticmethod
    def from_dict(data: Dict) -> 'ApproxComparison':
        data = dict(data)
        if data.get('exact_rational') is not None:
            data['exact_rational'] = Fraction(data['exact_rational'])
        return ApproxComparison(**data)


def create_comparison(exact, approx: float, exact_rational: Optional[Fraction] = None) -> ApproxComparison:
    """
    Pack an exact value and its approximation with both error measures.

    Args:
        exact: Reference probability (any real number type)
        approx: Approximation
        exact_rational: The exact value as a Fraction, when known

    Returns:
        ApproxComparison instance
    """
    exact = float(exact)
    approx = float(approx)
    abs_error = abs(exact - approx)
    rel_error = abs_error / abs(exact) if exact != 0 else (0.0 if abs_error == 0 else float('inf'))
    return ApproxComparison(
        exact=exact,
        approx=approx,
        abs_error=abs_error,
        rel_error=rel_error,
        exact_rational=exact_rational,
    )
