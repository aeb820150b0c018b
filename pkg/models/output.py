"""
Output options for rendered results.
"""

from dataclasses import dataclass, asdict
from typing import Dict

from probability.errors import DomainError

TABLE = "table"
CSV = "csv"
JSON = "json"
FORMATS = (TABLE, CSV, JSON)


@dataclass(frozen=True)
class OutputSpec:
    """
    How results are rendered.

    precision is the number of significant decimal digits for floats;
    exact_flag renders rationals as "num/den" in every format.
    """
    format: str = TABLE
    precision: int = 12
    exact_flag: bool = False

    def __post_init__(self):
        if self.format not in FORMATS:
            raise DomainError(f"format must be one of: {', '.join(FORMATS)}")
        if not 1 <= self.precision <= 30:
            raise DomainError(f"precision must lie in [1, 30], got {self.precision}")

    @property
    def machine_readable(self) -> bool:
        return self.format in (CSV, JSON)

    def to_dict(self) -> Dict:
        return asdict(self)

    @staticmethod
    def from_dict(data: Dict) -> 'OutputSpec':
        return OutputSpec(**data)
