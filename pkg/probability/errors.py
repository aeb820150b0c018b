"""
Exception hierarchy shared by the probability kernels and the front ends.
"""

from typing import Optional


class InversioError(Exception):
    """Base class for every error raised by the laboratory"""


class DomainError(InversioError, ValueError):
    """An argument lies outside the domain of the operation"""


class UnsupportedSpecError(DomainError):
    """The inputs are valid but the requested method cannot handle them"""


class NothingComputableError(DomainError):
    """A scenario carries neither a known theta nor any observations"""


class NotFoundError(InversioError, LookupError):
    """
    A search exhausted its range without meeting the target.

    Carries the best (n, probability) pair seen so callers can report it.
    """

    def __init__(self, message: str, best_n: int = 0, best_prob: float = 0.0):
        super().__init__(message)
        self.best_n = best_n
        self.best_prob = best_prob


class NumericalError(InversioError, ArithmeticError):
    """An iterative routine failed to converge"""

    def __init__(self, message: str, partial_value: Optional[float] = None, iterations: int = 0):
        super().__init__(message)
        self.partial_value = partial_value
        self.iterations = iterations


class ResourceError(InversioError, RuntimeError):
    """The request would exceed the enumeration budget"""
