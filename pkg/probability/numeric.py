"""
Numeric plumbing: rational parsing and Exact/Float mode conversions.

Exact mode works on fractions.Fraction throughout. Float mode at 53 bits uses
plain binary64 floats; higher precisions go through mpmath.
"""

import math
import re
from contextlib import contextmanager
from fractions import Fraction
from typing import TYPE_CHECKING, Iterator, Union

import mpmath

from probability.errors import DomainError

if TYPE_CHECKING:
    from models.binomial import NumericMode

Number = Union[Fraction, float, "mpmath.mpf"]

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)\s*/\s*(\d+)\s*$')
_DECIMAL_RE = re.compile(r'^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$')


def parse_rational(text: str) -> Fraction:
    """
    Parse a rational from "a/b", an integer or a decimal literal.

    Args:
        text: String such as "3/5", "25" or "0.6"

    Returns:
        Fraction in lowest terms ("0.6" gives 3/5)
    """
    if not isinstance(text, str):
        raise DomainError(f"Expected a string, got {type(text).__name__}")

    match = _RATIONAL_RE.match(text)
    if match:
        denominator = int(match.group(2))
        if denominator == 0:
            raise DomainError(f"Zero denominator in {text!r}")
        return Fraction(int(match.group(1)), denominator)

    if _DECIMAL_RE.match(text):
        return Fraction(text.strip())

    raise DomainError(f"Malformed rational {text!r}; use 'a/b' or a decimal")


def as_rational(value, mode: "NumericMode" = None, name: str = "value") -> Fraction:
    """
    Coerce an argument to Fraction.

    Floats are accepted only outside Exact mode and are converted exactly
    (the binary value, not the decimal literal).
    """
    if isinstance(value, bool):
        raise DomainError(f"{name} must be a number, got bool")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        if mode is not None and mode.is_exact:
            raise DomainError(f"{name} must be rational in Exact mode, got float {value!r}")
        return Fraction(value)
    raise DomainError(f"{name} must be rational, got {type(value).__name__}")


def literal_rational(value, name: str = "value") -> Fraction:
    """Coerce to Fraction, reading floats at their decimal literal (0.1 -> 1/10)"""
    if isinstance(value, float):
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {value!r}")
        return Fraction(repr(value))
    return as_rational(value, name=name)


def probability_as_rational(value) -> Fraction:
    """Read a target probability; floats are taken at their decimal literal (0.999 -> 999/1000)"""
    return literal_rational(value, name="target")


def to_number(value: Fraction, mode: "NumericMode") -> Number:
    """Represent a rational in the working number type of the mode"""
    if mode.is_exact:
        return Fraction(value)
    if mode.float_precision <= 53:
        return float(value)
    return mpmath.mpf(value.numerator) / value.denominator


@contextmanager
def working_precision(mode: "NumericMode") -> Iterator[None]:
    """Run the enclosed block at the binary precision of a Float mode"""
    if mode.is_exact or mode.float_precision <= 53:
        yield
        return
    with mpmath.workprec(mode.float_precision):
        yield
