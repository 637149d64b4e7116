"""Rational scalar helpers and the "num/den" wire format."""

from fractions import Fraction
from math import lcm
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def to_fraction(value: Union[Scalar, str]) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a canonical Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Cannot use {value!r} as an exact rational")


def format_rational(value: Scalar) -> str:
    """Serialize as "num/den" (denominator always written)."""
    value = to_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return to_fraction(text)


def common_denominator(values: Iterable[Scalar]) -> int:
    """lcm of the denominators, 1 for an empty sequence."""
    result = 1
    for value in values:
        result = lcm(result, to_fraction(value).denominator)
    return result


def pochhammer(x: Scalar, k: int) -> Fraction:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1)."""
    result = Fraction(1)
    for i in range(k):
        result *= x + i
    return result
