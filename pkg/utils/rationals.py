# utils/rationals.py

from fractions import Fraction
from math import gcd, lcm
import re

_RATIONAL_PATTERN = re.compile(r"^\s*-?\d+\s*(/\s*\d+\s*)?$")


def to_fraction(value) -> Fraction:
    """
    Coerce an int, Fraction or "p/q" string into an exact Fraction.

    Floats are refused so that no rounding enters the core.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Cannot read a boolean as a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_PATTERN.match(value):
            raise ValueError(f"Not an exact rational literal: {value!r}")
        result = Fraction(value.replace(" ", ""))
        return result
    raise ValueError(f"Unsupported rational value {value!r} of type {type(value).__name__}")


def format_fraction(value) -> str:
    value = to_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def common_denominator(values) -> int:
    result = 1
    for value in values:
        result = lcm(result, Fraction(value).denominator)
    return result


def integerize(coeffs: dict, bound: Fraction):
    """
    Scale coefficients and bound by one positive factor so that all become
    coprime integers. Returns (scaled coeffs, scaled bound).
    """
    values = list(coeffs.values()) + [bound]
    scale = common_denominator(values)
    ints = [int(Fraction(v) * scale) for v in values]
    divisor = 0
    for i in ints:
        divisor = gcd(divisor, abs(i))
    if divisor > 1:
        scale = Fraction(scale, divisor)
    return (
        {key: Fraction(v) * scale for key, v in coeffs.items()},
        Fraction(bound) * scale,
    )
