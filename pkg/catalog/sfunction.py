# catalog/sfunction.py
"""
s(z) = max of sum_i g_i z_i over sign vectors g with an odd number of -1.
"""

from fractions import Fraction
from typing import Sequence, Tuple

from exceptions import ContextcutError

ZERO = Fraction(0)


def _as_fractions(z: Sequence) -> Tuple[Fraction, ...]:
    z = tuple(Fraction(v) for v in z)
    if not z:
        raise ContextcutError("s needs at least one argument")
    return z


def maximizing_signs(z: Sequence) -> Tuple[int, ...]:
    """A sign vector with odd parity that attains s(z)."""
    z = _as_fractions(z)
    signs = [1 if v >= 0 else -1 for v in z]
    if signs.count(-1) % 2 == 0:
        # zero entries flip for free, otherwise sacrifice the smallest |z_i|
        flip = min(range(len(z)), key=lambda i: (abs(z[i]), i))
        signs[flip] = -signs[flip]
    return tuple(signs)


def s_function(z: Sequence) -> Fraction:
    z = _as_fractions(z)
    total = sum((abs(v) for v in z), ZERO)
    negatives = sum(1 for v in z if v < 0)
    if negatives % 2 == 1 or any(v == 0 for v in z):
        return total
    return total - 2 * min(abs(v) for v in z)
