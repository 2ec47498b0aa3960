"""Exact rational scalars and the few numeric helpers built on them.

All core computation runs over ``fractions.Fraction``, which already
guarantees the canonical reduced form (gcd(num, den) = 1, den > 0).
Float mode exists only at the edges: the sectional-curvature minimizer
and tolerance-based comparisons.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Fraction
ScalarLike = Union[int, str, Fraction]

FLOAT_REL_TOL = 1e-9


def to_rational(value: ScalarLike) -> Fraction:
    """Coerce an int, "p/q" string, or Fraction to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError(
            f"refusing to coerce float {value!r} into exact mode; pass a string 'p/q'"
        )
    raise TypeError(f"cannot interpret {value!r} as a rational scalar")


def format_rational(value: Fraction) -> str:
    """Canonical wire format: "p" for integers, "p/q" otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def exact_sqrt(value: Fraction) -> Fraction | None:
    """Square root of a nonnegative rational, or None when it is irrational."""
    if value < 0:
        raise ValueError("negative radicand")
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def sqrt_scalar(value: Fraction) -> Fraction | float:
    """Exact square root when the radicand is a perfect rational square, else float."""
    root = exact_sqrt(value)
    if root is not None:
        return root
    return math.sqrt(float(value))
