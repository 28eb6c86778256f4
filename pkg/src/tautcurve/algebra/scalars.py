"""Exact rationals: the ground field.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, so it serves directly as the scalar type.  This module adds the
canonical ``"p/q"`` text form and the generalized binomial coefficient.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational

Scalar = Fraction


def to_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_scalar(value) -> str:
    """Canonical text form: ``"p"`` for integers, ``"p/q"`` otherwise (q > 0)."""
    q = to_scalar(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_scalar(text: str) -> Fraction:
    return Fraction(text.strip())


def is_integral(value) -> bool:
    return to_scalar(value).denominator == 1


def binomial_generalized(m: int, k: int) -> int:
    """m(m-1)...(m-k+1)/k! for any integer m and k >= 0.

    >>> binomial_generalized(-3, 2)
    6
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = 1
    for i in range(k):
        num *= m - i
    q, rem = divmod(num, factorial(k))
    assert rem == 0
    return q


def binomial_scalar(top, k: int):
    """Binomial coefficient with an arbitrary ring element on top.

    ``top`` may be a Fraction, Polynomial, RationalFunction... anything that
    supports subtraction of integers and multiplication.
    """
    result = top * 0 + 1
    for i in range(k):
        result = result * (top - i)
    return result * Fraction(1, factorial(k))
