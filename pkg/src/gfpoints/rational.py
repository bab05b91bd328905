"""Exact rationals: canonical construction, heights, square roots, text form.

Values are plain :class:`fractions.Fraction` objects, which are always
reduced with a positive denominator, so equality and hashing are structural.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def normalize(num: int, den: int) -> Fraction:
    """Return the canonical rational ``num/den``.

    Raises ZeroDivisionError when ``den == 0``.
    """
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def integer_sqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def rational_sqrt_exact(q: Fraction) -> Fraction | None:
    """Non-negative rational square root of ``q``, or None if q is not a square."""
    q = as_rational(q)
    if q < 0:
        return None
    # q is reduced, so it is a square iff numerator and denominator both are
    rn = integer_sqrt_exact(q.numerator)
    if rn is None:
        return None
    rd = integer_sqrt_exact(q.denominator)
    if rd is None:
        return None
    return Fraction(rn, rd)


def height(q: Fraction) -> int:
    """Naive height max(|p|, q) of a canonical rational p/q."""
    q = as_rational(q)
    return max(abs(q.numerator), q.denominator)


def parse_rational(text: str) -> Fraction:
    """Parse the strict textual form ``p`` or ``p/q`` (no decimals, no spaces)."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational of the form p or p/q: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return normalize(num, den)


def format_rational(q: Fraction) -> str:
    return str(as_rational(q))
