"""Solutions when the family curve is singular.

Rational parameterizations in t for the genus-0 cases, and the two
explicit branches z(y) for the cases where the curve splits (F2 with
2ac = b^2, F4 with 3ac = b^2).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import ExceptionalPointError, ParameterError
from .families import (
    DEGENERATE_CASES, F2,
    FamilyId, FamilyParams, Solution,
    check_solution, recover_x,
)
from .multipoly import MultiPoly
from .polyparse import parse_poly
from .rational import as_rational

PARAMETERIZED_CASES = ("f1-4ac", "f2-4ac", "f3-4ac", "f4-ac", "f4-4ac")
UNION_CASES = ("f2-2ac", "f4-3ac")

# The defining equation of each singular curve in (b, c, y, z).
_DEFINING_TEXT = {
    "f1-4ac": "b^2*y*z^2 + b*c*y^2 + 2*b*c*y*z + b*c*z^2 + 4*c^2*y",
    "f2-4ac": "b^3*y^2*z^2 - 8*b*c^2*y^2 - 8*b*c^2*y*z + 4*b*c^2*z^2 - 32*c^3*y + 16*c^3*z",
    "f3-4ac": "b^3*y^2*z^2 + 3*b^2*c*y^2*z - 8*c^3*y + 4*c^3*z",
    "f4-ac": "3*b*y^2*z + 2*c*y^2 + 2*c*y*z - c*z^2",
    "f4-4ac": "3*b^2*y^2*z + 8*b*c*y^2 + 8*b*c*y*z - 4*b*c*z^2 + 24*c^2*y - 12*c^2*z",
    "f2-2ac": "(b*z + 2*c)*(b^2*y^2*z - 2*b*c*y^2 - 4*c^2*y + 2*c^2*z)",
    "f4-3ac": "(b*z + 2*c)*(b*y^2 + 2*c*y - c*z)",
}


@lru_cache(maxsize=None)
def defining_equation(case: str) -> MultiPoly:
    return parse_poly(_DEFINING_TEXT[case], ["b", "c", "y", "z"])


def defining_value(case: str, params: FamilyParams, y, z) -> Fraction:
    return defining_equation(case).eval({"b": params.b, "c": params.c, "y": y, "z": z})


def _check_case(family: FamilyId, case: str, params: FamilyParams, allowed: tuple[str, ...]):
    if case not in DEGENERATE_CASES[family] or case not in allowed:
        raise ParameterError(f"case {case!r} is not one of {family}'s cases {tuple(c for c in allowed if c in DEGENERATE_CASES[family])}")
    k = DEGENERATE_CASES[family][case]
    a, b, c = params
    if b * b != k * a * c:
        raise ParameterError(f"parameters do not satisfy b^2 = {k}ac required by {case}")


def _div(num: Fraction, den: Fraction, t: Fraction) -> Fraction:
    if den == 0:
        raise ExceptionalPointError(f"t = {t} is an excluded parameter value (denominator vanishes)", "t")
    return num / den


def _parameterize_yz(case: str, b: Fraction, c: Fraction, t: Fraction) -> tuple[Fraction, Fraction]:
    if case == "f1-4ac":
        y = _div(-b * c * t**2, (2 * c * t + b) ** 2, t)
        z = _div(-(b * t + 4 * c * t + 2 * b) * c * t, (2 * c * t + b) * (b * t + 2 * c * t + b), t)
    elif case == "f2-4ac":
        y = _div(
            24 * c * t * (2 * b * t - 12 * c * t - c),
            68 * b**2 * t**2 + 48 * b * c * t**2 - 144 * c**2 * t**2 + 4 * b * c * t - 24 * c**2 * t - c**2,
            t,
        )
        z = _div(
            -48 * c * t * (8 * b * t - 12 * c * t - c),
            100 * b**2 * t**2 - 192 * b * c * t**2 + 144 * c**2 * t**2 - 16 * b * c * t + 24 * c**2 * t + c**2,
            t,
        )
    elif case == "f3-4ac":
        y = _div(8 * c * t * (9 * b * t + 6 * c * t + b), (17 * b * t + 6 * c * t + b) * (5 * b * t + 6 * c * t + b), t)
        z = _div(-(17 * b * t + 6 * c * t + b) * (9 * b * t + 6 * c * t + b) * c, 16 * b**3 * t**2, t)
    elif case == "f4-ac":
        y = _div(-c * (2 * t**2 + 6 * t + 3), 3 * (t + 1) * b, t)
        z = _div(-c * (2 * t**2 + 6 * t + 3), 3 * b * (t + 1) ** 2, t)
    else:  # f4-4ac
        y = _div(-2 * c * t * (b * t + 6 * c * t + 3 * b), 3 * (b * t + 2 * c * t + b) * (2 * c * t + b), t)
        z = _div(-4 * (2 * b * t + 6 * c * t + 3 * b) * c * t, 3 * (b * t + 2 * c * t + b) ** 2, t)
    return y, z


def degenerate_parameterize(family: FamilyId, case: str, params: FamilyParams, t) -> Solution:
    """The solution with parameter t on a genus-0 degenerate curve."""
    _check_case(family, case, params, PARAMETERIZED_CASES)
    t = as_rational(t)
    y, z = _parameterize_yz(case, params.b, params.c, t)
    try:
        x = recover_x(family, y, z)
    except ExceptionalPointError:
        raise ExceptionalPointError(f"t = {t} is an excluded parameter value (x undefined)", "x") from None
    reason = check_solution(family, params, x, y, z)
    if reason is not None:
        # only at finitely many t, e.g. where a coordinate hits 0 for F3
        raise ExceptionalPointError(f"t = {t} is an excluded parameter value ({reason})", "t")
    return Solution(x, y, z)


def degenerate_union(family: FamilyId, case: str, params: FamilyParams, y) -> list[Fraction]:
    """z-values of the two branches at y: the constant -2c/b, then the curve branch."""
    _check_case(family, case, params, UNION_CASES)
    y = as_rational(y)
    b, c = params.b, params.c
    constant = -2 * c / b
    if family is F2:
        other = 2 * c * y * (b * y + 2 * c) / (b**2 * y**2 + 2 * c**2)
    else:
        other = y * (b * y + 2 * c) / c
    return [constant, other]


__all__ = [
    "PARAMETERIZED_CASES", "UNION_CASES", "defining_equation", "defining_value",
    "degenerate_parameterize", "degenerate_union",
]
