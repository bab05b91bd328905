from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gfpoints.degenerate import (
    PARAMETERIZED_CASES, UNION_CASES, defining_value,
    degenerate_parameterize, degenerate_union,
)
from gfpoints.errors import ExceptionalPointError, ParameterError
from gfpoints.families import F1, F2, F3, F4, DEGENERATE_CASES, FamilyParams, conic_value, verify_solution

from conftest import nonzero_fracs

# the singular curves, transcribed directly
EQUATIONS = {
    "f1-4ac": lambda b, c, y, z: b*b*y*z*z + b*c*y*y + 2*b*c*y*z + b*c*z*z + 4*c*c*y,
    "f2-4ac": lambda b, c, y, z: b**3*y*y*z*z - 8*b*c*c*y*y - 8*b*c*c*y*z + 4*b*c*c*z*z - 32*c**3*y + 16*c**3*z,
    "f3-4ac": lambda b, c, y, z: b**3*y*y*z*z + 3*b*b*c*y*y*z - 8*c**3*y + 4*c**3*z,
    "f4-ac": lambda b, c, y, z: 3*b*y*y*z + 2*c*y*y + 2*c*y*z - c*z*z,
    "f4-4ac": lambda b, c, y, z: 3*b*b*y*y*z + 8*b*c*y*y + 8*b*c*y*z - 4*b*c*z*z + 24*c*c*y - 12*c*c*z,
    "f2-2ac": lambda b, c, y, z: (b*z + 2*c) * (b*b*y*y*z - 2*b*c*y*y - 4*c*c*y + 2*c*c*z),
    "f4-3ac": lambda b, c, y, z: (b*z + 2*c) * (b*y*y + 2*c*y - c*z),
}
FAMILY_OF = {case: fam for fam, cases in DEGENERATE_CASES.items() for case in cases}


def case_params(case, a, b):
    k = DEGENERATE_CASES[FAMILY_OF[case]][case]
    return FamilyParams(a, b, b * b / (k * a))


def test_f1_spot_value():
    s = degenerate_parameterize(F1, "f1-4ac", FamilyParams(1, 2, 1), 1)
    assert (s.y, s.z) == (Fraction(-1, 8), Fraction(-5, 12))
    # x = z^2 / y = (25/144) / (-1/8)
    assert s.x == Fraction(-25, 18)
    assert EQUATIONS["f1-4ac"](2, 1, s.y, s.z) == 0


def test_f4_spot_value():
    s = degenerate_parameterize(F4, "f4-ac", FamilyParams(1, 1, 1), 1)
    assert (s.y, s.z) == (Fraction(-11, 6), Fraction(-11, 12))
    assert EQUATIONS["f4-ac"](1, 1, s.y, s.z) == 0


def test_excluded_parameter():
    with pytest.raises(ExceptionalPointError):
        degenerate_parameterize(F1, "f1-4ac", FamilyParams(1, 2, 1), Fraction(-1, 2))


def test_case_mismatch():
    with pytest.raises(ParameterError):
        degenerate_parameterize(F1, "f1-4ac", FamilyParams(1, 1, 1), 1)
    with pytest.raises(ParameterError):
        degenerate_parameterize(F1, "f4-ac", FamilyParams(1, 1, 1), 1)
    with pytest.raises(ParameterError):
        degenerate_parameterize(F2, "f2-2ac", FamilyParams(2, 2, 1), 1)
    with pytest.raises(ParameterError):
        degenerate_union(F2, "f2-4ac", FamilyParams(1, 2, 1), 1)


def test_union_examples():
    assert degenerate_union(F2, "f2-2ac", FamilyParams(2, 2, 1), 1) == [-1, Fraction(4, 3)]
    assert degenerate_union(F4, "f4-3ac", FamilyParams(3, 3, 1), 1) == [Fraction(-2, 3), 5]


@pytest.mark.parametrize("case", PARAMETERIZED_CASES)
@given(a=nonzero_fracs, b=nonzero_fracs, t=st.builds(Fraction, st.integers(-60, 60), st.integers(1, 30)))
@settings(max_examples=60, deadline=None)
def test_parameterizations_solve_the_system(case, a, b, t):
    params = case_params(case, a, b)
    family = FAMILY_OF[case]
    try:
        s = degenerate_parameterize(family, case, params, t)
    except ExceptionalPointError:
        return
    assert EQUATIONS[case](params.b, params.c, s.y, s.z) == 0
    assert defining_value(case, params, s.y, s.z) == 0
    assert conic_value(family, params, s.y, s.z) == 0
    assert verify_solution(family, params, *s)


@pytest.mark.parametrize("case", UNION_CASES)
@given(a=nonzero_fracs, b=nonzero_fracs, y=nonzero_fracs)
@settings(max_examples=60, deadline=None)
def test_union_branches(case, a, b, y):
    params = case_params(case, a, b)
    family = FAMILY_OF[case]
    constant, other = degenerate_union(family, case, params, y)
    assert constant == -2 * params.c / params.b
    for z in (constant, other):
        assert EQUATIONS[case](params.b, params.c, y, z) == 0
        assert conic_value(family, params, y, z) == 0


@pytest.mark.parametrize("case", list(EQUATIONS))
def test_defining_equations_match_transcription(case):
    params = case_params(case, Fraction(3), Fraction(-5, 2))
    for y, z in [(1, 2), (Fraction(-1, 3), 7), (0, 5)]:
        assert defining_value(case, params, y, z) == EQUATIONS[case](params.b, params.c, y, z)
