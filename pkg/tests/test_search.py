from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gfpoints.families import F1, F2, F3, F4, FamilyParams, verify_solution
from gfpoints.generator import generate
from gfpoints.rational import height
from gfpoints.search import integral_scaling, search_curve_points, search_family_solutions, solve_in_z
from gfpoints.weierstrass import EllipticCurve, Point

from conftest import nondegenerate, nonzero_fracs

P112 = FamilyParams(1, 1, 2)


def c1(params, y, z):
    a, b, c = params
    return a * b * y * z * z + a * c * y * y + 2 * a * c * y * z + a * c * z * z + b * c * y


def test_solve_in_z_example():
    # -14 z^2 - 64 z + 480 = 0, discriminant 88^2
    roots = solve_in_z(F1, P112, -16)
    assert roots == [Fraction(-60, 7), 4]
    for z in roots:
        assert c1(P112, -16, z) == 0


def test_solve_in_z_non_square():
    # y = 1: 3 z^2 + 4 z + 4, discriminant 16 - 48 < 0
    assert solve_in_z(F1, P112, 1) == []


def test_solve_in_z_linear_and_vanishing_rows():
    # z^2 coefficient ab y + ac vanishes at y = -c/b
    roots = solve_in_z(F1, P112, -2)
    assert len(roots) == 1 and c1(P112, -2, roots[0]) == 0
    # F3 at y = 0: c^2 z = 0, a single root
    assert solve_in_z(F3, P112, 0) == [0]


@pytest.mark.parametrize("family", [F1, F2, F3, F4])
@given(data=st.data(), y=nonzero_fracs)
@settings(max_examples=30, deadline=None)
def test_roots_lie_on_curve(family, data, y):
    from gfpoints.families import conic_value
    params = data.draw(nondegenerate(family))
    for z in solve_in_z(family, params, y):
        assert conic_value(family, params, y, z) == 0


@pytest.mark.parametrize(
    "family, params, bound, sol",
    [
        (F1, P112, 16, (-1, -16, 4)),
        (F2, FamilyParams(1, 1, 1), 2, (-3, -1, Fraction(-3, 2))),
        (F4, P112, 1, (Fraction(-3, 2), 1, 6)),
    ],
)
def test_family_search_examples(family, params, bound, sol):
    report = search_family_solutions(family, params, bound)
    assert sol in [tuple(s) for s in report.found]
    for s in report.found:
        assert verify_solution(family, params, *s)
        assert height(s.y) <= bound


def test_family_search_is_sorted_and_agrees_with_generator():
    report = search_family_solutions(F1, P112, 16)
    keys = [(height(s.y), s.y, s.z) for s in report.found]
    assert keys == sorted(keys)
    found = set(report.found)
    for s in generate(F1, P112, 10):
        if height(s.y) <= 16:
            assert s in found


def test_family_search_rejects_bad_bound():
    with pytest.raises(ValueError):
        search_family_solutions(F1, P112, 0)


def test_curve_search_small():
    E = EllipticCurve(Fraction(0), Fraction(1))
    report = search_curve_points(E, 10, 2)
    assert set(report.found) == {Point(-1, 0), Point(0, 1), Point(0, -1), Point(2, 3), Point(2, -3)}
    assert report.squares_found == 3


def test_curve_search_finds_rational_denominators():
    # (-2, 3) + (2, 5) on Y^2 = X^3 + 17 is (1/4, -33/8)
    E = EllipticCurve(Fraction(0), Fraction(17))
    P = E.add(Point(-2, 3), Point(2, 5))
    assert P.X.denominator == 4
    assert P in search_curve_points(E, 10, 3).found


def test_curve_search_on_non_integral_model():
    E = EllipticCurve(Fraction(-64, 243), Fraction(704, 19683))
    assert integral_scaling(E) == 9
    report = search_curve_points(E, 50, 3)
    for P in report.found:
        assert E.on_curve(P)
    assert report.notes


def test_parallel_search_matches_sequential():
    E = EllipticCurve(Fraction(-108), Fraction(297))
    seq = search_curve_points(E, 200, 6)
    par = search_curve_points(E, 200, 6, workers=3)
    assert seq.found == par.found
    assert seq.candidates_tested == par.candidates_tested
