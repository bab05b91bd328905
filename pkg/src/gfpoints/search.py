"""Brute-force searches used as an independent check on the generator and catalogs.

Family solutions: for every y of bounded height, solve the family curve C
as a quadratic in z.  Curve points: enumerate X = m/e^2 on an integral
model and test X^3 + AX + B for a square.  Results are complete only
relative to the stated bounds.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import ExceptionalPointError
from .families import F3, FamilyId, FamilyParams, Solution, check_solution, conic, recover_x
from .multipoly import MultiPoly
from .rational import height, integer_sqrt_exact, rational_sqrt_exact
from .weierstrass import EllipticCurve, Point


@dataclass
class SearchReport:
    found: list
    bounds: dict[str, int]
    candidates_tested: int = 0
    squares_found: int = 0
    notes: list[str] = field(default_factory=list)


# -- family curves -----------------------------------------------------------

@lru_cache(maxsize=None)
def _z_coefficients(family: FamilyId) -> dict[int, MultiPoly]:
    return conic(family).coefficients_in("z")


def solve_in_z(family: FamilyId, params: FamilyParams, y) -> list[Fraction]:
    """All rational z with (y, z) on the family curve, in increasing order.

    A y at which every coefficient vanishes gives a whole line of solutions;
    that row is reported as empty rather than enumerated.
    """
    env = {"a": params.a, "b": params.b, "c": params.c, "y": Fraction(y)}
    coeffs = {k: p.eval(env) for k, p in _z_coefficients(family).items()}
    if any(k > 2 for k, v in coeffs.items() if v):
        raise ValueError("family curve is not quadratic in z")
    q2, q1, q0 = (coeffs.get(k, Fraction(0)) for k in (2, 1, 0))
    if q2 == 0:
        if q1 == 0:
            return []
        return [-q0 / q1]
    root = rational_sqrt_exact(q1 * q1 - 4 * q2 * q0)
    if root is None:
        return []
    return sorted({(-q1 + root) / (2 * q2), (-q1 - root) / (2 * q2)})


def _bounded_height(bound: int):
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if p and gcd(p, q) == 1:
                yield Fraction(p, q)


def search_family_solutions(family: FamilyId, params: FamilyParams, height_bound: int) -> SearchReport:
    """Nontrivial solutions with height(y) <= height_bound, sorted by (height(y), y, z)."""
    if height_bound < 1:
        raise ValueError("height_bound must be at least 1")
    report = SearchReport([], {"height": height_bound})
    for y in _bounded_height(height_bound):
        report.candidates_tested += 1
        zs = solve_in_z(family, params, y)
        if zs:
            report.squares_found += 1
        for z in zs:
            if z == y:
                continue
            try:
                x = recover_x(family, y, z)
            except ExceptionalPointError:
                continue
            if family is F3 and x * y * z == 0:
                continue
            if check_solution(family, params, x, y, z) is None:
                report.found.append(Solution(x, y, z))
    report.found.sort(key=lambda s: (height(s.y), s.y, s.z))
    return report


# -- Weierstrass curves --------------------------------------------------------

def integral_scaling(curve: EllipticCurve) -> int:
    """Smallest u >= 1 with u^4 A and u^6 B both integers."""
    u = 1
    while (curve.A * u**4).denominator != 1 or (curve.B * u**6).denominator != 1:
        u += 1
    return u


def _scan(args) -> tuple[list[tuple[int, int, int]], int, int]:
    """Scan denominators e in ``es`` on Y^2 = X^3 + AX + B with integral A, B."""
    A, B, m_bound, es = args
    hits = []
    tested = squares = 0
    for e in es:
        e2 = e * e
        e4 = e2 * e2
        e6 = e4 * e2
        lim = m_bound * e2
        Ae4 = A * e4
        Be6 = B * e6
        for m in range(-lim, lim + 1):
            if e > 1 and gcd(m, e) != 1:
                continue
            tested += 1
            # e^6 (X^3 + AX + B) with X = m/e^2
            value = m * (m * m + Ae4) + Be6
            if value < 0:
                continue
            n = integer_sqrt_exact(value)
            if n is None:
                continue
            squares += 1
            hits.append((m, e, n))
    return hits, tested, squares


def _point_key(p: Point):
    return (height(p.X), p.X, p.Y)


def search_curve_points(curve: EllipticCurve, m_bound: int, e_bound: int, workers: int = 1) -> SearchReport:
    """Affine points with X = m/e^2 (on an integral model), |m| <= m_bound e^2, e <= e_bound.

    With ``workers > 1`` the denominators are split across processes; the
    merged report is identical to a sequential scan.
    """
    if m_bound < 1 or e_bound < 1:
        raise ValueError("bounds must be at least 1")
    u = integral_scaling(curve)
    A = int(curve.A * u**4)
    B = int(curve.B * u**6)
    es = list(range(1, e_bound + 1))
    if workers > 1:
        chunks = [(A, B, m_bound, es[i::workers]) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan, chunks))
    else:
        parts = [_scan((A, B, m_bound, es))]
    report = SearchReport([], {"m_bound": m_bound, "e_bound": e_bound})
    if u != 1:
        report.notes.append(f"searched the integral model scaled by u = {u}")
    points = set()
    for hits, tested, squares in parts:
        report.candidates_tested += tested
        report.squares_found += squares
        for m, e, n in hits:
            X = Fraction(m, e * e * u * u)
            for Y in {Fraction(n, e**3 * u**3), Fraction(-n, e**3 * u**3)}:
                points.add(Point(X, Y))
    report.found = sorted(points, key=_point_key)
    return report
