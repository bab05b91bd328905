"""Rank bookkeeping for the family curves.

Nothing here computes a Mordell-Weil rank.  Positive rank is certified by
exhibiting a seed point of infinite order (no multiple up to the Mazur
bound is the identity), and the special parameter ratios k = b^2/(ac)
known to give rank 0 are reduced to fixed curves with known point lists.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import DomainError
from .families import (
    F1, F2, F3, F4,
    FamilyId, FamilyParams,
    curve_for_family, degenerate_case,
    generator_seed, group_law_multiple, seed_points,
)
from .rational import as_rational
from .weierstrass import EllipticCurve, Point

SPECIAL_K: dict[FamilyId, tuple[Fraction, ...]] = {
    F1: (Fraction(-1), Fraction(1), Fraction(3)),
    F2: (),
    F3: (Fraction(27, 8), Fraction(27, 4)),
    F4: (Fraction(3, 2),),
}

_CATALOGS: dict[Fraction, list[tuple[int, int]]] = {
    Fraction(-1): [(3, 0), (-6, 27), (-6, -27), (12, 27), (12, -27)],
    Fraction(1): [(-3, 0), (6, 27), (6, -27)],
    Fraction(3): [(-1, 0), (0, 1), (0, -1), (2, 3), (2, -3)],
}


def special_k(family: FamilyId, params: FamilyParams) -> Fraction | None:
    a, b, c = params
    k = b * b / (a * c)
    return k if k in SPECIAL_K[family] else None


def reduced_curve(family: FamilyId, k) -> EllipticCurve:
    """The fixed curve U^2 = V^3 + A'V + B' attached to a special ratio k."""
    k = as_rational(k)
    if k not in SPECIAL_K[family]:
        raise DomainError(f"k = {k} is not a rank-0 ratio for {family}")
    if family is F1:
        return EllipticCurve(-27 * (k - 3) / k**3, -27 * (2 * k - 9) / k**4)
    if family is F3:
        return EllipticCurve(-3 / k**2, (k - 2) / k**3)
    return EllipticCurve(Fraction(-64, 243), Fraction(704, 19683))


@dataclass(frozen=True)
class Scale:
    """V = X / v_div, U = Y / u_div, with u_div^2 = v_div^3."""

    u_div: Fraction
    v_div: Fraction

    def to_reduced(self, p: Point) -> Point:
        if p.is_identity:
            return p
        return Point(p.X / self.v_div, p.Y / self.u_div)

    def from_reduced(self, p: Point) -> Point:
        if p.is_identity:
            return p
        return Point(p.X * self.v_div, p.Y * self.u_div)


def reduce_special(family: FamilyId, params: FamilyParams) -> tuple[EllipticCurve, Scale]:
    k = special_k(family, params)
    if k is None:
        raise DomainError(f"{family} parameters {tuple(map(str, params))} have no rank-0 ratio")
    a, b, c = params
    if family is F1:
        scale = Scale(b**6, b**4)
    elif family is F3:
        scale = Scale(b**3 * c**3, b**2 * c**2)
    else:
        scale = Scale(b**9 / c**3, b**6 / c**2)
    return reduced_curve(family, k), scale


@dataclass(frozen=True)
class RankZeroCatalog:
    family: FamilyId
    k: Fraction
    curve: EllipticCurve
    points: tuple[Point, ...]
    listed: bool  # False: rank 0 is known but no point list is available


def rank_zero_catalog(family: FamilyId, k) -> RankZeroCatalog:
    k = as_rational(k)
    curve = reduced_curve(family, k)
    if family is F1:
        points = tuple(Point(X, Y) for X, Y in _CATALOGS[k])
        return RankZeroCatalog(family, k, curve, points, True)
    return RankZeroCatalog(family, k, curve, (), False)


def collision_table_check(params: FamilyParams) -> list[tuple[int, int, bool]]:
    """For F1 points P0..P8, whether X(Pi) == X(Pj) for each pair i < j.

    The identity has no X-coordinate; it only collides with itself.
    """
    P0 = seed_points(F1, params)[0]
    points = [P0, generator_seed(F1, params)]
    points += [group_law_multiple(F1, params, f"P{i}") for i in range(2, 9)]
    return [(i, j, points[i].X == points[j].X) for i, j in combinations(range(9), 2)]


# -- classification -----------------------------------------------------------

@dataclass(frozen=True)
class PositiveRankCertified:
    witness: Point
    kind: str = field(default="positive-rank-certified", init=False)


@dataclass(frozen=True)
class RankZero:
    k: Fraction
    kind: str = field(default="rank-zero-catalog", init=False)


@dataclass(frozen=True)
class Undetermined:
    kind: str = field(default="undetermined", init=False)


@dataclass(frozen=True)
class NonSingular:
    curve: EllipticCurve
    rank_status: PositiveRankCertified | RankZero | Undetermined
    kind: str = field(default="nonsingular", init=False)


@dataclass(frozen=True)
class Degenerate:
    case: str
    kind: str = field(default="degenerate", init=False)


def classify(family: FamilyId, params: FamilyParams) -> NonSingular | Degenerate:
    case = degenerate_case(family, params)
    if case is not None:
        return Degenerate(case)
    curve = curve_for_family(family, params)
    k = special_k(family, params)
    if k is not None:
        return NonSingular(curve, RankZero(k))
    for p in reversed(seed_points(family, params)):
        if curve.torsion_order(p) is None:
            return NonSingular(curve, PositiveRankCertified(p))
    return NonSingular(curve, Undetermined())


__all__ = [
    "SPECIAL_K", "special_k", "reduced_curve", "Scale", "reduce_special",
    "RankZeroCatalog", "rank_zero_catalog", "collision_table_check",
    "PositiveRankCertified", "RankZero", "Undetermined", "NonSingular", "Degenerate",
    "classify",
]
