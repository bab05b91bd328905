"""Rational (G, f)-points: solutions of G(x, y, z) = 0 and G(f(x), f(y), f(z)) = 0
for four (G, f) families, found through birational maps to elliptic curves."""
from .families import (
    F1, F2, F3, F4,
    FamilyId, FamilyParams, Solution,
    curve_for_family, expected_multiple, paper_discriminant,
    phi_forward, phi_inverse, recover_x, seed_points, verify_solution,
)
from .generator import SolutionStream, generate
from .multipoly import MultiPoly
from .polyparse import parse_poly
from .weierstrass import IDENTITY, EllipticCurve, Point

__all__ = [
    "F1", "F2", "F3", "F4", "FamilyId", "FamilyParams", "Solution",
    "curve_for_family", "expected_multiple", "paper_discriminant",
    "phi_forward", "phi_inverse", "recover_x", "seed_points", "verify_solution",
    "SolutionStream", "generate", "MultiPoly", "parse_poly",
    "IDENTITY", "EllipticCurve", "Point",
]
