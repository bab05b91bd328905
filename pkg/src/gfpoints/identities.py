"""Symbolic identity checks and verification of (G, f) points.

``identity_check`` expands, for each family, G(f(x), f(y), f(z)) with x
eliminated through G = 0, and confirms that after clearing denominators it
equals a known multiple of (y - z)^2 times the family curve C.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .families import F1, F2, F3, F4, FamilyId, FamilyParams, conic, verify_solution
from .multipoly import MultiPoly
from .polyparse import parse_poly
from .rational import as_rational

G_TEXT = {F1: "x*y - z^2", F2: "(x + y)*z - 2*x*y", F3: "(x + y)*z - 2*x*y", F4: "(x + y)*z - 2*x*y"}

# f written as N(u) / u^shift with N a polynomial
_F_NUMERATOR = {F1: ("a*u^2 + b*u + c", 0), F2: ("a*u^2 + b*u + c", 0),
                F3: ("a*u^2 + b*u + c", 1), F4: ("a*u^3 + b*u^2 + c*u", 0)}


def g_poly(family: FamilyId) -> MultiPoly:
    return parse_poly(G_TEXT[family], ["x", "y", "z"])


def composed_cleared(family: FamilyId) -> tuple[MultiPoly, MultiPoly]:
    """(H, m) with H = m * G(f(x), f(y), f(z)) a polynomial and m a monomial in x, y, z."""
    G = g_poly(family)
    num_text, shift = _F_NUMERATOR[family]
    N = parse_poly(num_text, ["a", "b", "c", "u"])
    subs = {v: N.compose({"u": MultiPoly.var(v)}) for v in ("x", "y", "z")}
    if not shift:
        return G.compose(subs), MultiPoly.const(1)
    # multiply each term X^i Y^j Z^k by x^(d-i) y^(d-j) z^(d-k) so all powers stay >= 0
    d = max(max(e) for e in G.terms) * shift
    names = G.variables
    H = MultiPoly.zero()
    for exps, coeff in G.terms.items():
        term = MultiPoly.const(coeff)
        for name, e in zip(names, exps):
            term = term * subs[name] ** e * MultiPoly.var(name) ** (d - e * shift)
        for name in {"x", "y", "z"} - set(names):
            term = term * MultiPoly.var(name) ** d
        H = H + term
    m = (MultiPoly.var("x") * MultiPoly.var("y") * MultiPoly.var("z")) ** d
    return H, m


# (x numerator, x denominator, clear power, multiplier of (y - z)^2 * C)
_ELIMINATION = {
    F1: ("z^2", "y", 2, "1"),
    F2: ("y*z", "2*y - z", 2, "2"),
    F3: ("y*z", "2*y - z", 2, "-2"),
    F4: ("y*z", "2*y - z", 3, "2*y^2*z^2"),
}


@lru_cache(maxsize=None)
def identity_sides(family: FamilyId) -> tuple[MultiPoly, MultiPoly]:
    """Both sides of the cleared factorization identity, fully expanded.

    F1: y^2 G(F) = (y-z)^2 C1;  F2: (2y-z)^2 G(F) = 2 (y-z)^2 C2;
    F3: y^2 z^2 (2y-z) G(F) = -2 (y-z)^2 C3;  F4: (2y-z)^3 G(F) = 2 y^2 z^2 (y-z)^2 C4.
    """
    H, _ = composed_cleared(family)
    num_text, den_text, power, mult_text = _ELIMINATION[family]
    lhs = H.substitute_ratio("x", parse_poly(num_text), parse_poly(den_text), power)
    y_minus_z = parse_poly("y - z")
    rhs = parse_poly(mult_text) * y_minus_z * y_minus_z * conic(family)
    return lhs, rhs


def identity_check(family: FamilyId) -> bool:
    lhs, rhs = identity_sides(family)
    return (lhs - rhs).is_zero()


def _check_generic(G: MultiPoly, f: MultiPoly, x, y, z) -> dict[str, Fraction]:
    if not set(G.variables) <= {"x", "y", "z"}:
        raise DomainError(f"G must use only x, y, z; found {', '.join(G.variables)}")
    if len(f.variables) > 1:
        raise DomainError(f"f must be univariate; found {', '.join(f.variables)}")
    return {"x": as_rational(x), "y": as_rational(y), "z": as_rational(z)}


def on_composed_variety(G: MultiPoly, f: MultiPoly, x, y, z) -> bool:
    """True iff G(f(x), f(y), f(z)) = 0, with no condition on G(x, y, z)."""
    point = _check_generic(G, f, x, y, z)
    if f.variables:
        var = f.variables[0]
        images = {k: f.eval({var: v}) for k, v in point.items()}
    else:
        images = {k: f.constant_term() for k in point}
    return G.eval(images) == 0


def verify_generic(G: MultiPoly, f: MultiPoly, x, y, z) -> bool:
    """True iff G(x, y, z) = 0 and G(f(x), f(y), f(z)) = 0 exactly."""
    point = _check_generic(G, f, x, y, z)
    return G.eval(point) == 0 and on_composed_variety(G, f, x, y, z)


def verify_remark_xk(params: FamilyParams, kexp: int, x, y, z) -> bool:
    """Check G(f_k(x), f_k(y), f_k(z)) = 0 for f_k(u) = u^kexp (a u^2 + b u + c), G = xy - z^2."""
    x, y, z = (as_rational(v) for v in (x, y, z))
    if kexp < 0 and x * y * z == 0:
        raise DomainError("a zero coordinate with a negative exponent leaves f_k undefined")
    if not verify_solution(F1, params, x, y, z):
        raise DomainError(f"({x}, {y}, {z}) is not a solution of the F1 system")
    a, b, c = params

    def f_k(u: Fraction) -> Fraction:
        return u ** kexp * (a * u * u + b * u + c)

    return f_k(x) * f_k(y) - f_k(z) ** 2 == 0
