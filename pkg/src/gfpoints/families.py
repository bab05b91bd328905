"""The four (G, f) families and their elliptic models.

======  ==================  ====================
family  G(x, y, z)          f(u)
======  ==================  ====================
F1      xy - z^2            a u^2 + b u + c
F2      (x + y)z - 2xy      a u^2 + b u + c
F3      (x + y)z - 2xy      a u + b + c/u
F4      (x + y)z - 2xy      u (a u^2 + b u + c)
======  ==================  ====================

For each family, after x is eliminated through G = 0 and the trivial
factor (y - z)^2 is removed, the system G = 0, G(f(x), f(y), f(z)) = 0
reduces to a plane curve ``C`` in (y, z).  ``phi_forward`` and
``phi_inverse`` carry C to a short Weierstrass model and back.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .errors import (
    DegenerateParametersError,
    DomainError,
    ExceptionalPointError,
    ParameterError,
)
from .multipoly import MultiPoly
from .polyparse import parse_poly
from .rational import as_rational
from .weierstrass import EllipticCurve, IDENTITY, Point


class FamilyId(enum.Enum):
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"

    @classmethod
    def parse(cls, text: str) -> "FamilyId":
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown family {text!r}; expected one of f1, f2, f3, f4") from None

    @property
    def harmonic(self) -> bool:
        """True for the families with G = (x + y)z - 2xy."""
        return self is not FamilyId.F1

    def __str__(self):
        return self.value


F1, F2, F3, F4 = FamilyId.F1, FamilyId.F2, FamilyId.F3, FamilyId.F4


@dataclass(frozen=True)
class FamilyParams:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.a * self.b * self.c == 0:
            raise ParameterError("family parameters need abc != 0")

    def __iter__(self):
        return iter((self.a, self.b, self.c))

    def as_dict(self) -> dict[str, Fraction]:
        return {"a": self.a, "b": self.b, "c": self.c}


@dataclass(frozen=True)
class Solution:
    x: Fraction
    y: Fraction
    z: Fraction

    def __iter__(self):
        return iter((self.x, self.y, self.z))


# -- G and f ----------------------------------------------------------------

def G_value(family: FamilyId, x, y, z) -> Fraction:
    if family is F1:
        return x * y - z * z
    return (x + y) * z - 2 * x * y


def f_value(family: FamilyId, params: FamilyParams, u) -> Fraction:
    a, b, c = params
    u = as_rational(u)
    if family is F3:
        if u == 0:
            raise DomainError("f(u) = a u + b + c/u is undefined at u = 0")
        return a * u + b + c / u
    if family is F4:
        return u * (a * u * u + b * u + c)
    return a * u * u + b * u + c


def recover_x(family: FamilyId, y, z) -> Fraction:
    """The x with G(x, y, z) = 0."""
    y, z = as_rational(y), as_rational(z)
    if family is F1:
        if y == 0:
            raise ExceptionalPointError("no finite x: y = 0 in x = z^2/y", "y")
        return z * z / y
    if 2 * y - z == 0:
        raise ExceptionalPointError("no finite x: 2y - z = 0 in x = yz/(2y - z)", "2y-z")
    return y * z / (2 * y - z)


def check_solution(family: FamilyId, params: FamilyParams, x, y, z) -> str | None:
    """None when (x, y, z) solves the family system exactly, else the reason it fails."""
    x, y, z = (as_rational(v) for v in (x, y, z))
    if family is F3 and x * y * z == 0:
        return "f undefined at 0"
    if G_value(family, x, y, z) != 0:
        return "G(x, y, z) != 0"
    fx, fy, fz = (f_value(family, params, v) for v in (x, y, z))
    if G_value(family, fx, fy, fz) != 0:
        return "G(f(x), f(y), f(z)) != 0"
    return None


def verify_solution(family: FamilyId, params: FamilyParams, x, y, z) -> bool:
    return check_solution(family, params, x, y, z) is None


# -- degenerate cases --------------------------------------------------------

# case tag -> multiple k with b^2 = k*a*c
DEGENERATE_CASES: dict[FamilyId, dict[str, int]] = {
    F1: {"f1-4ac": 4},
    F2: {"f2-2ac": 2, "f2-4ac": 4},
    F3: {"f3-4ac": 4},
    F4: {"f4-ac": 1, "f4-3ac": 3, "f4-4ac": 4},
}


def degenerate_case(family: FamilyId, params: FamilyParams) -> str | None:
    a, b, c = params
    for tag, k in DEGENERATE_CASES[family].items():
        if b * b == k * a * c:
            return tag
    return None


def require_nondegenerate(family: FamilyId, params: FamilyParams):
    case = degenerate_case(family, params)
    if case is not None:
        raise DegenerateParametersError(case)


# -- elliptic models ---------------------------------------------------------

def curve_coefficients(family: FamilyId, params: FamilyParams) -> tuple[Fraction, Fraction]:
    """(A, B) of the family's Weierstrass model, without a singularity check."""
    a, b, c = params
    if family is F1:
        A = 27 * a**2 * b**2 * c**2 * (3 * a * c - b**2)
        B = 27 * a**3 * b**4 * c**3 * (9 * a * c - 2 * b**2)
    elif family is F2:
        A = -3 * a**4 * c**4
        B = a**4 * c**4 * (2 * a**2 * c**2 - 4 * a * b**2 * c + b**4)
    elif family is F3:
        A = -3 * a**2 * c**6
        B = -a**2 * c**8 * (2 * a * c - b**2)
    else:
        A = -3 * a**6 * c**2
        B = -a**6 * (2 * a * c - b**2) * (a**2 * c**2 - 4 * a * b**2 * c + b**4)
    return A, B


def curve_for_family(family: FamilyId, params: FamilyParams) -> EllipticCurve:
    require_nondegenerate(family, params)
    return EllipticCurve(*curve_coefficients(family, params))


def paper_discriminant(family: FamilyId, params: FamilyParams) -> Fraction:
    """Closed-form -(4A^3 + 27B^2) for the family, in factored form."""
    a, b, c = params
    if family is F1:
        return -531441 * a**8 * b**6 * c**8 * (4 * a * c - b**2)
    if family is F2:
        return 27 * a**8 * c**8 * b**2 * (4 * a * c - b**2) * (2 * a * c - b**2) ** 2
    if family is F3:
        return 27 * a**4 * c**16 * b**2 * (4 * a * c - b**2)
    return 27 * a**12 * b**2 * (4 * a * c - b**2) * (3 * a * c - b**2) ** 2 * (a * c - b**2) ** 2


# -- conics ------------------------------------------------------------------

CONIC_TEXT = {
    F1: "a*b*y*z^2 + a*c*y^2 + 2*a*c*y*z + a*c*z^2 + b*c*y",
    F2: "a^2*y^2*z^2 - 2*a*c*y^2 - 2*a*c*y*z + a*c*z^2 - 2*b*c*y + b*c*z",
    F3: "a*b*y^2*z^2 + 3*a*c*y^2*z - 2*c^2*y + c^2*z",
    F4: "3*a^2*y^2*z + 2*a*b*y^2 + 2*a*b*y*z - a*b*z^2 - 2*a*c*y + a*c*z + 2*b^2*y - b^2*z",
}


@lru_cache(maxsize=None)
def conic(family: FamilyId) -> MultiPoly:
    """The curve C in (a, b, c, y, z) left after removing the factor (y - z)^2."""
    return parse_poly(CONIC_TEXT[family], ["a", "b", "c", "y", "z"])


def conic_value(family: FamilyId, params: FamilyParams, y, z) -> Fraction:
    a, b, c = params
    return conic(family).eval({"a": a, "b": b, "c": c, "y": y, "z": z})


def _nonzero(value: Fraction, label: str, what: str) -> Fraction:
    if value == 0:
        raise ExceptionalPointError(f"{what}: denominator {label} vanishes", label)
    return value


def phi_forward(family: FamilyId, params: FamilyParams, y, z) -> Point:
    """Map a point (y, z) of the family curve C to the Weierstrass model."""
    require_nondegenerate(family, params)
    y, z = as_rational(y), as_rational(z)
    if conic_value(family, params, y, z) != 0:
        raise DomainError(f"({y}, {z}) is not on the {family} curve")
    a, b, c = params
    what = f"{family} forward map"
    if family is F1:
        d = _nonzero(b * y + c, "by+c", what)
        X = 3 * a * b * c * (3 * a * c * y + 6 * a * c * z - b**2 * y + 2 * b * c) / d
        Y = 27 * a**2 * b * c**2 * (
            a * b * c * y**2 + 3 * a * b * c * y * z - b**3 * y * z - a * c**2 * y
            - a * c**2 * z + b**2 * c * y - b**2 * c * z - b * c**2
        ) / d**2
        return Point(X, Y)
    _nonzero(y, "y", what)
    if family is F2:
        X = c * (a**2 * b * y**2 * z + a**2 * c * y**2 + a * b * c * z + b**2 * c) / y**2
        Y = b * c**2 * (
            a**3 * y**3 * z + a**2 * b * y**3 + a**2 * b * y**2 * z + 2 * a**2 * c * y**2
            + a**2 * c * y * z + a * b * c * y + a * b * c * z + b**2 * c
        ) / y**3
    elif family is F3:
        X = c**2 * (a * b * y**2 * z + 2 * a * c * y**2 + c**2) / y**2
        Y = c**4 * (a * b * y**3 + a * b * y**2 * z + 3 * a * c * y**2 + c**2) / y**3
    else:
        X = (
            2 * a**3 * c * y**2 - a**2 * b**2 * y**2 - a**2 * b * c * z + a * b**3 * z
            + a**2 * c**2 - 2 * a * b**2 * c + b**4
        ) / y**2
        Y1 = (
            3 * a**3 * c * y**2 - a**2 * b**2 * y**2 + a**2 * b**2 * y * z - a**2 * b * c * y
            - a**2 * b * c * z + a * b**3 * y + a * b**3 * z + a**2 * c**2 - 2 * a * b**2 * c + b**4
        )
        Y = (a * c - b**2) * Y1 / y**3
    return Point(X, Y)


def inverse_denominators(family: FamilyId, params: FamilyParams, X) -> dict[str, Fraction]:
    """The factors whose vanishing makes ``phi_inverse`` undefined at this X."""
    a, b, c = params
    if family is F1:
        return {"X-9a^2c^2+3ab^2c": X - 9 * a**2 * c**2 + 3 * a * b**2 * c}
    if family is F2:
        return {
            "X^2-2a^2c^2X+a^4c^4-2a^3b^2c^3": a**4 * c**4 - 2 * a**3 * b**2 * c**3 - 2 * X * a**2 * c**2 + X**2,
            "X^2-2a^2c^2X+a^4c^4+4a^3b^2c^3": a**4 * c**4 + 4 * a**3 * b**2 * c**3 - 2 * X * a**2 * c**2 + X**2,
        }
    if family is F3:
        return {"X+ac^3": X + a * c**3, "X-2ac^3": X - 2 * a * c**3}
    return {"X+a^3c-2a^2b^2": a**3 * c - 2 * a**2 * b**2 + X, "X-2a^3c+a^2b^2": -2 * a**3 * c + a**2 * b**2 + X}


def phi_inverse(family: FamilyId, params: FamilyParams, X, Y) -> tuple[Fraction, Fraction]:
    """Map a Weierstrass point back to (y, z) on the family curve C."""
    curve = curve_for_family(family, params)
    X, Y = as_rational(X), as_rational(Y)
    if not curve.on_curve(Point(X, Y)):
        raise DomainError(f"({X}, {Y}) is not on {curve}")
    for label, value in inverse_denominators(family, params, X).items():
        _nonzero(value, label, f"{family} inverse map")
    a, b, c = params
    if family is F1:
        d = X - 9 * a**2 * c**2 + 3 * a * b**2 * c
        y = -c * (
            108 * a**3 * b**2 * c**3 - 18 * a**2 * b**4 * c**2 + 9 * X * a**2 * c**2
            - 3 * X * a * b**2 * c + 6 * Y * a * c + X**2
        ) / (b * d**2)
        z = -(9 * a**2 * b**2 * c**2 + 3 * X * a * c + Y) / (3 * b * a * d)
    elif family is F2:
        d1, d2 = inverse_denominators(family, params, X).values()
        y = b * c * (-a**3 * c**3 + a**2 * b**2 * c**2 + X * a * c + Y) / d1
        z = 2 * b * c * (-2 * a**3 * c**3 - a**2 * b**2 * c**2 + 2 * X * a * c + Y) / d2
    elif family is F3:
        y = c**2 * (Y + a * b * c**4) / ((X + a * c**3) * (X - 2 * a * c**3))
        z = 2 * c**2 * (Y - a * b * c**4) / (X + a * c**3) ** 2
    else:
        d1 = a**3 * c - 2 * a**2 * b**2 + X
        d2 = -2 * a**3 * c + a**2 * b**2 + X
        y = -(a * c - b**2) * (-2 * a**4 * b * c + a**3 * b**3 + X * a * b - Y) / (d1 * d2)
        z = -2 * (a * c - b**2) * (-a**4 * b * c - a**3 * b**3 + 2 * X * a * b - Y) / d1**2
    return y, z


# -- seeds and closed-form multiples ----------------------------------------

def seed_points(family: FamilyId, params: FamilyParams) -> list[Point]:
    """Known rational points: [P0, P1] for F1 and F4, [P] for F2 and F3."""
    require_nondegenerate(family, params)
    a, b, c = params
    if family is F1:
        return [Point(-3 * a * b**2 * c, 0), Point(6 * a * b**2 * c, 27 * a**2 * b**2 * c**2)]
    if family is F2:
        return [Point(-a**2 * c**2, -c**2 * (2 * a * c - b**2) * a**2)]
    if family is F3:
        return [Point(2 * a * c**3, -a * b * c**4)]
    return [Point(2 * a**3 * c - a**2 * b**2, 0), Point(-a**3 * c, a**3 * b * (3 * a * c - b**2))]


def generator_seed(family: FamilyId, params: FamilyParams) -> Point:
    """The seed whose multiples are walked: P1 (F1, F4) or P (F2, F3)."""
    return seed_points(family, params)[-1]


MULTIPLE_LABELS: dict[FamilyId, tuple[str, ...]] = {
    F1: ("P2", "P3", "P4", "P5", "P6", "P7", "P8"),
    F2: ("[2]P", "[3]P"),
    F3: ("[2]P",),
    F4: ("P2",),
}


def group_law_multiple(family: FamilyId, params: FamilyParams, label: str) -> Point:
    """The labelled point computed with the chord-tangent law.

    F1: P2..P4 = [2..4]P1 and P5..P8 = -(P0 + P1..P4).  Elsewhere
    ``[n]P`` / ``Pn`` is the n-th multiple of the generator seed.
    """
    if label not in MULTIPLE_LABELS[family]:
        raise ValueError(f"label {label!r} not defined for {family}; expected one of {MULTIPLE_LABELS[family]}")
    curve = curve_for_family(family, params)
    seed = generator_seed(family, params)
    if family is F1:
        i = int(label[1:])
        P0 = seed_points(family, params)[0]
        if i <= 4:
            return curve.scalar_mul(i, seed)
        return -curve.add(P0, curve.scalar_mul(i - 4, seed))
    n = int(label[1]) if label.startswith("[") else int(label[1:])
    return curve.scalar_mul(n, seed)


def _ratio(num, den, what) -> Fraction:
    if den == 0:
        raise ExceptionalPointError(f"closed form for {what} has a vanishing denominator", what)
    return num / den


def _f1_templates(a, b, c) -> dict[str, Callable[[], tuple[Fraction, Fraction]]]:
    ac = a * c
    b2 = b * b
    d2 = ac**2 + 4 * ac * b2 - b2**2
    d3 = ac**2 - 6 * ac * b2 + b2**2
    q4 = ac**4 - 20 * ac**3 * b2 + 6 * ac**2 * b2**2 - 4 * ac * b2**3 + b2**4
    X4 = (ac**7 - 45 * ac**6 * b2 + 365 * ac**5 * b2**2 - 121 * ac**4 * b2**3
          + 307 * ac**3 * b2**4 - 151 * ac**2 * b2**5 + 31 * ac * b2**6 - 3 * b2**7)
    Y4 = (ac**8 + 80 * ac**7 * b2 - 180 * ac**6 * b2**2 + 656 * ac**5 * b2**3
          - 282 * ac**4 * b2**4 - 80 * ac**3 * b2**5 + 76 * ac**2 * b2**6 - 16 * ac * b2**7 + b2**8)
    X8 = (47 * ac**8 + 328 * ac**7 * b2 - 460 * ac**6 * b2**2 - 1096 * ac**5 * b2**3
          + 1290 * ac**4 * b2**4 - 392 * ac**3 * b2**5 + 20 * ac**2 * b2**6 + 8 * ac * b2**7 - b2**8)
    Y8 = Y4
    s3 = ac**4 + 24 * ac**3 * b2 - 22 * ac**2 * b2**2 + 16 * ac * b2**3 - 3 * b2**4
    # P3, P4, P7, P8 carry the opposite Y sign to the commonly quoted closed forms,
    # which describe -[3]P1, -[4]P1 and the points derived from them.
    return {
        "P2": lambda: (
            3 * (3 * ac - b2) * (ac - 3 * b2) / 4,
            -27 * (ac - b2) * d2 / 8,
        ),
        "P3": lambda: (
            _ratio(6 * a * b2 * c * (13 * ac**4 + 24 * ac**3 * b2 - 22 * ac**2 * b2**2 + b2**4), d3**2, "P3"),
            _ratio(27 * a**2 * b2 * c**2 * (3 * ac - b2) * (ac + b2) * s3, d3**3, "P3"),
        ),
        "P4": lambda: (
            _ratio(3 * (3 * ac - b2) * X4, 16 * (ac - b2) ** 2 * d2**2, "P4"),
            _ratio(-27 * q4 * Y4, 64 * (ac - b2) ** 3 * d2**3, "P4"),
        ),
        "P5": lambda: (3 * ac * (3 * ac - b2), 27 * ac**3),
        "P6": lambda: (
            _ratio(3 * a * b2 * c * (11 * ac**2 + 2 * ac * b2 - b2**2), (ac - b2) ** 2, "P6"),
            _ratio(-54 * d2 * ac**3 * b2, (ac - b2) ** 3, "P6"),
        ),
        "P7": lambda: (
            _ratio(
                3 * ac * (3 * ac**5 - 45 * ac**4 * b2 + 102 * ac**3 * b2**2 - 34 * ac**2 * b2**3 + 7 * ac * b2**4 - b2**5),
                (ac + b2) ** 2 * (3 * ac - b2) ** 2, "P7",
            ),
            _ratio(27 * ac**3 * s3 * d3, (3 * ac - b2) ** 3 * (ac + b2) ** 3, "P7"),
        ),
        "P8": lambda: (
            _ratio(3 * a * b2 * c * X8, q4**2, "P8"),
            _ratio(-108 * ac**3 * b2 * (ac - b2) * d2 * Y8, q4**3, "P8"),
        ),
    }


def expected_multiple(family: FamilyId, params: FamilyParams, label: str) -> Point:
    """Closed-form coordinates of a labelled multiple, used to cross-check the group law."""
    if label not in MULTIPLE_LABELS[family]:
        raise ValueError(f"label {label!r} not defined for {family}; expected one of {MULTIPLE_LABELS[family]}")
    require_nondegenerate(family, params)
    a, b, c = params
    if family is F1:
        return Point(*_f1_templates(a, b, c)[label]())
    if family is F2:
        if label == "[2]P":
            return Point(2 * a**2 * c**2, a**2 * c**2 * (2 * a * c - b**2))
        return Point(
            Fraction(7, 9) * a**2 * c**2 - Fraction(16, 9) * a * b**2 * c + Fraction(4, 9) * b**4,
            -(2 * a * c - b**2) * (5 * a**2 * c**2 - 32 * a * b**2 * c + 8 * b**4) / 27,
        )
    if family is F3:
        return Point(
            a * c**3 * (81 * a * c - 16 * b**2) / (4 * b**2),
            c**4 * a * (729 * a**2 * c**2 - 216 * a * b**2 * c + 8 * b**4) / (8 * b**3),
        )
    return Point(2 * a**3 * c, -3 * c * b * a**4 + a**3 * b**3)


__all__ = [
    "FamilyId", "FamilyParams", "Solution", "F1", "F2", "F3", "F4", "IDENTITY",
    "G_value", "f_value", "recover_x", "check_solution", "verify_solution",
    "DEGENERATE_CASES", "degenerate_case", "require_nondegenerate",
    "curve_coefficients", "curve_for_family", "paper_discriminant",
    "conic", "conic_value", "phi_forward", "phi_inverse", "inverse_denominators",
    "seed_points", "generator_seed", "MULTIPLE_LABELS", "group_law_multiple", "expected_multiple",
]
