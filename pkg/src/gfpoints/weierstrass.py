"""Short Weierstrass curves Y^2 = X^3 + A X + B over Q and their group law."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .rational import as_rational

# Rational torsion points have order at most 12 (Mazur).
MAZUR_BOUND = 12


@dataclass(frozen=True)
class Point:
    """An affine point (X, Y), or the identity when both coordinates are None."""

    X: Fraction | None = None
    Y: Fraction | None = None

    def __post_init__(self):
        if (self.X is None) != (self.Y is None):
            raise ValueError("a point needs both coordinates or neither")
        if self.X is not None:
            object.__setattr__(self, "X", as_rational(self.X))
            object.__setattr__(self, "Y", as_rational(self.Y))

    @property
    def is_identity(self) -> bool:
        return self.X is None

    def __neg__(self) -> "Point":
        if self.is_identity:
            return self
        return Point(self.X, -self.Y)

    def __iter__(self):
        return iter((self.X, self.Y))

    def __repr__(self):
        if self.is_identity:
            return "Point(O)"
        return f"Point({self.X}, {self.Y})"


IDENTITY = Point()


def curve_discriminant_core(A, B) -> Fraction:
    """4A^3 + 27B^2; zero exactly when the cubic has a repeated root."""
    A = as_rational(A)
    B = as_rational(B)
    return 4 * A ** 3 + 27 * B ** 2


@dataclass(frozen=True)
class EllipticCurve:
    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", as_rational(self.A))
        object.__setattr__(self, "B", as_rational(self.B))
        if curve_discriminant_core(self.A, self.B) == 0:
            raise DomainError(f"singular curve: 4A^3 + 27B^2 = 0 for A={self.A}, B={self.B}")

    def rhs(self, X) -> Fraction:
        return X ** 3 + self.A * X + self.B

    def discriminant(self) -> Fraction:
        """Standard discriminant -16(4A^3 + 27B^2)."""
        return -16 * curve_discriminant_core(self.A, self.B)

    def on_curve(self, p: Point) -> bool:
        if p.is_identity:
            return True
        return p.Y ** 2 == self.rhs(p.X)

    def _check(self, *points: Point):
        for p in points:
            if not self.on_curve(p):
                raise DomainError(f"{p!r} is not on {self}")

    def _add(self, p: Point, q: Point) -> Point:
        if p.is_identity:
            return q
        if q.is_identity:
            return p
        if p.X == q.X:
            if p.Y != q.Y or p.Y == 0:
                return IDENTITY
            slope = (3 * p.X ** 2 + self.A) / (2 * p.Y)
        else:
            slope = (q.Y - p.Y) / (q.X - p.X)
        X3 = slope * slope - p.X - q.X
        return Point(X3, slope * (p.X - X3) - p.Y)

    def add(self, p: Point, q: Point) -> Point:
        self._check(p, q)
        return self._add(p, q)

    def neg(self, p: Point) -> Point:
        self._check(p)
        return -p

    def scalar_mul(self, n: int, p: Point) -> Point:
        """[n]p by double-and-add; negative n multiplies -p."""
        self._check(p)
        if n < 0:
            n, p = -n, -p
        result = IDENTITY
        addend = p
        while n:
            if n & 1:
                result = self._add(result, addend)
            n >>= 1
            if n:
                addend = self._add(addend, addend)
        return result

    def multiples(self, p: Point, count: int) -> list[Point]:
        """[[1]p, [2]p, ..., [count]p] by repeated addition."""
        self._check(p)
        out = []
        acc = IDENTITY
        for _ in range(count):
            acc = self._add(acc, p)
            out.append(acc)
        return out

    def torsion_order(self, p: Point) -> int | None:
        """Order of p if at most 12, else None (p then has infinite order)."""
        self._check(p)
        acc = IDENTITY
        for n in range(1, MAZUR_BOUND + 1):
            acc = self._add(acc, p)
            if acc.is_identity:
                return n
        return None

    def __str__(self):
        return f"Y^2 = X^3 + ({self.A})X + ({self.B})"


def on_curve(curve: EllipticCurve, p: Point) -> bool:
    return curve.on_curve(p)


def add(curve: EllipticCurve, p: Point, q: Point) -> Point:
    return curve.add(p, q)


def scalar_mul(curve: EllipticCurve, n: int, p: Point) -> Point:
    return curve.scalar_mul(n, p)


def torsion_order(curve: EllipticCurve, p: Point) -> int | None:
    return curve.torsion_order(p)


def discriminant_standard(curve: EllipticCurve) -> Fraction:
    return curve.discriminant()
