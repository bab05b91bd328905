"""Streams of verified nontrivial solutions.

A stream walks [1]base, [2]base, ... on the family curve, maps each point
back to (y, z) on the family curve C, recovers x from G = 0 and emits the
triple.  Points that cannot produce an informative solution are skipped
and logged with a reason:

* ``exceptional-denominator:<factor>``  the inverse map is undefined there
* ``x-undefined``                       G = 0 has no finite x for this (y, z)
* ``zero-coordinate``                   F3 only: f(u) = au + b + c/u needs u != 0
* ``trivial``                           y == z
* ``duplicate``                         already emitted (possible only where the
                                        forward map is undefined on the image)

Negative multiples are not walked; they give mirrored solutions.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, ExceptionalPointError, StreamExhausted
from .families import (
    F3,
    FamilyId,
    FamilyParams,
    Solution,
    check_solution,
    curve_for_family,
    generator_seed,
    phi_inverse,
    recover_x,
)
from .weierstrass import IDENTITY, Point


def default_base(family: FamilyId, params: FamilyParams) -> Point:
    """P1 for F1/F4 and P for F2; [2]P for F3, where P itself is exceptional."""
    seed = generator_seed(family, params)
    if family is F3:
        return curve_for_family(family, params).scalar_mul(2, seed)
    return seed


@dataclass
class SolutionStream:
    family: FamilyId
    params: FamilyParams
    base: Point | None = None
    n: int = 0
    skips: list[tuple[int, str]] = field(default_factory=list)

    def __post_init__(self):
        self.curve = curve_for_family(self.family, self.params)
        if self.base is None:
            self.base = default_base(self.family, self.params)
        if not self.curve.on_curve(self.base):
            raise DomainError(f"base point {self.base!r} is not on {self.curve}")
        if self.base.is_identity:
            raise StreamExhausted("the identity cannot serve as a base point")
        self._current = IDENTITY
        self._seen: set[Solution] = set()

    def _pull_back(self, point: Point) -> Solution | str:
        try:
            y, z = phi_inverse(self.family, self.params, point.X, point.Y)
        except ExceptionalPointError as exc:
            return f"exceptional-denominator:{exc.which}"
        try:
            x = recover_x(self.family, y, z)
        except ExceptionalPointError:
            return "x-undefined"
        if self.family is F3 and x * y * z == 0:
            return "zero-coordinate"
        if y == z:
            return "trivial"
        reason = check_solution(self.family, self.params, x, y, z)
        if reason is not None:
            raise AssertionError(f"[{self.n}]base pulled back to a non-solution ({reason})")
        return Solution(x, y, z)

    def next_indexed(self) -> tuple[int, Solution]:
        while True:
            self.n += 1
            self._current = self.curve._add(self._current, self.base)
            if self._current.is_identity:
                raise StreamExhausted(
                    f"[{self.n}]base is the identity: the base point has finite order {self.n}"
                )
            outcome = self._pull_back(self._current)
            if isinstance(outcome, Solution):
                if outcome not in self._seen:
                    self._seen.add(outcome)
                    return self.n, outcome
                outcome = "duplicate"
            self.skips.append((self.n, outcome))

    def __iter__(self):
        return self

    def __next__(self) -> Solution:
        return self.next_indexed()[1]


def next_solution(stream: SolutionStream) -> Solution:
    return next(stream)


def generate(family: FamilyId, params: FamilyParams, count: int, base: Point | None = None) -> list[Solution]:
    if count < 1:
        raise ValueError("count must be at least 1")
    stream = SolutionStream(family, params, base)
    return [next(stream) for _ in range(count)]
