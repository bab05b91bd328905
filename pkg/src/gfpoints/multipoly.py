"""Sparse multivariate polynomials over Q.

A polynomial is a map from exponent vectors to nonzero Fraction
coefficients over an ordered tuple of variable names.  Variables are kept
in a fixed global order (a, b, c, x, y, z, t, then anything else
alphabetically) and unused variables are dropped, so two polynomials are
equal exactly when their term maps are equal.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .rational import as_rational

_PREFERRED_ORDER = ("a", "b", "c", "x", "y", "z", "t")


def var_sort_key(name: str):
    if name in _PREFERRED_ORDER:
        return (0, _PREFERRED_ORDER.index(name), "")
    return (1, 0, name)


def _order_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=var_sort_key))


class MultiPoly:
    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping[tuple, object] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable in {variables}")
        merged: dict[tuple, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != len(variables):
                raise ValueError("exponent vector length does not match variables")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            coeff = as_rational(coeff)
            if coeff:
                merged[tuple(exps)] = merged.get(tuple(exps), Fraction(0)) + coeff
        self._canonicalize(variables, merged)
        self._hash = None

    def _canonicalize(self, variables, terms):
        terms = {e: c for e, c in terms.items() if c}
        used = [i for i, _ in enumerate(variables) if any(e[i] for e in terms)]
        names = _order_vars(variables[i] for i in used)
        pos = [variables.index(n) for n in names]
        self.variables = names
        self.terms = {tuple(e[i] for i in pos): c for e, c in terms.items()}

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, value) -> "MultiPoly":
        return cls((), {(): value})

    @classmethod
    def var(cls, name: str) -> "MultiPoly":
        return cls((name,), {(1,): 1})

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @staticmethod
    def coerce(value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.const(value)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.variables

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.variables), Fraction(0))

    def degree_in(self, name: str) -> int:
        if name not in self.variables:
            return 0
        i = self.variables.index(name)
        return max(e[i] for e in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def _lift(self, variables: tuple[str, ...]) -> dict[tuple, Fraction]:
        pos = [variables.index(v) for v in self.variables]
        out = {}
        for exps, c in self.terms.items():
            full = [0] * len(variables)
            for i, e in zip(pos, exps):
                full[i] = e
            out[tuple(full)] = c
        return out

    def coefficients_in(self, name: str) -> dict[int, "MultiPoly"]:
        """Split as sum of coeff_k * name**k; returns {k: coeff_k}."""
        if name not in self.variables:
            return {0: self} if self.terms else {}
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1:]
        buckets: dict[int, dict] = {}
        for exps, c in self.terms.items():
            buckets.setdefault(exps[i], {})[exps[:i] + exps[i + 1:]] = c
        return {k: MultiPoly(rest, t) for k, t in buckets.items()}

    # -- arithmetic -------------------------------------------------------

    def _binary(self, other, sign):
        other = MultiPoly.coerce(other)
        variables = _order_vars(self.variables + other.variables)
        terms = self._lift(variables)
        for e, c in other._lift(variables).items():
            terms[e] = terms.get(e, Fraction(0)) + sign * c
        return MultiPoly(variables, terms)

    def __add__(self, other):
        return self._binary(other, 1)

    def __radd__(self, other):
        return self._binary(other, 1)

    def __sub__(self, other):
        return self._binary(other, -1)

    def __rsub__(self, other):
        return MultiPoly.coerce(other)._binary(self, -1)

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        other = MultiPoly.coerce(other)
        variables = _order_vars(self.variables + other.variables)
        lhs = self._lift(variables)
        rhs = other._lift(variables)
        terms: dict[tuple, Fraction] = {}
        for e1, c1 in lhs.items():
            for e2, c2 in rhs.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation and substitution -------------------------------------

    def eval(self, assignment: Mapping[str, object]) -> Fraction:
        missing = [v for v in self.variables if v not in assignment]
        if missing:
            raise KeyError(f"no value for variable(s) {', '.join(missing)}")
        values = [as_rational(assignment[v]) for v in self.variables]
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def partial_eval(self, assignment: Mapping[str, object]) -> "MultiPoly":
        """Substitute rational values for some variables, keep the rest symbolic."""
        keep = [i for i, v in enumerate(self.variables) if v not in assignment]
        values = {i: as_rational(assignment[v]) for i, v in enumerate(self.variables) if v in assignment}
        names = tuple(self.variables[i] for i in keep)
        terms: dict[tuple, Fraction] = {}
        for exps, c in self.terms.items():
            for i, v in values.items():
                if exps[i]:
                    c *= v ** exps[i]
            key = tuple(exps[i] for i in keep)
            terms[key] = terms.get(key, Fraction(0)) + c
        return MultiPoly(names, terms)

    def compose(self, mapping: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Replace each variable in ``mapping`` by the given polynomial."""
        result = MultiPoly.zero()
        power_cache: dict[tuple[str, int], MultiPoly] = {}
        for exps, c in self.terms.items():
            term = MultiPoly.const(c)
            for name, e in zip(self.variables, exps):
                if not e:
                    continue
                if name in mapping:
                    key = (name, e)
                    if key not in power_cache:
                        power_cache[key] = MultiPoly.coerce(mapping[name]) ** e
                    term = term * power_cache[key]
                else:
                    term = term * MultiPoly.var(name) ** e
            result = result + term
        return result

    def substitute_ratio(self, name: str, num: "MultiPoly", den: "MultiPoly", clear_power: int) -> "MultiPoly":
        """Return den**clear_power * self(name = num/den), expanded as a polynomial."""
        deg = self.degree_in(name)
        if clear_power < deg:
            raise ValueError(
                f"denominator not cleared: clear_power {clear_power} < degree {deg} in {name}"
            )
        num = MultiPoly.coerce(num)
        den = MultiPoly.coerce(den)
        num_pows = [MultiPoly.const(1)]
        den_pows = [MultiPoly.const(1)]
        for _ in range(clear_power):
            num_pows.append(num_pows[-1] * num)
            den_pows.append(den_pows[-1] * den)
        result = MultiPoly.zero()
        for k, coeff in self.coefficients_in(name).items():
            result = result + coeff * num_pows[k] * den_pows[clear_power - k]
        return result

    # -- comparison and display ------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                other = MultiPoly.const(other)
            else:
                return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


def substitute_ratio(p: MultiPoly, name: str, num, den, clear_power: int) -> MultiPoly:
    return p.substitute_ratio(name, num, den, clear_power)


def is_zero(p: MultiPoly) -> bool:
    return p.is_zero()
