"""Recursive-descent parser for polynomial expressions.

Grammar::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := integer | integer '/' integer | symbol | '(' expr ')'

'^' binds tighter than '*', which binds tighter than '+' and '-'.  There
is no implicit multiplication and '/' only appears inside rational literals.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import PolyParseError
from .multipoly import MultiPoly

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class Token(NamedTuple):
    kind: str  # "int", "sym", "op", "end"
    text: str
    offset: int


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.lastindex is None:
            break
        num, sym, other = m.groups()
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if num is not None:
            tokens.append(Token("int", num, _byte_offset(text, start)))
        elif sym is not None:
            tokens.append(Token("sym", sym, _byte_offset(text, start)))
        elif other is not None:
            if other not in "+-*^()/":
                raise PolyParseError(f"unexpected character {other!r}", _byte_offset(text, start))
            tokens.append(Token("op", other, _byte_offset(text, start)))
        pos = m.end()
    tokens.append(Token("end", "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, text: str, allowed_vars: Iterable[str] | None):
        self.tokens = tokenize(text)
        self.pos = 0
        self.allowed = None if allowed_vars is None else set(allowed_vars)

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind != "op":
            raise PolyParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}", self.tok.offset)
        return self.advance()

    def parse(self) -> MultiPoly:
        result = self.expr()
        if self.tok.kind != "end":
            if self.tok.text == ")":
                raise PolyParseError("unbalanced ')'", self.tok.offset)
            raise PolyParseError(f"unexpected token {self.tok.text!r}", self.tok.offset)
        return result

    def expr(self) -> MultiPoly:
        negate = False
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> MultiPoly:
        result = self.factor()
        while self.tok.kind == "op" and self.tok.text == "*":
            self.advance()
            result = result * self.factor()
        return result

    def factor(self) -> MultiPoly:
        base = self.base()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            if self.tok.kind != "int":
                raise PolyParseError("exponent must be a non-negative integer", self.tok.offset)
            base = base ** int(self.advance().text)
        return base

    def base(self) -> MultiPoly:
        t = self.tok
        if t.kind == "int":
            self.advance()
            if self.tok.kind == "op" and self.tok.text == "/":
                self.advance()
                if self.tok.kind != "int":
                    raise PolyParseError("malformed rational literal", self.tok.offset)
                den = int(self.advance().text)
                if den == 0:
                    raise PolyParseError("zero denominator in rational literal", t.offset)
                return MultiPoly.const(Fraction(int(t.text), den))
            return MultiPoly.const(int(t.text))
        if t.kind == "sym":
            if self.allowed is not None and t.text not in self.allowed:
                raise PolyParseError(f"unknown symbol {t.text!r}", t.offset)
            self.advance()
            return MultiPoly.var(t.text)
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expr()
            if self.tok.kind == "end":
                raise PolyParseError("unbalanced '('", t.offset)
            self.expect(")")
            return inner
        if t.kind == "end":
            raise PolyParseError("unexpected end of input", t.offset)
        raise PolyParseError(f"unexpected token {t.text!r}", t.offset)


def parse_poly(text: str, allowed_vars: Iterable[str] | None = None) -> MultiPoly:
    """Parse ``text`` into a MultiPoly; ``allowed_vars=None`` accepts any symbol."""
    return _Parser(text, allowed_vars).parse()
