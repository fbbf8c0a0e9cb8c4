"""Parser for the plain-text grammar used by the renderers.

Accepted syntax covers everything the renderers emit, plus a few
conveniences::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := power (('*' | '·' | '/' | <juxtaposition>) power)*
    power   := atom ['^' integer]
    atom    := integer | 'α' | 'alpha' | 'a' | x<k> | x_{k} | y<k> | '(' expr ')'

Juxtaposition binds like ``*`` and everything is left associative, so
``3α/(α+1)`` is ``(3α)/(α+1)``.  Division is only allowed by scalars.
"""

from __future__ import annotations

import re

from .exactfield import ONE, ALPHA, AlphaFraction
from .polyring import SparsePoly

__all__ = ["ParseError", "parse_fraction", "parse_poly"]


class ParseError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<alpha>alpha|α|\\alpha|a)|(?P<var>[xy])_?\{?(?P<idx>\d+)\}?"
    r"|(?P<op>\*\*|[-+*/^()·]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group("int") is not None:
            out.append(("int", int(m.group("int"))))
        elif m.group("alpha") is not None:
            out.append(("alpha", None))
        elif m.group("var") is not None:
            out.append((m.group("var"), int(m.group("idx"))))
        else:
            op = m.group("op")
            out.append(("op", "^" if op == "**" else ("*" if op == "·" else op)))
    return out


class _Parser:
    def __init__(self, tokens, n):
        self.toks = tokens
        self.i = 0
        self.n = n  # total variable count; y_k maps to slot n/2 + k

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        t = self.peek()
        self.i += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ParseError(f"expected {op!r}, got {t[1]!r}")

    def parse(self):
        v = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input: {self.peek()[1]!r}")
        return v

    def expr(self):
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.power()
                if val == "*":
                    acc = acc * rhs
                else:
                    acc = acc * _scalar_inverse(rhs)
            elif kind in ("int", "alpha", "x", "y") or (kind == "op" and val == "("):
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k = self.take()
            if k[0] == "op" and k[1] == "(":
                k = self.take()
                self.expect(")")
            if k[0] != "int":
                raise ParseError("exponent must be a nonnegative integer")
            r = SparsePoly.one(self.n)
            for _ in range(k[1]):
                r = r * base
            return r
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return SparsePoly.constant(self.n, AlphaFraction.from_rational(val))
        if kind == "alpha":
            return SparsePoly.constant(self.n, ALPHA)
        if kind in ("x", "y"):
            if self.n == 0:
                raise ParseError("variables are not allowed in a scalar")
            k = val - 1
            if kind == "y":
                k += self.n // 2
            if not 0 <= k < self.n or val < 1:
                raise ParseError(f"variable {kind}{val} out of range")
            return SparsePoly.variable(self.n, k + 1)
        if kind == "op" and val == "(":
            v = self.expr()
            self.expect(")")
            return v
        raise ParseError(f"unexpected token {val!r}")


def _scalar_inverse(p: SparsePoly):
    if not p.is_constant():
        raise ParseError("division by a non-constant polynomial")
    c = p.constant_term()
    if c.is_zero():
        raise ParseError("division by zero")
    return ONE / c


def parse_fraction(text: str) -> AlphaFraction:
    """Parse an element of Q(alpha), e.g. ``(α^2+3α)/(α+1)``."""
    p = _Parser(_tokenize(text), 0).parse()
    return p.constant_term()


def parse_poly(text: str, n: int) -> SparsePoly:
    """Parse a polynomial in x1..xn with Q(alpha) coefficients."""
    return _Parser(_tokenize(text), n).parse()
