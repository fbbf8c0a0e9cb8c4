"""Exact arithmetic in Q(alpha).

Internally a fraction is a pair of integer-coefficient polynomials (tuples,
constant term first) with no common polynomial factor, joint integer content
1 and a positive leading denominator coefficient.  That pair is a canonical
form, so equality is tuple comparison.  The public view (``numerator`` /
``denominator``) rescales to the monic-denominator form over Q.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, factorial
from numbers import Rational
from typing import Sequence

__all__ = [
    "AlphaPolynomial",
    "AlphaFraction",
    "PoleError",
    "normalize",
    "field_arith",
    "rising_factorial",
    "evaluate_alpha",
    "ZERO",
    "ONE",
    "ALPHA",
]

IntPoly = tuple  # tuple[int, ...], constant term first


class PoleError(ZeroDivisionError):
    """Raised when a specialization hits a zero of a denominator."""


# ---------------------------------------------------------------------------
# integer polynomial kernels

def _trim(p):
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def _add(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = list(p)
    for i, c in enumerate(q):
        r[i] += c
    return _trim(r)


def _sub(p, q):
    r = list(p) + [0] * (len(q) - len(p))
    for i, c in enumerate(q):
        r[i] -= c
    return _trim(r)


def _mul(p, q):
    if not p or not q:
        return ()
    if len(p) == 1:
        c = p[0]
        return tuple(c * x for x in q)
    if len(q) == 1:
        c = q[0]
        return tuple(c * x for x in p)
    r = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                r[i + j] += a * b
    return tuple(r)


def _scale(p, c):
    return tuple(c * x for x in p) if c else ()


def _content(p):
    g = 0
    for c in p:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _primitive(p):
    g = _content(p)
    if p[-1] < 0:
        g = -g
    if g == 1:
        return p
    return tuple(c // g for c in p)


def _prem(a, b):
    """Pseudo-remainder of a by b (lc(b)^k * a mod b)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def _exact_div(a, b):
    """Quotient of integer polynomials; b must divide a exactly over Z."""
    if len(b) == 1:
        c = b[0]
        if c == 1:
            return a
        q = []
        for x in a:
            if x % c:
                raise ArithmeticError("inexact integer polynomial division")
            q.append(x // c)
        return tuple(q)
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c % lb:
            raise ArithmeticError("inexact integer polynomial division")
        c //= lb
        q[k] = c
        if c:
            for i, x in enumerate(b):
                r[k + i] -= c * x
    if any(r[:db]):
        raise ArithmeticError("inexact integer polynomial division")
    return tuple(q)


def _order_at_zero(p):
    k = 0
    while p[k] == 0:
        k += 1
    return k


def _pgcd(a, b):
    """Primitive gcd over Q of nonzero integer polynomials, positive lc."""
    if len(a) == 1 or len(b) == 1:
        return (1,)
    # alpha^k against anything
    if all(c == 0 for c in a[:-1]):
        k = min(len(a) - 1, _order_at_zero(b))
        return (0,) * k + (1,)
    if all(c == 0 for c in b[:-1]):
        k = min(len(b) - 1, _order_at_zero(a))
        return (0,) * k + (1,)
    if len(b) == 2 or len(a) == 2:
        lin, other = (b, a) if len(b) == 2 else (a, b)
        # root -b0/b1: homogeneous evaluation avoids fractions
        num, den = -lin[0], lin[1]
        deg = len(other) - 1
        val = 0
        for i, c in enumerate(other):
            val += c * num ** i * den ** (deg - i)
        return _primitive(lin) if val == 0 else (1,)
    if len(a) < len(b):
        a, b = b, a
    a, b = _primitive(a), _primitive(b)
    while b:
        a, b = b, _prem(a, b)
        if b:
            if len(b) == 1:
                return (1,)
            b = _primitive(b)
    return _primitive(a)


def _pow_int(p, k):
    r = (1,)
    for _ in range(k):
        r = _mul(r, p)
    return r


def _eval(p, x: Fraction) -> Fraction:
    r = Fraction(0)
    for c in reversed(p):
        r = r * x + c
    return r


# ---------------------------------------------------------------------------
# public types

class AlphaPolynomial:
    """Univariate polynomial in alpha with rational coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def _integral(self):
        """(integer tuple, positive scale) with self == tuple / scale."""
        den = 1
        for c in self.coefficients:
            den = den * c.denominator // gcd(den, c.denominator)
        return tuple(int(c * den) for c in self.coefficients), den

    def __eq__(self, other):
        if isinstance(other, AlphaPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"AlphaPolynomial({[str(c) for c in self.coefficients]})"

    def __str__(self):
        p, s = self._integral()
        body = _render_intpoly(p)
        return body if s == 1 else f"({body})/{s}"

    def __call__(self, a) -> Fraction:
        return _eval(self.coefficients, Fraction(a))


def _render_intpoly(p, symbol="α", latex=False) -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            mono = str(a)
        else:
            power = symbol if k == 1 else (f"{symbol}^{{{k}}}" if latex else f"{symbol}^{k}")
            mono = power if a == 1 else f"{a}{power}"
        parts.append((sign, mono))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, mono in parts[1:]:
        out += sign + mono
    return out


def _nterms(p) -> int:
    return sum(1 for c in p if c)


class AlphaFraction:
    """Element of Q(alpha) in canonical reduced form.

    Construct with :func:`normalize`, :meth:`from_rational` or arithmetic on
    the module constants; the raw constructor trusts its arguments.
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: IntPoly, den: IntPoly):
        self._num = num
        self._den = den
        self._hash = None

    # -- construction ------------------------------------------------------
    @classmethod
    def from_rational(cls, q) -> "AlphaFraction":
        if isinstance(q, int):
            return cls((q,) if q else (), (1,))
        q = Fraction(q)
        if q == 0:
            return ZERO
        return cls((q.numerator,), (q.denominator,))

    @classmethod
    def from_int_polys(cls, num: Sequence[int], den: Sequence[int] = (1,)) -> "AlphaFraction":
        return _reduce(_trim(tuple(num)), _trim(tuple(den)))

    @staticmethod
    def parse(text: str) -> "AlphaFraction":
        from .textparse import parse_fraction

        return parse_fraction(text)

    # -- views ---------------------------------------------------------------
    @property
    def numerator(self) -> AlphaPolynomial:
        lc = self._den[-1]
        return AlphaPolynomial([Fraction(c, lc) for c in self._num])

    @property
    def denominator(self) -> AlphaPolynomial:
        lc = self._den[-1]
        return AlphaPolynomial([Fraction(c, lc) for c in self._den])

    def is_zero(self) -> bool:
        return not self._num

    def is_one(self) -> bool:
        return self._num == (1,) and self._den == (1,)

    def is_rational(self) -> bool:
        return len(self._num) <= 1 and len(self._den) == 1

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} depends on alpha")
        return Fraction(self._num[0], self._den[0]) if self._num else Fraction(0)

    # -- coercion ------------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, AlphaFraction):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return AlphaFraction.from_rational(x)
        if isinstance(x, AlphaPolynomial):
            p, s = x._integral()
            return _reduce(p, (s,))
        return NotImplemented

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _add_frac(self, other)

    __radd__ = __add__

    def __neg__(self):
        return AlphaFraction(tuple(-c for c in self._num), self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _add_frac(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _add_frac(other, -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._mul_int(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _mul_frac(self, other)

    __rmul__ = __mul__

    def _mul_int(self, k: int) -> "AlphaFraction":
        if k == 0 or not self._num:
            return ZERO
        if k == 1:
            return self
        g = gcd(k, _content(self._den))
        return AlphaFraction(_scale(self._num, k // g), self._den if g == 1 else _exact_div(self._den, (g,)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _mul_frac(self, other.inverse())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _mul_frac(other, self.inverse())

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return AlphaFraction(_pow_int(self._num, k), _pow_int(self._den, k))

    def inverse(self) -> "AlphaFraction":
        if not self._num:
            raise ZeroDivisionError("inverse of zero in Q(alpha)")
        num, den = self._den, self._num
        if den[-1] < 0:
            num, den = tuple(-c for c in num), tuple(-c for c in den)
        return AlphaFraction(num, den)

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, AlphaFraction):
            return self._num == other._num and self._den == other._den
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self):
        return bool(self._num)

    def __reduce__(self):
        return (AlphaFraction, (self._num, self._den))

    # -- rendering -----------------------------------------------------------
    def __repr__(self):
        return f"AlphaFraction({self})"

    def __str__(self):
        num, den = self._num, self._den
        if den == (1,):
            return _render_intpoly(num)
        n = _render_intpoly(num)
        if _nterms(num) > 1:
            n = f"({n})"
        d = _render_intpoly(den)
        if _nterms(den) > 1 or (len(den) > 1 and den[-1] != 1):
            d = f"({d})"
        return f"{n}/{d}"

    def to_latex(self, symbol: str = r"\alpha") -> str:
        num, den = self._num, self._den
        n = _render_intpoly(num, symbol, latex=True)
        if den == (1,):
            return n
        d = _render_intpoly(den, symbol, latex=True)
        if num and num[-1] < 0 and _nterms(num) == 1:
            return f"-\\frac{{{n[1:]}}}{{{d}}}"
        return f"\\frac{{{n}}}{{{d}}}"

    def is_monomial_like(self) -> bool:
        """True when the rendering needs no parentheses as a coefficient."""
        return self._den == (1,) and _nterms(self._num) <= 1

    # -- specialization ------------------------------------------------------
    def __call__(self, a) -> Fraction:
        return evaluate_alpha(self, a)


def _reduce(num, den) -> AlphaFraction:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return ZERO
    if len(den) > 1:
        g = _pgcd(num, den)
        if len(g) > 1:
            num, den = _exact_div(num, g), _exact_div(den, g)
    return _finish(num, den)


def _finish(num, den) -> AlphaFraction:
    """Fix integer content and sign of an already coprime pair."""
    c = gcd(_content(num), _content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return AlphaFraction(num, den)


def _add_frac(a: AlphaFraction, b: AlphaFraction) -> AlphaFraction:
    if not a._num:
        return b
    if not b._num:
        return a
    an, ad, bn, bd = a._num, a._den, b._num, b._den
    if ad == bd:
        if ad == (1,):
            num = _add(an, bn)
            return AlphaFraction(num, ad) if num else ZERO
        num = _add(an, bn)
        if not num:
            return ZERO
        return _reduce(num, ad)
    if len(ad) == 1 and len(bd) == 1:
        l1, l2 = ad[0], bd[0]
        g = gcd(l1, l2)
        num = _add(_scale(an, l2 // g), _scale(bn, l1 // g))
        if not num:
            return ZERO
        return _finish(num, (l1 // g * l2,))
    g = _pgcd(ad, bd)
    if g == (1,):
        num = _add(_mul(an, bd), _mul(bn, ad))
        if not num:
            return ZERO
        return _finish(num, _mul(ad, bd))
    ad1, bd1 = _exact_div(ad, g), _exact_div(bd, g)
    num = _add(_mul(an, bd1), _mul(bn, ad1))
    if not num:
        return ZERO
    den = _mul(ad, bd1)
    g2 = _pgcd(num, g)
    if len(g2) > 1:
        num, den = _exact_div(num, g2), _exact_div(den, g2)
    return _finish(num, den)


def _mul_frac(a: AlphaFraction, b: AlphaFraction) -> AlphaFraction:
    an, ad, bn, bd = a._num, a._den, b._num, b._den
    if not an or not bn:
        return ZERO
    if len(ad) > 1 and len(bn) > 1:
        g = _pgcd(bn, ad)
        if len(g) > 1:
            bn, ad = _exact_div(bn, g), _exact_div(ad, g)
    if len(bd) > 1 and len(an) > 1:
        g = _pgcd(an, bd)
        if len(g) > 1:
            an, bd = _exact_div(an, g), _exact_div(bd, g)
    return _finish(_mul(an, bn), _mul(ad, bd))


ZERO = AlphaFraction((), (1,))
ONE = AlphaFraction((1,), (1,))
ALPHA = AlphaFraction((0, 1), (1,))


# ---------------------------------------------------------------------------
# top-level operations

def normalize(num: AlphaPolynomial, den: AlphaPolynomial) -> AlphaFraction:
    """Reduce ``num/den`` to canonical form."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    pn, sn = num._integral()
    pd, sd = den._integral()
    # num/den = (pn/sn)/(pd/sd) = (pn*sd)/(pd*sn)
    return _reduce(_scale(pn, sd), _scale(pd, sn))


def field_arith(a: AlphaFraction, b: AlphaFraction, op: str) -> AlphaFraction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def rising_factorial(c, k: int) -> AlphaFraction:
    """Coefficient of t^k in (1-t)^(-c), i.e. c(c+1)...(c+k-1)/k!."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    c = AlphaFraction._coerce(c)
    r = ONE
    for j in range(k):
        r = r * (c + j)
    return r / factorial(k)


def evaluate_alpha(f: AlphaFraction, a) -> Fraction:
    """Specialize alpha to the rational ``a``."""
    a = Fraction(a)
    den = _eval(f._den, a)
    if den == 0:
        raise PoleError(f"{f} has a pole at alpha={a}")
    return _eval(f._num, a) / den
