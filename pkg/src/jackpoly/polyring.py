"""Sparse polynomials over Q(alpha) and truncated Cauchy-type kernels."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .exactfield import ONE, ZERO, ALPHA, AlphaFraction, AlphaPolynomial, normalize, rising_factorial

__all__ = [
    "SparsePoly",
    "TruncatedBiSeries",
    "TruncationError",
    "poly_arith",
    "partial_derivative",
    "evaluate",
    "kernel_factor",
    "omega_kernel",
    "symmetric_kernel",
    "coefficient_of_y",
    "swap_xy",
    "JSON_VERSION",
]

JSON_VERSION = 1

Exponents = tuple  # tuple[int, ...]


class TruncationError(ValueError):
    """A coefficient was requested beyond the degree a series was built to."""


def _grlex_key(e):
    return (sum(e), e)


class SparsePoly:
    """Polynomial in ``n`` variables, stored as ``{exponents: coefficient}``.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponents, AlphaFraction] | None = None):
        self.n = n
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent vector {e} for {n} variables")
                c = AlphaFraction._coerce(c)
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, terms):
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "SparsePoly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "SparsePoly":
        return cls._raw(n, {(0,) * n: ONE})

    @classmethod
    def constant(cls, n: int, c) -> "SparsePoly":
        c = AlphaFraction._coerce(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff=ONE) -> "SparsePoly":
        return cls(len(exponents), {tuple(exponents): coeff})

    @classmethod
    def variable(cls, n: int, i: int) -> "SparsePoly":
        """The variable x_i (1-based)."""
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): ONE})

    # -- queries -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> AlphaFraction:
        return self.terms.get((0,) * self.n, ZERO)

    def coefficient(self, exponents: Sequence[int]) -> AlphaFraction:
        return self.terms.get(tuple(exponents), ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_component(self, d: int) -> "SparsePoly":
        return SparsePoly._raw(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def sorted_terms(self):
        """Terms in descending graded lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other):
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.n, other)
        self._check(other)
        r = dict(self.terms)
        for e, c in other.terms.items():
            v = r.get(e)
            if v is None:
                r[e] = c
            else:
                v = v + c
                if v:
                    r[e] = v
                else:
                    del r[e]
        return SparsePoly._raw(self.n, r)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            other = SparsePoly.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SparsePoly":
        c = AlphaFraction._coerce(c)
        if not c:
            return SparsePoly.zero(self.n)
        if c.is_one():
            return self
        return SparsePoly._raw(self.n, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            self._check(other)
            return SparsePoly._raw(self.n, _mul_terms(self.terms, other.terms))
        other = AlphaFraction._coerce(other)
        if other is NotImplemented:
            return other
        return self.scale(other)

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, c):
        return self.scale(ONE / AlphaFraction._coerce(c))

    def __pow__(self, k: int):
        r = SparsePoly.one(self.n)
        for _ in range(k):
            r = r * self
        return r

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- substitutions -------------------------------------------------------
    def map_exponents(self, fn: Callable[[Exponents], Exponents], n: int | None = None) -> "SparsePoly":
        """Apply an injective map on exponent vectors."""
        return SparsePoly._raw(self.n if n is None else n, {fn(e): c for e, c in self.terms.items()})

    def permute_variables(self, perm: Sequence[int]) -> "SparsePoly":
        """Substitute x_i -> x_{perm[i]} (0-based images)."""
        def move(e):
            out = [0] * self.n
            for i, k in enumerate(e):
                out[perm[i]] = k
            return tuple(out)
        return self.map_exponents(move)

    def is_symmetric(self) -> bool:
        for i in range(self.n - 1):
            for e, c in self.terms.items():
                s = list(e)
                s[i], s[i + 1] = s[i + 1], s[i]
                if self.terms.get(tuple(s)) != c:
                    return False
        return True

    def set_last_zero(self) -> "SparsePoly":
        """Substitute x_n = 0 and drop the last variable."""
        return SparsePoly._raw(self.n - 1, {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0})

    def embed(self, n: int, offset: int = 0) -> "SparsePoly":
        """View as a polynomial in ``n`` variables, occupying slots offset.."""
        pre, post = (0,) * offset, (0,) * (n - offset - self.n)
        return SparsePoly._raw(n, {pre + e + post: c for e, c in self.terms.items()})

    def specialize_alpha(self, a) -> dict:
        """Exponents -> rational values at alpha = a (zeros dropped)."""
        out = {}
        for e, c in self.terms.items():
            v = c(a)
            if v:
                out[e] = v
        return out

    # -- rendering -----------------------------------------------------------
    def _names(self, names):
        if names is not None:
            return names
        return [f"x{i + 1}" for i in range(self.n)]

    def to_text(self, names: Sequence[str] | None = None, alpha=None) -> str:
        """Plain text, e.g. ``(α+2)·x2``; ``alpha`` specializes coefficients."""
        names = self._names(names)
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = "·".join(v if k == 1 else f"{v}^{k}" for v, k in zip(names, e) if k)
            out.append(_text_term(c if alpha is None else c(alpha), mono))
        s = out[0]
        for t in out[1:]:
            s += t if t.startswith("-") else "+" + t
        return s

    def to_latex(self, names: Sequence[str] | None = None, alpha=None) -> str:
        if names is None:
            names = [f"x_{{{i + 1}}}" for i in range(self.n)]
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = " ".join(v if k == 1 else f"{v}^{{{k}}}" for v, k in zip(names, e) if k)
            out.append(_latex_term(c if alpha is None else c(alpha), mono))
        s = out[0]
        for t in out[1:]:
            s += t if t.startswith("-") else "+" + t
        return s

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"SparsePoly({self.n}, {self.to_text()})"

    def to_json_obj(self) -> dict:
        terms = []
        for e, c in self.sorted_terms():
            terms.append({
                "exponents": list(e),
                "coeff": {
                    "num": [_json_rat(q) for q in c.numerator.coefficients],
                    "den": [_json_rat(q) for q in c.denominator.coefficients],
                },
            })
        return {"version": JSON_VERSION, "n": self.n, "terms": terms}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_obj(), **kw)

    @classmethod
    def from_json_obj(cls, obj) -> "SparsePoly":
        if isinstance(obj, list):
            terms, n = obj, None
        else:
            if obj.get("version", JSON_VERSION) != JSON_VERSION:
                raise ValueError(f"unsupported polynomial JSON version {obj.get('version')}")
            terms, n = obj["terms"], obj.get("n")
        out = {}
        for t in terms:
            e = tuple(int(k) for k in t["exponents"])
            if n is None:
                n = len(e)
            num = AlphaPolynomial([Fraction(q) for q in t["coeff"]["num"]])
            den = AlphaPolynomial([Fraction(q) for q in t["coeff"]["den"]])
            c = normalize(num, den)
            if e in out:
                raise ValueError(f"duplicate exponent vector {e}")
            out[e] = c
        return cls(n if n is not None else 0, out)

    @classmethod
    def from_json(cls, text: str) -> "SparsePoly":
        return cls.from_json_obj(json.loads(text))


def _json_rat(q: Fraction):
    return q.numerator if q.denominator == 1 else str(q)


def _text_term(c, mono: str) -> str:
    if not isinstance(c, AlphaFraction):  # specialized rational
        c = AlphaFraction.from_rational(c)
    if not mono:
        return str(c)
    if c.is_one():
        return mono
    if (-c).is_one():
        return "-" + mono
    if c.is_monomial_like():
        return f"{c}·{mono}"
    neg = c._num[-1] < 0
    return f"-({-c})·{mono}" if neg else f"({c})·{mono}"


def _latex_term(c, mono: str) -> str:
    if not isinstance(c, AlphaFraction):
        c = AlphaFraction.from_rational(c)
    if not mono:
        return c.to_latex()
    if c.is_one():
        return mono
    if (-c).is_one():
        return "-" + mono
    if c.is_monomial_like() or c._den != (1,):
        return f"{c.to_latex()} {mono}"
    neg = c._num[-1] < 0
    if neg:
        return f"-\\left({(-c).to_latex()}\\right) {mono}"
    return f"\\left({c.to_latex()}\\right) {mono}"


def _mul_terms(a: Mapping, b: Mapping, keep: Callable | None = None) -> dict:
    acc: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if keep is not None and not keep(e):
                continue
            c = ca * cb
            v = acc.get(e)
            acc[e] = c if v is None else v + c
    return {e: c for e, c in acc.items() if c}


# ---------------------------------------------------------------------------
# operations on polynomials

def poly_arith(f: SparsePoly, g: SparsePoly, op: str) -> SparsePoly:
    if f.n != g.n:
        raise ValueError(f"variable count mismatch: {f.n} vs {g.n}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


def partial_derivative(f: SparsePoly, i: int) -> SparsePoly:
    """d/dx_i with 1-based ``i``."""
    if not 1 <= i <= f.n:
        raise IndexError(f"variable index {i} out of range 1..{f.n}")
    k = i - 1
    out = {}
    for e, c in f.terms.items():
        m = e[k]
        if m:
            d = list(e)
            d[k] = m - 1
            out[tuple(d)] = c * m
    return SparsePoly._raw(f.n, out)


def evaluate(f: SparsePoly, point: Sequence) -> AlphaFraction:
    if len(point) != f.n:
        raise ValueError(f"point has {len(point)} coordinates, expected {f.n}")
    pt = [AlphaFraction._coerce(v) for v in point]
    powers = [dict() for _ in pt]
    total = ZERO
    for e, c in f.terms.items():
        v = c
        for i, k in enumerate(e):
            if k:
                p = powers[i].get(k)
                if p is None:
                    p = powers[i][k] = pt[i] ** k
                v = v * p
                if not v:
                    break
        total = total + v
    return total


# ---------------------------------------------------------------------------
# truncated bi-series

class TruncatedBiSeries:
    """Power series in x_1..x_n, y_1..y_m kept up to x-degree ``cap``.

    ``poly`` holds the terms as a :class:`SparsePoly` in n + m variables,
    x's first.  Every term is bi-homogeneous (x-degree equals y-degree).
    """

    __slots__ = ("n", "m", "cap", "poly")

    def __init__(self, n: int, cap: int, poly: SparsePoly, m: int | None = None):
        self.n = n
        self.m = n if m is None else m
        self.cap = cap
        if poly.n != self.n + self.m:
            raise ValueError("bi-series polynomial has the wrong variable count")
        self.poly = poly

    @classmethod
    def one(cls, n: int, cap: int, m: int | None = None) -> "TruncatedBiSeries":
        m = n if m is None else m
        return cls(n, cap, SparsePoly.one(n + m), m)

    def x_degree(self, e) -> int:
        return sum(e[: self.n])

    def __mul__(self, other: "TruncatedBiSeries") -> "TruncatedBiSeries":
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("bi-series shape mismatch")
        cap = min(self.cap, other.cap)
        n = self.n
        terms = _mul_terms(self.poly.terms, other.poly.terms, keep=lambda e: sum(e[:n]) <= cap)
        return TruncatedBiSeries(n, cap, SparsePoly._raw(n + self.m, terms), self.m)

    def truncate(self, cap: int) -> "TruncatedBiSeries":
        if cap > self.cap:
            raise TruncationError(f"cannot extend a series of cap {self.cap} to {cap}")
        n = self.n
        terms = {e: c for e, c in self.poly.terms.items() if sum(e[:n]) <= cap}
        return TruncatedBiSeries(n, cap, SparsePoly._raw(n + self.m, terms), self.m)

    def is_bihomogeneous(self) -> bool:
        n = self.n
        return all(sum(e[:n]) == sum(e[n:]) for e in self.poly.terms)

    def __eq__(self, other):
        if isinstance(other, TruncatedBiSeries):
            return (self.n, self.m, self.cap) == (other.n, other.m, other.cap) and self.poly == other.poly
        return NotImplemented

    def names(self):
        return [f"x{i + 1}" for i in range(self.n)] + [f"y{i + 1}" for i in range(self.m)]

    def __str__(self):
        return self.poly.to_text(self.names()) + f" + O(deg>{self.cap})"

    def __repr__(self):
        return f"TruncatedBiSeries(n={self.n}, m={self.m}, cap={self.cap}, terms={len(self.poly)})"


def kernel_factor(c, i: int, j: int, D: int, n: int, m: int | None = None) -> TruncatedBiSeries:
    """(1 - x_i y_j)^(-c) through x-degree D; indices are 1-based."""
    if D < 0:
        raise ValueError("cap must be nonnegative")
    m = n if m is None else m
    if not (1 <= i <= n and 1 <= j <= m):
        raise IndexError("kernel factor index out of range")
    c = AlphaFraction._coerce(c)
    terms = {}
    for k in range(D + 1):
        e = [0] * (n + m)
        e[i - 1] = k
        e[n + j - 1] = k
        coeff = rising_factorial(c, k)
        if coeff:
            terms[tuple(e)] = coeff
    return TruncatedBiSeries(n, D, SparsePoly._raw(n + m, terms), m)


def omega_kernel(n: int, D: int) -> TruncatedBiSeries:
    """prod_i 1/(1-x_i y_i) * prod_{i,j} (1-x_i y_j)^(-1/alpha), truncated."""
    if n < 1 or D < 0:
        raise ValueError("need n >= 1 and D >= 0")
    inv_alpha = ONE / ALPHA
    s = TruncatedBiSeries.one(n, D)
    for i in range(1, n + 1):
        s = s * kernel_factor(ONE, i, i, D, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            s = s * kernel_factor(inv_alpha, i, j, D, n)
    return s


def symmetric_kernel(n: int, m: int, c, D: int) -> TruncatedBiSeries:
    """prod_{i<=n, j<=m} (1 - x_i y_j)^(-c), truncated."""
    if n < 1 or m < 1 or D < 0:
        raise ValueError("need n, m >= 1 and D >= 0")
    s = TruncatedBiSeries.one(n, D, m)
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            s = s * kernel_factor(c, i, j, D, n, m)
    return s


def coefficient_of_y(s: TruncatedBiSeries, gamma: Sequence[int]) -> SparsePoly:
    """The x-polynomial multiplying y^gamma."""
    gamma = tuple(gamma)
    if len(gamma) != s.m:
        raise ValueError(f"expected {s.m} y-exponents, got {len(gamma)}")
    if sum(gamma) > s.cap:
        raise TruncationError(f"|gamma|={sum(gamma)} exceeds the series cap {s.cap}")
    n = s.n
    return SparsePoly._raw(n, {e[:n]: c for e, c in s.poly.terms.items() if e[n:] == gamma})


def swap_xy(s: TruncatedBiSeries) -> TruncatedBiSeries:
    if s.n != s.m:
        raise ValueError("swap_xy needs equally many x and y variables")
    n = s.n
    return TruncatedBiSeries(n, s.cap, s.poly.map_exponents(lambda e: e[n:] + e[:n]))
