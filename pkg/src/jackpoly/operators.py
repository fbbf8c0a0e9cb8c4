"""Reflection, divided-difference, Cherednik and raising operators.

Every operator acts on a block of ``n`` consecutive variables starting at
``offset`` (0-based), so the same code drives x- and y-actions on the
2n-variable polynomials that hold truncated kernels.  Indices ``i, j``
are 1-based within the block.
"""

from __future__ import annotations

from .exactfield import ALPHA, AlphaFraction
from .polyring import SparsePoly


def _block(f: SparsePoly, n, offset):
    n = f.n - offset if n is None else n
    if offset < 0 or offset + n > f.n:
        raise ValueError("variable block out of range")
    return n


def _check_pair(i, j, n):
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise IndexError(f"need distinct indices in 1..{n}, got {i}, {j}")


def transpose_vars(f: SparsePoly, i: int, j: int, *, n: int | None = None, offset: int = 0) -> SparsePoly:
    """s_ij: exchange x_i and x_j."""
    n = _block(f, n, offset)
    _check_pair(i, j, n)
    a, b = offset + i - 1, offset + j - 1

    def sw(e):
        e = list(e)
        e[a], e[b] = e[b], e[a]
        return tuple(e)

    return f.map_exponents(sw)


def _n_monomial(e, a, b):
    """(x^e - s_ab x^e)/(x_a - x_b) as a list of (exponents, sign)."""
    p, q = e[a], e[b]
    if p == q:
        return []
    sign = 1
    if p < q:
        p, q = q, p
        sign = -1
    # x_a^p x_b^q - x_a^q x_b^p = (x_a x_b)^q (x_a^k - x_b^k), k = p - q
    out = []
    base = list(e)
    for t in range(p - q):
        base[a] = q + p - q - 1 - t
        base[b] = q + t
        out.append((tuple(base), sign))
    return out


def _accumulate(acc, e, c):
    v = acc.get(e)
    acc[e] = c if v is None else v + c


def N_op(f: SparsePoly, i: int, j: int, *, n: int | None = None, offset: int = 0) -> SparsePoly:
    """(f - s_ij f)/(x_i - x_j), computed monomial by monomial.

    Each monomial's difference quotient is itself a polynomial, so the
    quotient is exact by construction; tests check (x_i - x_j) N f = f - s f.
    """
    n = _block(f, n, offset)
    _check_pair(i, j, n)
    a, b = offset + i - 1, offset + j - 1
    acc: dict = {}
    for e, c in f.terms.items():
        for e2, sgn in _n_monomial(e, a, b):
            _accumulate(acc, e2, c if sgn > 0 else -c)
    return SparsePoly._raw(f.n, {e: c for e, c in acc.items() if c})


def _shift(e, k, by):
    e = list(e)
    e[k] += by
    return tuple(e)


def cherednik(f: SparsePoly, i: int, *, n: int | None = None, offset: int = 0) -> SparsePoly:
    """xi_i = alpha x_i d_i + sum_{j<i} N_ij x_j + sum_{j>i} x_j N_ij."""
    n = _block(f, n, offset)
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range 1..{n}")
    a = offset + i - 1
    acc: dict = {}
    for e, c in f.terms.items():
        if e[a]:
            _accumulate(acc, e, c * ALPHA * e[a])
        for j in range(1, n + 1):
            if j == i:
                continue
            b = offset + j - 1
            if j < i:
                # multiply by x_j first, then N_ij
                for e2, sgn in _n_monomial(_shift(e, b, 1), a, b):
                    _accumulate(acc, e2, c if sgn > 0 else -c)
            else:
                for e2, sgn in _n_monomial(e, a, b):
                    _accumulate(acc, _shift(e2, b, 1), c if sgn > 0 else -c)
    return SparsePoly._raw(f.n, {e: c for e, c in acc.items() if c})


def phi(f: SparsePoly, *, n: int | None = None, offset: int = 0) -> SparsePoly:
    """Phi f(x_1..x_n) = x_n f(x_n, x_1, ..., x_{n-1})."""
    n = _block(f, n, offset)
    lo, hi = offset, offset + n

    def move(e):
        blk = e[lo:hi]
        # x_1 -> x_n, x_k -> x_{k-1}; then times x_n
        new = blk[1:] + (blk[0] + 1,)
        return e[:lo] + new + e[hi:]

    return f.map_exponents(move)


def simple_reflection(f: SparsePoly, i: int) -> SparsePoly:
    """s_i = s_{i,i+1}."""
    return transpose_vars(f, i, i + 1)
