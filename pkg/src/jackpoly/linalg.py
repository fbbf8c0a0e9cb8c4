"""Dense Gauss-Jordan elimination over Q(alpha)."""

from __future__ import annotations

from typing import Sequence

from .exactfield import ONE, ZERO, AlphaFraction


class SingularSystemError(ArithmeticError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


def _size(c: AlphaFraction) -> int:
    return len(c._num) + len(c._den)


def _eliminate(rows: list[list[AlphaFraction]], ncols: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form on the first
    ``ncols`` columns.  Returns the pivot row for each column (-1 if none)."""
    pivots = [-1] * ncols
    r = 0
    for col in range(ncols):
        best = None
        for k in range(r, len(rows)):
            v = rows[k][col]
            if v and (best is None or _size(v) < _size(rows[best][col])):
                best = k
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r]
        inv = ONE / piv[col]
        if not inv.is_one():
            piv[:] = [v * inv if v else v for v in piv]
        for k in range(len(rows)):
            if k != r:
                fac = rows[k][col]
                if fac:
                    row = rows[k]
                    for t in range(col, len(row)):
                        pv = piv[t]
                        if pv:
                            row[t] = row[t] - fac * pv
        pivots[col] = r
        r += 1
    return pivots


def solve(A: Sequence[Sequence[AlphaFraction]], b: Sequence[AlphaFraction]) -> list[AlphaFraction]:
    """Unique solution of A x = b; A may have more rows than columns."""
    ncols = len(A[0]) if A else 0
    rows = [list(row) + [bi] for row, bi in zip(A, b)]
    pivots = _eliminate(rows, ncols)
    if any(p < 0 for p in pivots):
        raise SingularSystemError("linear system has no unique solution")
    for k in range(ncols, len(rows)):
        if rows[k][ncols]:
            raise InconsistentSystemError("linear system is inconsistent")
    return [rows[p][ncols] for p in pivots]


def inverse(A: Sequence[Sequence[AlphaFraction]]) -> list[list[AlphaFraction]]:
    n = len(A)
    rows = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(A)]
    pivots = _eliminate(rows, n)
    if any(p < 0 for p in pivots):
        raise SingularSystemError("matrix is singular")
    return [rows[pivots[i]][n:] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def matvec(A, x) -> list[AlphaFraction]:
    out = []
    for row in A:
        s = ZERO
        for a, v in zip(row, x):
            if a and v:
                s = s + a * v
        out.append(s)
    return out


def dot(x, y) -> AlphaFraction:
    s = ZERO
    for a, b in zip(x, y):
        if a and b:
            s = s + a * b
    return s
