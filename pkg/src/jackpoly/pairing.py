"""Combinatorial scalar products and the verification suites built on them.

The nonsymmetric product is fixed by <x^eta, q_gamma> = delta, where the
q_gamma are the y^gamma coefficients of the truncated Cauchy kernel Omega.
The symmetric one by <m_lam, g_mu>_s = delta with g_mu read off the
symmetric kernel.  Both bases are homogeneous, so everything is done one
degree block at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .compositions import (
    Composition,
    cell_stats,
    cells,
    compositions_up_to,
    constants,
    distinct_permutations,
    enumerate_compositions,
    enumerate_partitions,
    partitions_up_to,
)
from .exactfield import ONE, ALPHA, ZERO, AlphaFraction, rising_factorial
from .jack import integral_F, symmetric_J
from .linalg import dot, inverse, transpose
from .polyring import SparsePoly, coefficient_of_y, omega_kernel, symmetric_kernel
from .report import Report, pmap

__all__ = [
    "DualBasis",
    "q_basis",
    "g_basis",
    "pair",
    "pair_symmetric",
    "verify_orthogonality",
    "verify_cauchy",
    "verify_symmetrization",
    "verify_las",
    "las_k",
]


@dataclass(frozen=True)
class DualBasis:
    """Per-degree change of basis for q_gamma (kind "q") or g_lam (kind "g").

    ``index[d]`` lists the basis labels of degree d; the same list labels
    the columns (monomials x^eta for q, m_lam for g).  ``matrix[d][r][k]``
    is the coefficient of column k in basis element r.
    """

    kind: str
    n: int
    cap: int
    index: dict
    polys: dict
    matrix: dict
    inverse: dict

    def column_vector(self, f: SparsePoly, d: int) -> list[AlphaFraction]:
        return [f.coefficient(lbl) for lbl in self.index[d]]

    def coordinates(self, g: SparsePoly, d: int) -> list[AlphaFraction]:
        """Coordinates of the degree-d part of ``g`` in this basis."""
        v = self.column_vector(g, d)
        # g_cols = M^T c  =>  c = (M^{-1})^T g_cols
        inv = self.inverse[d]
        m = len(v)
        out = []
        for r in range(m):
            s = ZERO
            for k in range(m):
                a = inv[k][r]
                if a and v[k]:
                    s = s + a * v[k]
            out.append(s)
        return out


def _build_dual(kind, n, cap, labels_by_degree, poly_of):
    index, polys, matrix, inv = {}, {}, {}, {}
    for d in range(cap + 1):
        labels = labels_by_degree(d)
        index[d] = labels
        rows = []
        for lbl in labels:
            p = poly_of(lbl)
            polys[lbl] = p
            rows.append([p.coefficient(col) for col in labels])
        matrix[d] = rows
        inv[d] = inverse(rows)
    return DualBasis(kind, n, cap, index, polys, matrix, inv)


@lru_cache(maxsize=None)
def q_basis(n: int, D: int) -> DualBasis:
    if D < 0:
        raise ValueError("cap must be nonnegative")
    omega = omega_kernel(n, D)
    return _build_dual("q", n, D, lambda d: enumerate_compositions(n, d), lambda g: coefficient_of_y(omega, g))


@lru_cache(maxsize=None)
def g_basis(n: int, D: int) -> DualBasis:
    if D < 0:
        raise ValueError("cap must be nonnegative")
    kern = symmetric_kernel(n, n, ONE / ALPHA, D)
    return _build_dual("g", n, D, lambda d: enumerate_partitions(n, d), lambda lam: coefficient_of_y(kern, lam))


def _check_degree(f: SparsePoly, basis: DualBasis):
    if f.n != basis.n:
        raise ValueError(f"polynomial in {f.n} variables, basis in {basis.n}")
    if f.degree() > basis.cap:
        raise ValueError(f"degree {f.degree()} exceeds the basis cap {basis.cap}")


def pair(f: SparsePoly, g: SparsePoly, basis: DualBasis) -> AlphaFraction:
    """<f, g> with <x^eta, q_gamma> = delta_{eta, gamma}."""
    if basis.kind != "q":
        raise ValueError("pair needs a q-basis")
    _check_degree(f, basis)
    _check_degree(g, basis)
    total = ZERO
    degrees = {sum(e) for e in f.terms} & {sum(e) for e in g.terms}
    for d in sorted(degrees):
        total = total + dot(basis.column_vector(f, d), basis.coordinates(g, d))
    return total


def pair_symmetric(f: SparsePoly, g: SparsePoly, basis: DualBasis) -> AlphaFraction:
    """<f, g>_s with <m_lam, g_mu>_s = delta_{lam, mu}."""
    if basis.kind != "g":
        raise ValueError("pair_symmetric needs a g-basis")
    for p in (f, g):
        _check_degree(p, basis)
        if not p.is_symmetric():
            raise ValueError("pair_symmetric needs symmetric polynomials")
    total = ZERO
    degrees = {sum(e) for e in f.terms} & {sum(e) for e in g.terms}
    for d in sorted(degrees):
        total = total + dot(basis.column_vector(f, d), basis.coordinates(g, d))
    return total


# ---------------------------------------------------------------------------
# orthogonality and norms

def _degree_block(args):
    n, D, d = args
    basis = q_basis(n, D)
    out = []
    for eta in enumerate_compositions(n, d):
        F = integral_F(eta)
        out.append((eta, basis.column_vector(F, d), basis.coordinates(F, d)))
    return out


def verify_orthogonality(n: int, D: int, jobs: int = 1) -> Report:
    """<F_eta, F_gamma> = delta * d_eta d'_eta for all |eta|, |gamma| <= D."""
    rep = Report("orthogonality", {"n": n, "D": D})
    blocks = pmap(_degree_block, [(n, D, d) for d in range(D + 1)], jobs)
    data = [item for block in blocks for item in block]
    for a, (eta, fvec, _) in enumerate(data):
        for gamma, gvec, gco in data[a:]:
            if sum(eta) == sum(gamma):
                value = dot(fvec, gco)
            else:
                value = ZERO  # distinct homogeneous blocks share no column
            if eta == gamma:
                k = constants(eta)
                rep.add("norm", {"eta": eta}, value, k.d * k.d_prime)
            else:
                rep.add("orthogonal", {"eta": eta, "gamma": gamma}, value, ZERO)
    return rep


# ---------------------------------------------------------------------------
# nonsymmetric Cauchy formula

def _cauchy_degree(args):
    n, d = args
    acc: dict = {}
    for eta in enumerate_compositions(n, d):
        F = integral_F(eta)
        w = ONE / constants(eta).f
        items = list(F.terms.items())
        for ex, cx in items:
            cxw = cx * w
            for ey, cy in items:
                e = ex + ey
                c = cxw * cy
                v = acc.get(e)
                acc[e] = c if v is None else v + c
    return SparsePoly(2 * n, {e: c for e, c in acc.items() if c})


def verify_cauchy(n: int, D: int, jobs: int = 1) -> Report:
    """Omega = sum_eta F_eta(x) F_eta(y) / f_eta through degree D."""
    rep = Report("cauchy", {"n": n, "D": D})
    omega = omega_kernel(n, D).poly
    sides = pmap(_cauchy_degree, [(n, d) for d in range(D + 1)], jobs)
    for d, rhs in enumerate(sides):
        lhs = omega.homogeneous_component(2 * d)
        rep.add("cauchy", {"n": n, "degree": d}, lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# symmetrization

def _symm_one(lam):
    k = constants(lam)
    lhs = symmetric_J(lam, method="eigen").scale(ONE / k.j)
    rhs = SparsePoly.zero(len(lam))
    for eta in distinct_permutations(lam):
        rhs = rhs + integral_F(eta).scale(ONE / constants(eta).f)
    return lhs, rhs


def verify_symmetrization(n: int, D: int, jobs: int = 1) -> Report:
    """J_lam / j_lam = sum over rearrangements of F_eta / f_eta.

    J_lam comes from the eigen-oracle, not from the symmetrized sum.
    """
    rep = Report("symm", {"n": n, "D": D})
    lams = partitions_up_to(n, D)
    for lam, (lhs, rhs) in zip(lams, pmap(_symm_one, lams, jobs)):
        rep.add("symmetrization", {"lambda": lam}, lhs, rhs)
    return rep


# ---------------------------------------------------------------------------
# the k_lam expansion of prod (1 - x_i)^(-r)

def las_k(lam: Sequence[int], r) -> AlphaFraction:
    """prod over cells of alpha (r + a'(s)) - l'(s)."""
    r = AlphaFraction._coerce(r)
    k = ONE
    for s in cells(lam):
        st = cell_stats(lam, s)
        k = k * (ALPHA * (r + st.coarm) - st.coleg)
    return k


def verify_las(n: int, D: int, r) -> Report:
    r = AlphaFraction._coerce(r)
    rep = Report("las", {"n": n, "D": D, "r": str(r)})
    for d in range(D + 1):
        lhs = SparsePoly.zero(n)
        for eta in enumerate_compositions(n, d):
            c = ONE
            for part in eta:
                c = c * rising_factorial(r, part)
            lhs = lhs + SparsePoly.monomial(eta, c)
        rhs = SparsePoly.zero(n)
        for lam in enumerate_partitions(n, d):
            k = las_k(lam, r)
            if k:
                rhs = rhs + symmetric_J(lam).scale(k / constants(lam).j)
        rep.add("las", {"n": n, "degree": d, "r": str(r)}, lhs, rhs)
    return rep
