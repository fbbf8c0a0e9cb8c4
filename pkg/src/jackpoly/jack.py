"""Nonsymmetric and symmetric Jack polynomials.

``build_E`` runs the Phi / s_i recursion degree by degree and memoizes in a
per-n :class:`JackCache`.  ``build_E_oracle`` is an independent route: it
solves the Cherednik eigen-equations on a dominance-triangular ansatz.
"""

from __future__ import annotations

import threading
from collections import deque
from functools import lru_cache
from typing import Sequence

from .compositions import (
    Composition,
    check_composition,
    constants,
    distinct_permutations,
    dominance_compare,
    dominance_key,
    eigenvalue_vector,
    enumerate_compositions,
    enumerate_partitions,
    is_partition,
    partition_dominates,
    phi_preimage,
    swap,
)
from .exactfield import ONE, ALPHA, ZERO, AlphaFraction
from .linalg import InconsistentSystemError, solve
from .operators import cherednik, phi, simple_reflection
from .polyring import SparsePoly, evaluate

__all__ = [
    "JackCache",
    "get_cache",
    "build_E",
    "build_E_oracle",
    "integral_F",
    "symmetric_J",
    "symmetric_P",
    "build_P_oracle",
    "monomial_symmetric",
    "eval_ones",
    "expand_in_E",
]


class JackCache:
    """Monic E_eta for fixed n, filled one whole degree at a time."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        self.polys: dict[Composition, SparsePoly] = {}
        self.provenance: dict[Composition, str] = {}
        self.sealed = -1
        self._lock = threading.Lock()

    def _seal_next(self):
        n, d = self.n, self.sealed + 1
        if d == 0:
            zero = (0,) * n
            self.polys[zero] = SparsePoly.one(n)
            self.provenance[zero] = "base"
            self.sealed = 0
            return
        for lam in enumerate_partitions(n, d):
            inc = tuple(sorted(lam))
            pre = phi_preimage(inc)
            self.polys[inc] = phi(self.polys[pre])
            self.provenance[inc] = f"Phi{pre}"
            queue = deque([inc])
            while queue:
                mu = queue.popleft()
                for i in range(1, n):
                    if mu[i - 1] >= mu[i]:
                        continue
                    eta = swap(mu, i)
                    if eta in self.polys:
                        continue
                    bar = eigenvalue_vector(eta)
                    gap = bar[i - 1] - bar[i]
                    src = self.polys[mu]
                    self.polys[eta] = simple_reflection(src, i) + src.scale(ONE / gap)
                    self.provenance[eta] = f"s{i}{mu}"
                    queue.append(eta)
        self.sealed = d

    def get(self, eta: Sequence[int]) -> SparsePoly:
        eta = check_composition(eta)
        if len(eta) != self.n:
            raise ValueError(f"composition {eta} has length {len(eta)}, cache is for n={self.n}")
        d = sum(eta)
        if d > self.sealed:
            with self._lock:
                while self.sealed < d:
                    self._seal_next()
        return self.polys[eta]


_caches: dict[int, JackCache] = {}
_caches_lock = threading.Lock()


def get_cache(n: int) -> JackCache:
    with _caches_lock:
        if n not in _caches:
            _caches[n] = JackCache(n)
        return _caches[n]


def build_E(eta: Sequence[int]) -> SparsePoly:
    """Monic nonsymmetric Jack polynomial E_eta."""
    eta = check_composition(eta)
    return get_cache(len(eta)).get(eta)


@lru_cache(maxsize=None)
def _xi_shifted(zeta: Composition, i: int) -> SparsePoly:
    return cherednik(SparsePoly.monomial(zeta), i)


def build_E_oracle(eta: Sequence[int]) -> SparsePoly:
    """E_eta from the eigen-equations on x^eta + (strictly lower monomials)."""
    eta = check_composition(eta)
    n = len(eta)
    bar = eigenvalue_vector(eta)
    basis = enumerate_compositions(n, sum(eta))
    lower = [z for z in basis if dominance_compare(eta, z) == "greater"]
    rows, rhs = [], []
    for i in range(1, n + 1):
        lead = _xi_shifted(eta, i) - SparsePoly.monomial(eta, bar[i - 1])
        images = [_xi_shifted(z, i) - SparsePoly.monomial(z, bar[i - 1]) for z in lower]
        for nu in basis:
            row = [img.coefficient(nu) for img in images]
            b = -lead.coefficient(nu)
            if b or any(row):
                rows.append(row)
                rhs.append(b)
    coeffs = solve(rows, rhs) if lower else _consistent_empty(rhs)
    terms = {eta: ONE}
    terms.update({z: c for z, c in zip(lower, coeffs) if c})
    return SparsePoly(n, terms)


def _consistent_empty(rhs):
    if any(rhs):
        raise InconsistentSystemError("x^eta is not an eigenfunction")
    return []


def integral_F(eta: Sequence[int]) -> SparsePoly:
    eta = check_composition(eta)
    return build_E(eta).scale(constants(eta).d)


def monomial_symmetric(lam: Sequence[int]) -> SparsePoly:
    lam = check_composition(lam)
    return SparsePoly(len(lam), {eta: ONE for eta in distinct_permutations(lam)})


def _check_partition(lam):
    lam = check_composition(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    return lam


_J_cache: dict = {}


def symmetric_J(lam: Sequence[int], method: str = "sum") -> SparsePoly:
    """Integral symmetric Jack polynomial J_lam.

    ``method="sum"`` symmetrizes: j_lam * sum over rearrangements eta of
    F_eta / f_eta.  ``method="eigen"`` is c_lam times :func:`build_P_oracle`,
    which never touches the nonsymmetric polynomials.
    """
    lam = _check_partition(lam)
    key = (lam, method)
    if key in _J_cache:
        return _J_cache[key]
    k = constants(lam)
    if method == "sum":
        acc = SparsePoly.zero(len(lam))
        for eta in distinct_permutations(lam):
            ce = constants(eta)
            acc = acc + integral_F(eta).scale(ONE / ce.f)
        J = acc.scale(k.j)
    elif method == "eigen":
        J = build_P_oracle(lam).scale(k.c)
    else:
        raise ValueError(f"unknown method {method!r}")
    _J_cache[key] = J
    return J


def symmetric_P(lam: Sequence[int], method: str = "sum") -> SparsePoly:
    lam = _check_partition(lam)
    return symmetric_J(lam, method).scale(ONE / constants(lam).c)


def _xi_square_sum(f: SparsePoly) -> SparsePoly:
    acc = SparsePoly.zero(f.n)
    for i in range(1, f.n + 1):
        acc = acc + cherednik(cherednik(f, i), i)
    return acc


def build_P_oracle(lam: Sequence[int]) -> SparsePoly:
    """Monic P_lam as the eigenfunction of sum_i xi_i^2 of the form
    m_lam + (dominance-lower m_mu)."""
    lam = _check_partition(lam)
    n = len(lam)
    ev = ZERO
    for i, part in enumerate(lam):
        t = ALPHA * part - i
        ev = ev + t * t
    lower = [mu for mu in enumerate_partitions(n, sum(lam)) if mu != lam and partition_dominates(lam, mu)]
    lead_m = monomial_symmetric(lam)
    lead = _xi_square_sum(lead_m) - lead_m.scale(ev)
    images = []
    for mu in lower:
        m = monomial_symmetric(mu)
        images.append(_xi_square_sum(m) - m.scale(ev))
    rows, rhs = [], []
    for nu in enumerate_compositions(n, sum(lam)):
        row = [img.coefficient(nu) for img in images]
        b = -lead.coefficient(nu)
        if b or any(row):
            rows.append(row)
            rhs.append(b)
    coeffs = solve(rows, rhs) if lower else _consistent_empty(rhs)
    out = lead_m
    for mu, c in zip(lower, coeffs):
        if c:
            out = out + monomial_symmetric(mu).scale(c)
    return out


def eval_ones(f: SparsePoly) -> AlphaFraction:
    return evaluate(f, [ONE] * f.n)


def expand_in_E(f: SparsePoly) -> dict[Composition, AlphaFraction]:
    """Coordinates of ``f`` in the basis {E_eta}, by peeling leading terms."""
    out: dict[Composition, AlphaFraction] = {}
    rem = f
    while not rem.is_zero():
        eta = max(rem.terms, key=lambda e: (sum(e), dominance_key(e)))
        c = rem.terms[eta]
        out[eta] = c
        rem = rem - build_E(eta).scale(c)
    return out
