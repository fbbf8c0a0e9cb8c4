"""Compositions, partitions and the statistics of their diagrams.

Compositions are plain tuples of nonnegative ints.  Cells are 1-based
``(row, column)`` pairs as in the usual matrix drawing of a diagram.

Permutations are tuples in one-line notation with 1-based values.  The
sorting permutation of a composition eta satisfies
``eta[p] == lam[w[p]]`` for every position p: position p holds the part
that sits in slot ``w(p)`` of the decreasing rearrangement.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .exactfield import ONE, ALPHA, AlphaFraction

Composition = tuple
Permutation = tuple


@dataclass(frozen=True)
class CellStats:
    arm: int
    coarm: int
    lower_leg: int
    upper_leg: int
    lower_coleg: int
    upper_coleg: int

    @property
    def leg(self) -> int:
        return self.lower_leg + self.upper_leg

    @property
    def coleg(self) -> int:
        return self.lower_coleg + self.upper_coleg


@dataclass(frozen=True)
class Constants:
    """Cell-product constants of a composition (partition-only ones may be None)."""

    d: AlphaFraction
    d_prime: AlphaFraction
    e: AlphaFraction
    f: AlphaFraction
    b: AlphaFraction | None = None
    c: AlphaFraction | None = None
    c_prime: AlphaFraction | None = None
    j: AlphaFraction | None = None

    def as_dict(self) -> dict:
        out = {"d": self.d, "d'": self.d_prime, "e": self.e, "f": self.f}
        if self.b is not None:
            out.update({"b": self.b, "c": self.c, "c'": self.c_prime, "j": self.j})
        return out


def is_partition(eta: Sequence[int]) -> bool:
    return all(eta[i] >= eta[i + 1] for i in range(len(eta) - 1))


def check_composition(eta: Sequence[int]) -> Composition:
    eta = tuple(int(k) for k in eta)
    if any(k < 0 for k in eta):
        raise ValueError(f"composition parts must be nonnegative: {eta}")
    return eta


def cells(eta: Sequence[int]) -> Iterator[tuple[int, int]]:
    for i, row in enumerate(eta, start=1):
        for j in range(1, row + 1):
            yield (i, j)


# ---------------------------------------------------------------------------
# sorting

def sort_to_partition(eta: Sequence[int]) -> tuple[Composition, Permutation]:
    """Decreasing rearrangement and the minimal permutation reaching it."""
    eta = check_composition(eta)
    n = len(eta)
    order = sorted(range(n), key=lambda p: -eta[p])  # stable
    lam = tuple(eta[p] for p in order)
    w = [0] * n
    for slot, p in enumerate(order, start=1):
        w[p] = slot
    return lam, tuple(w)


def act(w: Permutation, v: Sequence) -> tuple:
    """(w.v)_p = v_{w(p)}, the action under which eta = w_eta . eta^+."""
    return tuple(v[k - 1] for k in w)


def permutation_length(w: Permutation) -> int:
    return sum(1 for a, b in combinations(w, 2) if a > b)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Strong Bruhat order via the rank-matrix (tableau) criterion."""
    n = len(u)
    if len(w) != n:
        raise ValueError("permutations of different sizes")
    for i in range(1, n):
        su = sorted(u[:i])
        sw = sorted(w[:i])
        if any(a > b for a, b in zip(su, sw)):
            return False
    return True


def partition_dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam >= mu in dominance order (same length, same size assumed)."""
    a = b = 0
    for x, y in zip(lam, mu):
        a += x
        b += y
        if a < b:
            return False
    return True


def dominance_compare(eta: Sequence[int], zeta: Sequence[int]) -> str:
    """One of 'greater', 'less', 'equal', 'incomparable'."""
    eta, zeta = tuple(eta), tuple(zeta)
    if len(eta) != len(zeta):
        raise ValueError("compositions of different lengths")
    if sum(eta) != sum(zeta):
        raise ValueError("dominance order only compares compositions of equal degree")
    if eta == zeta:
        return "equal"
    lam, w = sort_to_partition(eta)
    mu, v = sort_to_partition(zeta)
    if lam == mu:
        if bruhat_leq(w, v):
            return "greater"
        if bruhat_leq(v, w):
            return "less"
        return "incomparable"
    if partition_dominates(lam, mu):
        return "greater"
    if partition_dominates(mu, lam):
        return "less"
    return "incomparable"


def dominance_key(eta: Sequence[int]):
    """Sort key of a linear extension of dominance: larger key = higher."""
    lam, w = sort_to_partition(eta)
    return (lam, -permutation_length(w))


# ---------------------------------------------------------------------------
# diagram statistics

def cell_stats(eta: Sequence[int], s: tuple[int, int]) -> CellStats:
    eta = tuple(eta)
    i, j = s
    n = len(eta)
    if not (1 <= i <= n and 1 <= j <= eta[i - 1]):
        raise ValueError(f"cell {s} is not in the diagram of {eta}")
    ei = eta[i - 1]
    ll = sum(1 for k in range(i + 1, n + 1) if j <= eta[k - 1] <= ei)
    ul = sum(1 for k in range(1, i) if j <= eta[k - 1] + 1 <= ei)
    llp = sum(1 for k in range(i + 1, n + 1) if eta[k - 1] > ei)
    ulp = sum(1 for k in range(1, i) if eta[k - 1] >= ei)
    return CellStats(ei - j, j - 1, ll, ul, llp, ulp)


def classical_leg(lam: Sequence[int], s: tuple[int, int]) -> int:
    i, j = s
    return sum(1 for k in range(i + 1, len(lam) + 1) if j <= lam[k - 1])


def eigenvalue_vector(eta: Sequence[int]) -> tuple[AlphaFraction, ...]:
    """Cherednik eigenvalues alpha*eta_i - (k'_i + k''_i)."""
    eta = tuple(eta)
    n = len(eta)
    out = []
    for i in range(n):
        kp = sum(1 for k in range(i) if eta[k] >= eta[i])
        kpp = sum(1 for k in range(i + 1, n) if eta[k] > eta[i])
        out.append(ALPHA * eta[i] - (kp + kpp))
    return tuple(out)


def eigenvalue_vector_from_rho(eta: Sequence[int]) -> tuple[AlphaFraction, ...]:
    """alpha*eta + w_eta . rho with rho = (0, -1, ..., -n+1)."""
    n = len(eta)
    _, w = sort_to_partition(eta)
    rho = tuple(-k for k in range(n))
    return tuple(ALPHA * e + r for e, r in zip(eta, act(w, rho)))


@lru_cache(maxsize=None)
def constants(eta: Composition) -> Constants:
    """d, d', e, f for any composition; b, c, c', j as well for partitions."""
    eta = check_composition(eta)
    n = len(eta)
    d = dp = e = ONE
    part = is_partition(eta)
    b = c = cp = ONE
    for s in cells(eta):
        st = cell_stats(eta, s)
        a, l = st.arm, st.leg
        d = d * (ALPHA * (a + 1) + (l + 1))
        dp = dp * (ALPHA * (a + 1) + l)
        e = e * (ALPHA * (st.coarm + 1) + (n - st.coleg))
        if part:
            b = b * (ALPHA * st.coarm + (n - st.coleg))
            c = c * (ALPHA * a + (l + 1))
            cp = cp * (ALPHA * (a + 1) + l)
    if part:
        return Constants(d, dp, e, d * dp, b, c, cp, c * cp)
    return Constants(d, dp, e, d * dp)


def e_product_alt(eta: Sequence[int]) -> AlphaFraction:
    """e_eta as prod_i prod_{0<=j<eta_i} (n + etabar_i - j*alpha).

    Cell (i, j) contributes alpha*j + n - (k'_i + k''_i); reversing j along
    the row gives the factors above.  Running j over 1..eta_i instead drops
    one alpha from every factor and is wrong already for eta = (1).
    """
    n = len(eta)
    bar = eigenvalue_vector(eta)
    r = ONE
    for i, row in enumerate(eta):
        for j in range(row):
            r = r * (bar[i] + n - ALPHA * j)
    return r


# ---------------------------------------------------------------------------
# moves on compositions

def phi_composition(eta: Sequence[int]) -> Composition:
    """(eta_2, ..., eta_n, eta_1 + 1)."""
    eta = tuple(eta)
    return eta[1:] + (eta[0] + 1,)


def phi_preimage(eta: Sequence[int]) -> Composition:
    eta = tuple(eta)
    if eta[-1] < 1:
        raise ValueError(f"{eta} is not in the image of Phi")
    return (eta[-1] - 1,) + eta[:-1]


def swap(eta: Sequence[int], i: int) -> Composition:
    """s_i eta, exchanging parts i and i+1 (1-based)."""
    e = list(eta)
    e[i - 1], e[i] = e[i], e[i - 1]
    return tuple(e)


# ---------------------------------------------------------------------------
# enumeration

def enumerate_compositions(n: int, d: int) -> list[Composition]:
    """All compositions of d into n parts, lexicographically increasing."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d + 1):
        for rest in enumerate_compositions(n - 1, d - first):
            out.append((first,) + rest)
    return out


def compositions_up_to(n: int, D: int) -> list[Composition]:
    return [eta for d in range(D + 1) for eta in enumerate_compositions(n, d)]


def enumerate_partitions(n: int, d: int) -> list[Composition]:
    """Partitions of d with at most n parts, padded to length n, decreasing lex."""
    out = [eta for eta in enumerate_compositions(n, d) if is_partition(eta)]
    return sorted(out, reverse=True)


def partitions_up_to(n: int, D: int) -> list[Composition]:
    return [lam for d in range(D + 1) for lam in enumerate_partitions(n, d)]


def distinct_permutations(lam: Sequence[int]) -> list[Composition]:
    """All distinct rearrangements, lexicographically increasing."""
    lam = tuple(lam)
    return [eta for eta in enumerate_compositions(len(lam), sum(lam)) if sorted(eta) == sorted(lam)]


def parse_composition(text: str) -> Composition:
    """Accept ``0,1,2`` or ``(0,1,2)``."""
    body = text.strip().strip("()[]")
    if not body:
        raise ValueError("empty composition")
    try:
        return check_composition(int(t) for t in body.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed composition {text!r}: {exc}") from None


def format_composition(eta: Sequence[int]) -> str:
    return "(" + ",".join(str(k) for k in eta) + ")"
