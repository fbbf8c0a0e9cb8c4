"""Verification suites beyond the scalar products, plus the registry
used by the command line."""

from __future__ import annotations

from .compositions import (
    act,
    cell_stats,
    cells,
    classical_leg,
    compositions_up_to,
    constants,
    dominance_compare,
    eigenvalue_vector,
    eigenvalue_vector_from_rho,
    e_product_alt,
    is_partition,
    partitions_up_to,
    phi_composition,
    sort_to_partition,
    swap,
)
from .exactfield import ONE, ALPHA, ZERO, AlphaFraction
from .jack import build_E, build_E_oracle, eval_ones, expand_in_E, integral_F, symmetric_J, symmetric_P
from .operators import cherednik, simple_reflection
from .pairing import (
    g_basis,
    pair_symmetric,
    verify_cauchy,
    verify_las,
    verify_orthogonality,
    verify_symmetrization,
)
from .polyring import SparsePoly, omega_kernel
from .report import Check, Report, compare, pmap


# ---------------------------------------------------------------------------
# evaluation at 1^n

def verify_evaluation(n: int, D: int) -> Report:
    """F_eta(1^n) = e_eta, and the two specialized recursions behind it."""
    rep = Report("spec", {"n": n, "D": D})
    for eta in compositions_up_to(n, D):
        rep.add("F(1^n)=e", {"eta": eta}, eval_ones(integral_F(eta)), constants(eta).e)
        E1 = eval_ones(build_E(eta))
        if sum(eta) < D:
            rep.add("E_Phi(1^n)", {"eta": eta}, eval_ones(build_E(phi_composition(eta))), E1)
        bar = eigenvalue_vector(eta)
        for i in range(1, n):
            if eta[i - 1] > eta[i]:
                d = bar[i - 1] - bar[i]
                rep.add("E_s(1^n)", {"eta": eta, "i": i}, eval_ones(build_E(swap(eta, i))), E1 * d / (d + 1))
    return rep


# ---------------------------------------------------------------------------
# constant recursions (pure combinatorics)

def verify_recursions(n: int, D: int) -> Report:
    """Phi- and s_i-recursions for d, d', e and related constant identities,
    for every length 1..n and degree 0..D."""
    rep = Report("recursions", {"n": n, "D": D})
    for m in range(1, n + 1):
        for eta in compositions_up_to(m, D):
            k = constants(eta)
            bar = eigenvalue_vector(eta)
            p = {"eta": eta}
            rep.add("etabar=alpha*eta+w.rho", p, bar, eigenvalue_vector_from_rho(eta))
            lam, w = sort_to_partition(eta)
            rep.add("eta=w.lambda", p, act(w, lam), eta)
            rep.add("e=e(eta+)", p, k.e, constants(lam).e)
            rep.add("e=alt-product", p, k.e, e_product_alt(eta))
            if sum(eta) < D:
                kp = constants(phi_composition(eta))
                target = bar[0] + ALPHA + m
                rep.add("d_Phi/d", p, kp.d / k.d, target)
                rep.add("e_Phi/e", p, kp.e / k.e, target)
            r_eta = k.d * k.d / k.f
            for i in range(1, m):
                ks = constants(swap(eta, i))
                q = {"eta": eta, "i": i}
                rep.add("e_s=e", q, ks.e, k.e)
                if eta[i - 1] > eta[i]:
                    d = bar[i - 1] - bar[i]
                    rep.add("d_s/d", q, ks.d / k.d, (d + 1) / d)
                    rep.add("d'_s/d'", q, ks.d_prime / k.d_prime, d / (d - 1))
                    rep.add("r_s/r", q, ks.d * ks.d / ks.f / r_eta, (d * d - 1) / (d * d))
            if is_partition(eta):
                rep.add("d'=c'", p, k.d_prime, k.c_prime)
                for s in cells(eta):
                    st = cell_stats(eta, s)
                    q = {"eta": eta, "cell": s}
                    rep.add("partition legs", q, (st.upper_leg, st.leg, st.coleg),
                            (0, classical_leg(eta, s), s[0] - 1))
    return rep


# ---------------------------------------------------------------------------
# xi^x Omega = xi^y Omega

def _lemma31_one(args):
    n, D, i = args
    omega = omega_kernel(n, D).poly
    diff = cherednik(omega, i, n=n, offset=0) - cherednik(omega, i, n=n, offset=n)
    low = SparsePoly(2 * n, {e: c for e, c in diff.terms.items() if sum(e[:n]) <= D - 1})
    return compare("xi^x Omega = xi^y Omega", {"n": n, "D": D, "i": i}, low, SparsePoly.zero(2 * n))


def verify_lemma31(n: int, D: int, jobs: int = 1) -> Report:
    """Agreement strictly below the truncation cap, for every i."""
    rep = Report("lemma31", {"n": n, "D": D})
    rep.extend(pmap(_lemma31_one, [(n, D, i) for i in range(1, n + 1)], jobs))
    return rep


# ---------------------------------------------------------------------------
# recursion vs eigen-solve

def _oracle_one(eta):
    return compare("recursion=eigen-solve", {"eta": eta}, build_E(eta), build_E_oracle(eta))


def verify_oracle(n: int, D: int, jobs: int = 1) -> Report:
    rep = Report("oracle", {"n": n, "D": D})
    rep.extend(pmap(_oracle_one, compositions_up_to(n, D), jobs))
    return rep


# ---------------------------------------------------------------------------
# eigen-equations, triangularity and the s_i relations

def _eigen_one(eta) -> list[Check]:
    n = len(eta)
    E = build_E(eta)
    bar = eigenvalue_vector(eta)
    out = []
    for i in range(1, n + 1):
        out.append(compare("xi E = etabar E", {"eta": eta, "i": i}, cherednik(E, i), E.scale(bar[i - 1])))
    bad = [z for z in E.terms if z != eta and dominance_compare(eta, z) != "greater"]
    out.append(compare("triangular", {"eta": eta}, (E.coefficient(eta), bad), (ONE, [])))
    for i in range(1, n):
        p = {"eta": eta, "i": i}
        if eta[i - 1] == eta[i]:
            out.append(compare("s_i E = E (equal parts)", p, simple_reflection(E, i), E))
        elif eta[i - 1] > eta[i]:
            d = bar[i - 1] - bar[i]
            Es = build_E(swap(eta, i))
            out.append(compare("d E = (d s_i + 1) E_s", p, E.scale(d), simple_reflection(Es, i).scale(d) + Es))
            out.append(compare("s_i E = E/d + (d^2-1)/d^2 E_s", p, simple_reflection(E, i),
                               E.scale(ONE / d) + Es.scale((d * d - 1) / (d * d))))
            out.append(compare("s_i E_s = -E_s/d + E", p, simple_reflection(Es, i), E - Es.scale(ONE / d)))
    return out


def verify_eigen(n: int, D: int, jobs: int = 1) -> Report:
    rep = Report("eigen", {"n": n, "D": D})
    for checks in pmap(_eigen_one, compositions_up_to(n, D), jobs):
        rep.extend(checks)
    for lam in partitions_up_to(n, D):
        coords = expand_in_E(symmetric_P(lam))
        outside = sorted(eta for eta in coords if sorted(eta) != sorted(lam))
        rep.add("P in span E(orbit)", {"lambda": lam}, outside, [])
    return rep


# ---------------------------------------------------------------------------
# Stanley's symmetric formulas and stability

def verify_stanley(n: int, D: int) -> Report:
    rep = Report("stanley", {"n": n, "D": D})
    basis = g_basis(n, D)
    lams = partitions_up_to(n, D)
    Js = {lam: symmetric_J(lam) for lam in lams}
    for a, lam in enumerate(lams):
        k = constants(lam)
        rep.add("J(1^n)=b", {"lambda": lam}, eval_ones(Js[lam]), k.b)
        rep.add("m-coefficient=c", {"lambda": lam}, Js[lam].coefficient(lam), k.c)
        rep.add("J symmetric", {"lambda": lam}, Js[lam].is_symmetric(), True)
        for mu in lams[a:]:
            value = pair_symmetric(Js[lam], Js[mu], basis)
            if mu == lam:
                rep.add("<J,J>_s=c c'", {"lambda": lam}, value, k.c * k.c_prime)
            else:
                rep.add("<J_lam,J_mu>_s=0", {"lambda": lam, "mu": mu}, value, ZERO)
    return rep


def verify_stability(n: int, D: int) -> Report:
    """J_lam in n+1 variables at x_{n+1}=0 equals J_lam in n variables."""
    rep = Report("stability", {"n": n, "D": D})
    for lam in partitions_up_to(n, D):
        big = symmetric_J(lam + (0,))
        rep.add("stability", {"lambda": lam}, big.set_last_zero(), symmetric_J(lam))
    return rep


def verify_all_for(name: str, n: int, D: int, *, r=None, jobs: int = 1) -> Report:
    """Dispatch a suite by its command-line name."""
    if name == "orthogonality":
        return verify_orthogonality(n, D, jobs)
    if name == "cauchy":
        return verify_cauchy(n, D, jobs)
    if name == "symm":
        return verify_symmetrization(n, D, jobs)
    if name == "spec":
        return verify_evaluation(n, D)
    if name == "recursions":
        return verify_recursions(n, D)
    if name == "las":
        return verify_las(n, D, ONE if r is None else r)
    if name == "lemma31":
        return verify_lemma31(n, D, jobs)
    if name == "oracle":
        return verify_oracle(n, D, jobs)
    if name == "eigen":
        return verify_eigen(n, D, jobs)
    if name == "stanley":
        return verify_stanley(n, D)
    if name == "stability":
        return verify_stability(n, D)
    raise ValueError(f"unknown suite {name!r}")


SUITES = ("orthogonality", "cauchy", "symm", "spec", "recursions", "las",
          "lemma31", "oracle", "eigen", "stanley", "stability")
