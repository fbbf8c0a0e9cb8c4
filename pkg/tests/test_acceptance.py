"""Acceptance criteria, one test each.  Every identity is checked exactly in
Q(alpha); each test prints a single PASS/FAIL line with its check count.

Run alone with ``pytest -v -s tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""

import sys
import time

import pytest

from jackpoly.pairing import verify_cauchy, verify_las, verify_orthogonality, verify_symmetrization
from jackpoly.suites import (
    verify_eigen,
    verify_evaluation,
    verify_lemma31,
    verify_oracle,
    verify_recursions,
    verify_stability,
    verify_stanley,
)
from jackpoly.textparse import parse_fraction

pytestmark = pytest.mark.acceptance

# n = 1, 2 up to degree 5; n = 3 up to degree 4
MAIN_SWEEP = [(1, 5), (2, 5), (3, 4)]
RESULT_LINES = []  # echoed in the terminal summary by conftest.py
LAS_R = ["1", "2", "5/2", "2/α"]


def _run(label, jobs):
    t0 = time.perf_counter()
    reports = [job() for job in jobs]
    total = sum(len(r.checks) for r in reports)
    failed = [c for r in reports for c in r.failures]
    status = "PASS" if not failed and total else "FAIL"
    line = f"{status} {label}: {total} checks, {len(failed)} failed ({time.perf_counter() - t0:.1f}s)"
    print(line)
    RESULT_LINES.append(line)
    for c in failed[:5]:
        print(f"    {c.check} {c.params}: {c.lhs} != {c.rhs}")
    return status == "PASS"


def test_orthogonality_and_norms():
    assert _run("orthogonality+norms", [lambda n=n, D=D: verify_orthogonality(n, D) for n, D in MAIN_SWEEP])


def test_evaluation_at_ones():
    assert _run("evaluation F(1^n)=e", [lambda n=n, D=D: verify_evaluation(n, D) for n, D in MAIN_SWEEP])


def test_symmetrization():
    assert _run("symmetrization", [lambda n=n, D=D: verify_symmetrization(n, D) for n, D in MAIN_SWEEP])


def test_nonsymmetric_cauchy():
    sweep = [(1, 4), (2, 4), (3, 3)]
    assert _run("nonsymmetric Cauchy", [lambda n=n, D=D: verify_cauchy(n, D) for n, D in sweep])


def test_kernel_intertwining():
    sweep = [(1, 4), (2, 4), (3, 4)]
    assert _run("xi^x Omega = xi^y Omega", [lambda n=n, D=D: verify_lemma31(n, D) for n, D in sweep])


def test_constant_recursions():
    assert _run("constant recursions", [lambda n=n: verify_recursions(n, 7) for n in (1, 2, 3, 4)])


def test_las_expansion():
    jobs = [lambda n=n, r=r: verify_las(n, 3, parse_fraction(r)) for n in (1, 2) for r in LAS_R]
    assert _run("k_lambda expansion, r in {1, 2, 5/2, 2/α}", jobs)


def test_oracle_equivalence():
    sweep = [(1, 4), (2, 4), (3, 4)]
    assert _run("recursion = eigen-solve oracle", [lambda n=n, D=D: verify_oracle(n, D) for n, D in sweep])


def test_eigen_and_triangularity():
    sweep = [(1, 5), (2, 5), (3, 5)]
    assert _run("eigen-equations + triangularity", [lambda n=n, D=D: verify_eigen(n, D) for n, D in sweep])


def test_stanley_cross_checks():
    sweep = [(1, 4), (2, 4), (3, 4)]
    assert _run("symmetric norms, orthogonality, J(1^n)=b", [lambda n=n, D=D: verify_stanley(n, D) for n, D in sweep])


def test_stability():
    sweep = [(1, 3), (2, 3), (3, 3)]
    assert _run("stability under x_{n+1}=0", [lambda n=n, D=D: verify_stability(n, D) for n, D in sweep])


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    ok = True
    for t in tests:
        try:
            t()
        except AssertionError:
            ok = False
    sys.exit(0 if ok else 1)
