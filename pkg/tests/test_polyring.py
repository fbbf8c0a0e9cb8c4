import json

import pytest
from hypothesis import given, settings

from jackpoly.exactfield import ALPHA, ONE, ZERO, rising_factorial
from jackpoly.polyring import (
    SparsePoly,
    TruncationError,
    coefficient_of_y,
    evaluate,
    kernel_factor,
    omega_kernel,
    partial_derivative,
    poly_arith,
    swap_xy,
    symmetric_kernel,
)
from jackpoly.textparse import parse_poly

from strategies import polys

a = ALPHA
x1 = SparsePoly.variable(2, 1)
x2 = SparsePoly.variable(2, 2)


def bi(n, text, m=None):
    """Parse a polynomial in x1..xn, y1..ym."""
    m = n if m is None else m
    return parse_poly(text, n + m) if n == m else _bi_uneven(n, m, text)


def _bi_uneven(n, m, text):
    # parser maps y_k to slot total/2 + k, so build over 2*max and re-slice
    k = max(n, m)
    p = parse_poly(text, 2 * k)
    return SparsePoly(n + m, {e[:n] + e[k:k + m]: c for e, c in p.terms.items()})


def test_poly_arith_examples():
    assert poly_arith(x1 + x2, x1 - x2, "mul") == x1 * x1 - x2 * x2
    f = x1 + x2.scale(ONE / (a + 1))
    assert poly_arith(f, f, "sub").is_zero()
    assert f * (a + 1) == x1.scale(a + 1) + x2
    with pytest.raises(ValueError):
        poly_arith(x1, SparsePoly.variable(3, 1), "add")


def test_partial_derivative_examples():
    assert partial_derivative(x1 * x1 * x2, 1) == (x1 * x2).scale(2)
    assert partial_derivative(x1, 2).is_zero()
    assert partial_derivative(x1 + x2.scale(ONE / (a + 1)), 1) == SparsePoly.one(2)
    with pytest.raises(IndexError):
        partial_derivative(x1, 3)


def test_evaluate_examples():
    assert evaluate(x2.scale(a + 2), [ONE, ONE]) == a + 2
    assert evaluate(x1 * x2, [1, 1]) == ONE
    f = parse_poly("3+x1^2-α·x2", 2)
    assert evaluate(f, [0, 0]) == 3
    with pytest.raises(ValueError):
        evaluate(f, [1])


def test_kernel_factor_examples():
    assert kernel_factor(ONE, 1, 1, 2, 1).poly == bi(1, "1+x1·y1+x1^2·y1^2")
    assert kernel_factor(ONE / a, 1, 1, 1, 1).poly == bi(1, "1+(1/α)·x1·y1")
    k2 = kernel_factor(ONE / a, 1, 1, 2, 1).poly
    assert k2.coefficient((2, 2)) == (1 + a) / (2 * a * a)


def test_omega_small():
    assert omega_kernel(1, 1).poly == bi(1, "1+(1+1/α)·x1·y1")
    assert omega_kernel(2, 0).poly == SparsePoly.one(4)
    om = omega_kernel(2, 1)
    assert coefficient_of_y(om, (1, 0)) == parse_poly("(1+1/α)·x1+(1/α)·x2", 2)


def test_omega_brute_force_n1():
    # n=1: (1-xy)^(-(1+1/alpha)) exactly
    om = omega_kernel(1, 5)
    for k in range(6):
        assert om.poly.coefficient((k, k)) == rising_factorial(1 + ONE / a, k)


def test_symmetric_kernel_examples():
    assert symmetric_kernel(1, 1, ONE / a, 1).poly == bi(1, "1+(1/α)·x1·y1")
    s = symmetric_kernel(2, 2, ONE / a, 1)
    assert coefficient_of_y(s, (1, 0)) == (x1 + x2).scale(ONE / a)
    s12 = symmetric_kernel(1, 2, ONE / a, 1)
    assert s12.poly == _bi_uneven(1, 2, "1+(1/α)·x1·y1+(1/α)·x1·y2")


def test_coefficient_of_y_examples():
    om = omega_kernel(2, 1)
    assert coefficient_of_y(om, (0, 0)) == SparsePoly.one(2)
    with pytest.raises(TruncationError):
        coefficient_of_y(om, (2, 0))


def test_swap_xy_examples():
    s = omega_kernel(2, 2)
    t = swap_xy(s)
    assert t.poly.coefficient((1, 0, 0, 1)) == s.poly.coefficient((0, 1, 1, 0))
    assert swap_xy(t) == s


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("D", [0, 1, 2, 3, 4])
def test_omega_swap_invariant(n, D):
    s = omega_kernel(n, D)
    assert swap_xy(s) == s
    assert s.is_bihomogeneous()


@pytest.mark.parametrize("n,D", [(1, 4), (2, 3), (3, 2)])
def test_truncation_consistency(n, D):
    big = omega_kernel(n, D)
    for d in range(D):
        assert big.truncate(d) == omega_kernel(n, d)
    sym = symmetric_kernel(n, n, ONE / a, D)
    assert sym.is_bihomogeneous()
    assert sym.truncate(D - 1) == symmetric_kernel(n, n, ONE / a, D - 1)


def test_text_rendering():
    assert x2.scale(a + 2).to_text() == "(α+2)·x2"
    assert (x1 * x1 - x2 * x2).to_text() == "x1^2-x2^2"
    assert (x1 + x2).to_latex() == "x_{1}+x_{2}"
    assert (x1.scale(-a - 1)).to_text() == "-(α+1)·x1"
    assert SparsePoly.zero(2).to_text() == "0"


@settings(max_examples=60)
@given(polys(3))
def test_text_and_json_roundtrip(f):
    assert parse_poly(f.to_text(), 3) == f
    assert SparsePoly.from_json(f.to_json()) == f
    obj = json.loads(f.to_json())
    assert obj["version"] == 1
    for t in obj["terms"]:
        den = t["coeff"]["den"]
        assert den[-1] == 1


def test_json_rejects_duplicates_and_versions():
    obj = {"version": 1, "n": 1, "terms": [{"exponents": [1], "coeff": {"num": [1], "den": [1]}}] * 2}
    with pytest.raises(ValueError):
        SparsePoly.from_json_obj(obj)
    with pytest.raises(ValueError):
        SparsePoly.from_json_obj({"version": 99, "n": 1, "terms": []})


@given(polys(2), polys(2), polys(2))
@settings(max_examples=40)
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == SparsePoly.zero(2)
