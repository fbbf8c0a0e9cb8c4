"""Exact symmetric and nonsymmetric Jack polynomials over Q(alpha)."""

from .exactfield import ALPHA, ONE, ZERO, AlphaFraction, AlphaPolynomial, PoleError
from .polyring import SparsePoly, TruncatedBiSeries
from .jack import build_E, build_E_oracle, integral_F, symmetric_J, symmetric_P, monomial_symmetric, eval_ones
from .compositions import constants, eigenvalue_vector, sort_to_partition, dominance_compare
from .pairing import g_basis, pair, pair_symmetric, q_basis

__version__ = "0.1.0"
