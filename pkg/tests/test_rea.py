from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from hecke_rea.hecke import certify, standard_R, super_flip
from hecke_rea.linalg import QMatrix, flip, kron
from hecke_rea.rea import (build_rea, classical_symmetric_dim, component_dims, ideal_span_check, rea_constants)

Q0 = Fraction(3, 2)
t = sp.Symbol("t")


def super_sym_oracle(m, n, k):
    """Degree-k part of the symmetric algebra on End(C^{m|n}) via its generating function."""
    even, odd = m * m + n * n, 2 * m * n
    s = sp.series((1 + t) ** odd / (1 - t) ** even, t, 0, k + 1).removeO()
    return int(s.coeff(t, k))


def test_constants_at_one():
    a, b = rea_constants()
    assert a.eval_at(1) == Fraction(1, 2) and b.eval_at(1) == Fraction(1, 16)


def test_Q_spectrum_standard2():
    rs = build_rea(standard_R(2), verify=False)
    M = sp.Matrix([[sp.Rational(str(v.eval_at(Q0))) for v in row] for row in rs.Q.to_dense()])
    q = sp.Rational(3, 2)
    assert set(M.eigenvals()) == {-q ** 2, sp.Integer(1), -q ** -2}


def test_S_A_orthogonal():
    rs = build_rea(standard_R(2), verify=False)
    assert (rs.S @ rs.A).is_zero() and (rs.A @ rs.S).is_zero()
    assert rs.S + rs.A == QMatrix.eye(16)


@pytest.mark.parametrize("H", [standard_R(2), super_flip(1, 1), super_flip(2, 1)], ids=str)
def test_projector_calculus(H):
    rep = build_rea(H).report
    assert rep.ok, str(rep)


def test_component_dims_standard2():
    H = standard_R(2)
    assert component_dims(H, 2) == (10, 10)
    assert component_dims(H, 3) == (20, 20)


@pytest.mark.parametrize("mn", [(1, 1), (2, 1), (2, 0), (0, 2)])
@pytest.mark.parametrize("k", [2, 3])
def test_component_dims_superflip(mn, k):
    g, c = component_dims(super_flip(*mn), k)
    assert g == c == super_sym_oracle(*mn, k) == classical_symmetric_dim(*mn, k)


@pytest.mark.parametrize("H", [standard_R(2), certify(flip(2), 2), standard_R(3)], ids=str)
def test_ideal_span(H):
    assert ideal_span_check(H).ok


invertible = st.tuples(*[st.integers(-2, 2)] * 4).filter(lambda g: g[0] * g[3] - g[1] * g[2] != 0)


@settings(max_examples=8)
@given(invertible)
def test_component_dims_gauge_invariant(g):
    G = QMatrix.from_dense([[g[0], g[1]], [g[2], g[3]]])
    GG = kron(G, G)
    H = certify(GG @ standard_R(2).R @ GG.inverse(), 2)
    assert component_dims(H, 2) == (10, 10)


def test_bad_order():
    with pytest.raises(ValueError):
        component_dims(standard_R(2), 4)
