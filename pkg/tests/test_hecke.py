from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from hecke_rea.hecke import (HeckeConditionError, YBEError, certify, dual_symmetry, dump_R, load_R,
                             skew_inverse, standard_R, super_flip, verify_skew_identities)
from hecke_rea.linalg import QMatrix, flip, kron
from hecke_rea.scalar import ONE, Q, ParseError

Q0 = Fraction(5, 3)


def dense(M, q0=Q0):
    return [[v.eval_at(q0) for v in row] for row in M.to_dense()]


def test_standard_m1():
    assert standard_R(1).R == QMatrix.from_dense([[Q]])


def test_standard_m2_spectrum():
    # oracle: sympy eigenvalues of the evaluated matrix
    R = sp.Matrix(dense(standard_R(2).R))
    ev = R.eigenvals()
    assert ev == {sp.Rational(5, 3): 3, -sp.Rational(3, 5): 1}


def test_standard_at_one_is_flip():
    assert standard_R(2).R.evaluate(1) == flip(2)


def test_super_flip_B_C():
    H = super_flip(1, 1)
    assert H.B == QMatrix.diag([ONE, -ONE]) and H.C == H.B
    assert H.trace_B == 0
    assert super_flip(1, 0).R == QMatrix.from_dense([[1]])
    assert H.psi == H.R


def test_flip_is_own_skew_inverse():
    assert skew_inverse(flip(2), 2) == flip(2)


def psi_identity_oracle(R, psi, N, q0):
    """sum_b R^{ia}_{jb} Psi^{bl}_{ak} = delta^i_k delta^l_j, by index loops."""
    r, p = dense(R, q0), dense(psi, q0)
    for i in range(N):
        for j in range(N):
            for k in range(N):
                for l in range(N):
                    s = sum(r[i * N + a][j * N + b] * p[b * N + l][a * N + k] for a in range(N) for b in range(N))
                    if s != (1 if (i == k and l == j) else 0):
                        return False
    return True


@pytest.mark.parametrize("H", [standard_R(2), standard_R(3), super_flip(2, 1), super_flip(1, 1)], ids=str)
def test_psi_defining_equation(H):
    assert psi_identity_oracle(H.R, H.psi, H.N, Q0 if not H.involutive else 1)


def test_trace_B_values():
    H = standard_R(2)
    assert H.trace_B == Q ** -1 + Q ** -3 and H.trace_C == H.trace_B
    assert H.nu == Q ** -4
    assert standard_R(3).trace_B == Q ** -3 * (Q ** 2 + 1 + Q ** -2)
    H21 = super_flip(2, 1)
    assert H21.trace_B == 1 and H21.nu == 1


@pytest.mark.parametrize("H", [standard_R(2), standard_R(3), super_flip(1, 1), super_flip(2, 1),
                               super_flip(2, 0), super_flip(0, 2)], ids=str)
def test_identity_suite(H):
    rep = verify_skew_identities(H)
    assert rep.ok, str(rep)


def test_roundtrip_and_errors():
    H = standard_R(2)
    assert load_R(dump_R(H)) == H
    assert dump_R(load_R(dump_R(H))) == dump_R(H)
    with pytest.raises(ParseError):
        load_R("{not json")


def test_non_ybe_rejected_with_witness():
    M = QMatrix.from_dense([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 1, 0, 1]])
    with pytest.raises(YBEError) as err:
        certify(M, 2)
    assert err.value.witness is not None


def test_flip_accepted_involutive():
    H = certify(flip(2), 2)
    assert H.involutive and H.q == ONE


def test_hecke_condition_failure():
    # 2 P satisfies YBE but not the Hecke condition
    with pytest.raises(HeckeConditionError):
        certify(flip(2) * 2, 2)


def test_dual_symmetry_is_certified():
    D = dual_symmetry(standard_R(2))
    assert D.trace_B == standard_R(2).trace_B


invertible = st.tuples(*[st.integers(-2, 2)] * 4).filter(lambda t: t[0] * t[3] - t[1] * t[2] != 0)


@given(invertible)
def test_gauge_invariance(g):
    # oracle: R' = (G (x) G) R (G (x) G)^-1 is again Hecke with the same Tr B and nu
    G = QMatrix.from_dense([[g[0], g[1]], [g[2], g[3]]])
    GG = kron(G, G)
    H = standard_R(2)
    H2 = certify(GG @ H.R @ GG.inverse(), 2, Q)
    assert H2.trace_B == H.trace_B and H2.nu == H.nu
    assert verify_skew_identities(H2).ok
