from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st
from sympy.matrices import kronecker_product

from hecke_rea.hecke import standard_R
from hecke_rea.linalg import (GenericityError, QMatrix, SingularMatrixError, amplify, flip, kron,
                              partial_trace, rank_generic, rank_symbolic)
from hecke_rea.scalar import ONE, Q, QScalar

Q0 = Fraction(7, 5)


def to_sympy(M: QMatrix, q0=Q0) -> sp.Matrix:
    d = M.evaluate(q0).to_dense()
    return sp.Matrix([[sp.Rational(str(v.constant_value())) for v in row] for row in d])


entry = st.sampled_from([0, 0, 0, 1, -1, 2, "q", "-q", "1/q", "q^2 - 1"])


@st.composite
def qmatrices(draw, rows=None, cols=None):
    from hecke_rea.scalar import parse_qscalar
    r = draw(st.integers(1, 4)) if rows is None else rows
    c = draw(st.integers(1, 4)) if cols is None else cols
    vals = [[parse_qscalar(str(draw(entry))) for _ in range(c)] for _ in range(r)]
    return QMatrix.from_dense(vals)


def test_kron_examples():
    assert kron(QMatrix.eye(2), QMatrix.eye(3)) == QMatrix.eye(6)
    A = QMatrix.from_dense([[Q, 1], [2, Q.inverse()]])
    assert kron(A, QMatrix.eye(1)) == A
    D = kron(QMatrix.diag([Q, ONE]), QMatrix.diag([ONE, Q]))
    assert D == QMatrix.diag([Q, Q ** 2, ONE, Q])


def test_amplify_examples():
    M = QMatrix.from_dense([[1, 2], [3, 4]])
    assert amplify(M, 1, 1, 2) == M
    P12 = amplify(flip(2), 1, 3, 2)
    # e1 (x) e2 (x) e1 -> e2 (x) e1 (x) e1, 0-based index 0*4+1*2+0 -> 1*4+0*2+0
    v = QMatrix(8, 1, {(2, 0): ONE})
    assert P12 @ v == QMatrix(8, 1, {(4, 0): ONE})
    R = standard_R(2).R
    R12, R23 = amplify(R, 1, 3, 2), amplify(R, 2, 3, 2)
    assert R12 @ R23 @ R12 == R23 @ R12 @ R23


def test_partial_trace_examples():
    I4 = QMatrix.eye(4, (2, 2))
    assert partial_trace(I4, [2]) == QMatrix.eye(2) * 2
    assert partial_trace(flip(2), [2]) == QMatrix.eye(2)
    H = standard_R(2)
    R12, psi23 = amplify(H.R, 1, 3, 2), amplify(H.psi, 2, 3, 2)
    # legs 1 and 3 survive, so P13 is the flip on the remaining two legs
    P13 = QMatrix(4, 4, {(k * 2 + i, i * 2 + k): ONE for i in range(2) for k in range(2)})
    assert partial_trace(R12 @ psi23, [2]) == P13


def test_rank_examples():
    assert rank_generic(QMatrix.eye(5)) == 5
    assert rank_generic(QMatrix.zeros(3)) == 0
    H = standard_R(2)
    q = H.q
    Pm = (QMatrix.eye(4) * q - H.R) * (q + q.inverse()).inverse()   # projector onto the -1/q eigenspace
    assert rank_generic(Pm) == 1
    assert rank_symbolic(Pm) == 1


def test_rank_genericity_detected():
    # q - 3/2 vanishes at the first sample point only
    M = QMatrix.from_dense([[Q - QScalar(Fraction(3, 2))]])
    with pytest.raises(GenericityError):
        rank_generic(M)


def test_singular_inverse():
    with pytest.raises(SingularMatrixError):
        QMatrix.from_dense([[1, Q], [1, Q]]).inverse()


@given(qmatrices(rows=3, cols=3), qmatrices(rows=3, cols=2))
def test_matmul_add_against_sympy(A, B):
    assert to_sympy(A @ B) == to_sympy(A) * to_sympy(B)
    assert to_sympy(A + A) == 2 * to_sympy(A)
    assert to_sympy(A.T) == to_sympy(A).T


@given(qmatrices(), qmatrices())
def test_kron_against_sympy(A, B):
    assert to_sympy(kron(A, B)) == kronecker_product(to_sympy(A), to_sympy(B))


@given(qmatrices(rows=4, cols=4))
def test_partial_trace_brute_force(A):
    A = A.with_legs((2, 2), (2, 2))
    S = to_sympy(A)
    want1 = sp.Matrix(2, 2, lambda i, k: sum(S[i * 2 + j, k * 2 + j] for j in range(2)))
    want2 = sp.Matrix(2, 2, lambda j, l: sum(S[i * 2 + j, i * 2 + l] for i in range(2)))
    assert to_sympy(partial_trace(A, [2])) == want1
    assert to_sympy(partial_trace(A, [1])) == want2


@given(qmatrices(rows=3, cols=3))
def test_rank_against_sympy(A):
    assert A.evaluate(Q0).to_fmpq_mat(Q0).rank() == to_sympy(A).rank()
    s = rank_symbolic(A)
    q = sp.Symbol("q")
    sym = sp.Matrix([[sp.sympify(str(v).replace("^", "**"), locals={"q": q}) for v in row] for row in A.to_dense()])
    assert s == sym.rank(simplify=True)


@given(qmatrices(rows=3, cols=3))
def test_inverse_roundtrip(A):
    try:
        Ai = A.inverse()
    except SingularMatrixError:
        assert rank_symbolic(A) < 3
        return
    assert A @ Ai == QMatrix.eye(3)


def test_json_roundtrip():
    M = standard_R(2).R
    assert QMatrix.from_json(M.dumps()) == M
