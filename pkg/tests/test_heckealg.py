from math import factorial

import pytest
from hypothesis import given, strategies as st

from hecke_rea import heckealg as ha
from hecke_rea.hecke import standard_R, super_flip
from hecke_rea.linalg import QMatrix, rank_generic
from hecke_rea.scalar import ONE, Q, qnum

partition_st = st.integers(1, 7).flatmap(lambda k: st.sampled_from(ha.partitions(k)))


def hook_formula(lam):
    """f^lam = k! / prod(hooks), computed independently of the tableau enumeration."""
    conj = ha.conjugate(lam)
    h = 1
    for r, row in enumerate(lam):
        for c in range(row):
            h *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(sum(lam)) // h


def test_tableau_counts():
    assert len(ha.standard_tableaux((4,))) == 1
    assert len(ha.standard_tableaux((2, 1))) == 2
    rows = [t.rows for t in ha.standard_tableaux((3, 2, 1))]
    assert ((1, 3, 4), (2, 6), (5,)) in rows


@given(partition_st)
def test_tableau_count_is_hook_formula(lam):
    tabs = ha.standard_tableaux(lam)
    assert len(tabs) == hook_formula(lam) == ha.hook_length_count(lam)
    assert len({t.rows for t in tabs}) == len(tabs)


@given(st.integers(1, 7))
def test_sum_of_squares(k):
    assert sum(hook_formula(l) ** 2 for l in ha.partitions(k)) == factorial(k)


def test_content_vectors():
    t = ha.StandardTableau(((1, 3, 4), (2, 6), (5,)))
    assert ha.content_vector(t) == [ONE, Q ** -2, Q ** 2, Q ** 4, Q ** -4, ONE]
    row = ha.standard_tableaux((4,))[0]
    assert ha.content_vector(row) == [ONE, Q ** 2, Q ** 4, Q ** 6]
    t21 = ha.standard_tableaux(ha.lambda_mn_minus(1, 1))[0]
    s = sum(ha.content_vector(t21), Q * 0)
    assert s == (Q + Q.inverse()) ** 2 - 1


def test_jm_elements():
    H = standard_R(2)
    J = ha.jm_images(H, 3)
    assert J[0] == QMatrix.eye(8, (2, 2, 2))
    assert J[1] == H.R_at(1, 3) @ H.R_at(1, 3)
    assert J[1] @ J[2] == J[2] @ J[1]
    J2 = ha.jm_images(H, 2)[1]
    I = H.eye(2)
    assert ((J2 - I * Q ** 2) @ (J2 - I * Q ** -2)).is_zero()


def test_idempotent_examples():
    H = standard_R(2)
    E2 = ha.idempotent_image(H, ha.standard_tableaux((2,))[0]).matrix
    Pplus = (H.R + H.eye(2) * Q.inverse()) * qnum(2).inverse()
    assert E2 == Pplus and rank_generic(E2) == 3
    assert ha.idempotent_image(H, ha.standard_tableaux((1, 1, 1))[0]).matrix.is_zero()
    t1, t2 = ha.standard_tableaux((2, 1))
    E1, E2 = (ha.idempotent_image(H, t).matrix for t in (t1, t2))
    assert E1 @ E2 == QMatrix.zeros(8) and E1 @ E1 == E1
    assert rank_generic(E1) == rank_generic(E2) == 2


def test_young_decomposition():
    assert ha.young_decomposition(standard_R(2), 2) == {(2,): (1, 3), (1, 1): (1, 1)}
    assert ha.young_decomposition(standard_R(2), 3) == {(3,): (1, 4), (2, 1): (2, 2), (1, 1, 1): (1, 0)}
    assert ha.young_decomposition(super_flip(1, 1), 2) == {(2,): (1, 2), (1, 1): (1, 2)}


@pytest.mark.parametrize("H", [standard_R(2), super_flip(1, 1), super_flip(2, 1)], ids=str)
def test_completeness(H):
    assert ha.completeness_check(H, 3, symbolic=H.N <= 2).ok


def test_trace_recursion_values():
    t = ha.standard_tableaux((2, 1))[0]
    rep = ha.trace_recursion_check(super_flip(1, 1), t)
    assert rep.ok and rep.values["recovered_trC"] == 0
    t11 = ha.standard_tableaux((1, 1))[0]
    rep = ha.trace_recursion_check(standard_R(2), t11)
    assert rep.ok and rep.values["recovered_trC"] == Q ** -1 + Q ** -3
    om = Q - Q.inverse()
    a, _ = ha.alpha_beta(t11, 2, 0)
    assert a == -(om * om) * Q ** -4


@pytest.mark.parametrize("H", [super_flip(1, 1), standard_R(2)], ids=str)
def test_kernel_criterion(H):
    m, n = H.birank
    assert ha.kernel_criterion_check(H, (m + 1) * (n + 1) + 1).ok


@given(partition_st.filter(lambda l: sum(l) <= 4), partition_st.filter(lambda l: sum(l) <= 3))
def test_lr_dimension_count(lam, mu):
    # oracle: sum_nu c^nu f^nu = binom(|lam|+|mu|, |lam|) f^lam f^mu
    k = sum(lam) + sum(mu)
    total = sum(ha.lr_coefficient(lam, mu, nu) * hook_formula(nu) for nu in ha.partitions(k))
    binom = factorial(k) // (factorial(sum(lam)) * factorial(sum(mu)))
    assert total == binom * hook_formula(lam) * hook_formula(mu)
    assert all(ha.lr_coefficient(lam, mu, nu) == ha.lr_coefficient(mu, lam, nu) for nu in ha.partitions(k))


def test_lr_consistency_on_ranks():
    assert ha.lr_consistency_check(standard_R(2), 4).ok


def test_cap():
    with pytest.raises(ha.CapExceededError):
        ha.check_cap(standard_R(2), 9)
