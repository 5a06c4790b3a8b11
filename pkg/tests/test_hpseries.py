import pytest
import sympy as sp
from hypothesis import given, strategies as st

from hecke_rea import heckealg as ha
from hecke_rea.hecke import standard_R, super_flip
from hecke_rea.hpseries import (HPFitError, conjugate_duality, dimension_crosscheck, exterior_dims, fit_series,
                                hook_test, hp_series, super_schur)

t = sp.Symbol("t")


def series_oracle(m, n, K):
    """Taylor coefficients of (1+t)^m / (1-t)^n via sympy."""
    s = sp.series((1 + t) ** m / (1 - t) ** n, t, 0, K + 1).removeO()
    return [int(s.coeff(t, k)) for k in range(K + 1)]


def test_exterior_dims_examples():
    minus, plus = exterior_dims(standard_R(2), 3)
    assert list(minus) == [1, 2, 1, 0] and list(plus) == [1, 2, 3, 4]
    minus, _ = exterior_dims(super_flip(1, 1), 3)
    assert list(minus) == [1, 2, 2, 2]
    assert exterior_dims(standard_R(3), 1)[0][1] == 3


def test_fit_examples():
    s = fit_series([1, 2, 1, 0, 0, 0])
    assert s.numerator == (1, 2, 1) and s.denominator == (1,) and s.birank == (2, 0)
    s = fit_series([1, 2, 2, 2, 2, 2])
    assert s.numerator == (1, 1) and s.denominator == (1, -1) and s.birank == (1, 1)
    s = fit_series(series_oracle(2, 1, 6))
    assert s.numerator == (1, 2, 1) and s.denominator == (1, -1) and s.birank == (2, 1)


def test_fit_rejections():
    with pytest.raises(HPFitError):
        fit_series([2, 1, 0])
    with pytest.raises(HPFitError):
        fit_series([1, 1, 2, 0, 0, 0])   # 1 + t + 2t^2 is not palindromic
    with pytest.raises(HPFitError):
        fit_series([1, 1, 2, 3, 5, 8, 13])  # 1/(1 - t - t^2): denominator sign pattern fails


@given(st.integers(0, 3), st.integers(0, 2))
def test_fit_recovers_birank(m, n):
    if m + n == 0:
        return
    s = fit_series(series_oracle(m, n, 2 * (m + n) + 3))
    assert s.birank == (m, n)
    assert s.expand(8) == series_oracle(m, n, 8)
    assert s.expand_plus(8) == series_oracle(n, m, 8)


@pytest.mark.parametrize("H,birank", [(standard_R(2), (2, 0)), (standard_R(3), (3, 0)), (super_flip(1, 1), (1, 1)),
                                      (super_flip(2, 1), (2, 1)), (super_flip(0, 2), (0, 2))], ids=str)
def test_hp_series_birank(H, birank):
    s = hp_series(H, 6)
    assert s.birank == birank
    assert list(s.dims_minus) == series_oracle(*birank, 6)


def test_super_schur_examples():
    assert super_schur((1,), (1, 2, 1), (1,)) == 2
    assert super_schur((2, 2), (1, 1), (1, -1)) == 0
    assert super_schur((2,), (1, 1), (1, -1)) == 2


def test_hook_examples():
    assert hook_test((3, 3), 2, 0)
    assert not hook_test((1, 1, 1), 2, 0)
    assert not hook_test((5, 2, 1, 1), 1, 1)


def weyl_dim(lam, m):
    """Classical gl(m) dimension by the Weyl product formula."""
    lam = list(lam) + [0] * (m - len(lam))
    num = den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num // den


@given(st.integers(1, 4).flatmap(lambda k: st.sampled_from(ha.partitions(k))), st.integers(1, 4))
def test_super_schur_matches_weyl(lam, m):
    N = tuple(int(sp.binomial(m, k)) for k in range(m + 1))
    expect = weyl_dim(lam, m) if len(lam) <= m else 0
    assert super_schur(lam, N, (1,)) == expect


def test_dimension_crosscheck():
    assert dimension_crosscheck(standard_R(2), (2, 1)).values == {"rank": 2, "super_schur": 2}
    assert dimension_crosscheck(super_flip(1, 1), (2, 2)).values == {"rank": 0, "super_schur": 0}
    assert dimension_crosscheck(standard_R(3), (2, 1)).values == {"rank": 8, "super_schur": 8}


def test_conjugate_duality():
    assert conjugate_duality((1, 2, 1), (1, -1))
