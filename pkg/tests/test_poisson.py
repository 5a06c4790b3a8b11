from itertools import product

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from hecke_rea import poisson


def leg_oracle(m, r, a, b):
    """r placed on legs (a, b) of (C^m)^{(x)3} by explicit index loops."""
    n = m ** 3
    out = sp.zeros(n, n)
    for x in product(range(m), repeat=3):
        for y in product(range(m), repeat=3):
            others = [t for t in range(3) if t not in (a, b)]
            if any(x[t] != y[t] for t in others):
                continue
            v = r[x[a] * m + x[b], y[a] * m + y[b]]
            if v:
                out[(x[0] * m + x[1]) * m + x[2], (y[0] * m + y[1]) * m + y[2]] = v
    return out


@pytest.mark.parametrize("m", [2, 3])
def test_cybe_oracle(m):
    r = poisson.classical_r(m)["r"]
    r12, r13, r23 = (leg_oracle(m, r, a, b) for a, b in ((0, 1), (0, 2), (1, 2)))
    Y = r12 * r13 - r13 * r12 + r12 * r23 - r23 * r12 + r13 * r23 - r23 * r13
    assert Y.is_zero_matrix
    assert poisson.cybe_check(m).ok


@pytest.mark.parametrize("m", [2, 3])
def test_r_expansion(m):
    rep = poisson.r_expansion_check(m)
    assert rep.ok, rep.failures()


def test_pl_bracket_m2():
    L = poisson.gens(2)
    pl = poisson.bracket_pl(2)
    # {l_1^2, l_2^1} = l_1^1 - l_2^2
    assert pl(L[0][1], L[1][0]) == L[0][0] - L[1][1]


@pytest.mark.parametrize("m", [2, 3])
@pytest.mark.parametrize("ab", [(1, 0), (0, 1), (1, 1), (2, -3), (sp.Rational(1, 2), 5)])
def test_pencil_jacobi(m, ab):
    ok, wit = poisson.pencil_jacobi(m, *ab)
    assert ok, wit


@pytest.mark.parametrize("m", [2, 3])
def test_pencil_report(m):
    assert poisson.pencil_report(m).ok


def test_sl2_tables():
    assert poisson.sl2_tables().ok


def test_su2_tables_common_factor():
    rep = poisson.su2_tables()
    assert rep.ok
    assert sp.sympify(rep.values["renormalization"]) == 2 * sp.I


@pytest.mark.parametrize("m", [2, 3])
def test_cocycle(m):
    rep = poisson.cocycle_check(m)
    assert rep.ok, rep.failures()


def test_cocycle_rejects_m():
    with pytest.raises(ValueError):
        poisson.cocycle_check(4)


def test_plus_bracket_alone():
    assert poisson.plus_bracket_search(3) is not None
    assert poisson.plus_bracket_search(2) is None


def poly(m):
    vs = [s for row in poisson.gens(m) for s in row]
    mono = st.tuples(st.integers(-3, 3), st.sampled_from(vs), st.sampled_from(vs + [sp.Integer(1)]))
    return st.lists(mono, min_size=1, max_size=3).map(lambda ts: sp.expand(sum(c * a * b for c, a, b in ts)))


@settings(max_examples=15)
@given(poly(2), poly(2), poly(2))
def test_antisymmetry_leibniz_jacobi(f, g, h):
    br = poisson.bracket_pl(2) + poisson.bracket_r(2)
    assert sp.expand(br(f, g) + br(g, f)) == 0
    assert sp.expand(br(f, g * h) - br(f, g) * h - g * br(f, h)) == 0
    assert poisson.jacobiator(br, f, g, h) == 0
