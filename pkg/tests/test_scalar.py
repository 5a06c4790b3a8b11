from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from hecke_rea.scalar import (ONE, Q, ZERO, DomainError, EvaluationError, ParseError, QScalar,
                              parse_qscalar, qbinom, qint, qnum)

qs = sp.Symbol("q")


def oracle(x: QScalar, q0: Fraction) -> Fraction:
    """Evaluate through sympy from the printed numerator/denominator dicts."""
    num = sum((sp.Rational(str(c)) * qs ** e for e, c in x.numerator().items()), sp.Integer(0))
    den = sum((sp.Rational(str(c)) * qs ** e for e, c in x.denominator().items()), sp.Integer(0))
    at = {qs: sp.Rational(q0.numerator, q0.denominator)}
    v = sp.Rational(num.subs(at)) / sp.Rational(den.subs(at))
    return Fraction(int(v.p), int(v.q))


laurent = st.dictionaries(st.integers(-4, 4), st.fractions(max_denominator=5).filter(bool), max_size=4)
points = st.sampled_from([Fraction(3, 2), Fraction(5, 3), Fraction(-7, 2), Fraction(2), Fraction(1, 3)])


def test_qnum_values():
    assert qnum(0) == ZERO
    assert qnum(2) == Q + Q.inverse()
    assert qnum(-3) == -(Q ** 2 + 1 + Q ** -2)
    assert qnum(3).eval_at(1) == 3


def test_qbinom_values():
    assert qbinom(3, 0) == ONE
    assert qbinom(2, 1) == Q + Q.inverse()
    assert qbinom(4, 2) == Q ** 4 + Q ** 2 + 2 + Q ** -2 + Q ** -4
    with pytest.raises(DomainError):
        qbinom(2, 3)


def test_eval():
    assert (Q + Q.inverse()).eval_at(1) == 2
    assert qint(3).eval_at(2) == Fraction(21, 4)
    with pytest.raises(EvaluationError):
        (1 / (Q - Q.inverse())).eval_at(1)


def test_parse_and_json_roundtrip():
    x = parse_qscalar("(q^2 + 1)/(q - 1/q)")
    assert x == (Q ** 2 + 1) / (Q - Q.inverse())
    assert parse_qscalar(str(qbinom(4, 2))) == qbinom(4, 2)
    assert QScalar.from_json(x.to_json()) == x
    with pytest.raises(ParseError):
        parse_qscalar("q +* 2")


def test_canonical_form_is_unique():
    a = (Q ** 2 - 1) / (Q - 1)
    assert a == Q + 1
    assert hash(a) == hash(Q + 1)
    assert str(a) == str(Q + 1)


@given(laurent, laurent, points)
def test_ring_ops_match_pointwise_oracle(a, b, q0):
    x, y = QScalar.from_laurent(a), QScalar.from_laurent(b)
    fx, fy = oracle(x, q0), oracle(y, q0)
    assert (x + y).eval_at(q0) == fx + fy
    assert (x * y).eval_at(q0) == fx * fy
    assert (x - y).eval_at(q0) == fx - fy
    if fy:
        assert (x / y).eval_at(q0) == fx / fy


@given(laurent.filter(bool), laurent)
def test_field_axioms(a, b):
    x, y = QScalar.from_laurent(a), QScalar.from_laurent(b)
    assert x * x.inverse() == ONE
    assert (x + y) * x.inverse() == ONE + y / x
    assert x * (y + ONE) == x * y + x


@given(st.integers(0, 7), st.integers(0, 7))
def test_qbinom_against_sympy_product(p, k):
    assume(k <= p)
    # oracle: prod (q^{p-i} - q^{-(p-i)}) / (q^{i+1} - q^{-(i+1)})
    expr = sp.Integer(1)
    for i in range(k):
        expr *= (qs ** (p - i) - qs ** (i - p)) / (qs ** (i + 1) - qs ** (-i - 1))
    for q0 in (Fraction(3, 2), Fraction(5, 7)):
        v = sp.Rational(expr.subs(qs, sp.Rational(q0.numerator, q0.denominator)))
        assert qbinom(p, k).eval_at(q0) == Fraction(int(v.p), int(v.q))


@given(st.integers(-6, 6))
def test_qnum_symmetry(k):
    assert qnum(k) == -qnum(-k)
    assert qnum(k).eval_at(1) == k


def test_pickle_roundtrip():
    import pickle
    x = (Q ** 3 - 2) / (Q ** -1 + Q)
    assert pickle.loads(pickle.dumps(x)) == x
