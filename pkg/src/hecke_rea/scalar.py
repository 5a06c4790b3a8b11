"""Exact rational functions of the deformation parameter ``q``.

A :class:`QScalar` is stored as ``q**shift * num(q) / den(q)`` where ``num`` and
``den`` are polynomials with rational coefficients, ``gcd(num, den) = 1``,
``num(0) != 0`` and ``den(0) == 1``.  That makes the representation canonical,
so equality is a structural comparison.

Polynomial arithmetic and gcds are delegated to FLINT's ``fmpq_poly``.
"""
from __future__ import annotations

import ast
from fractions import Fraction
from typing import Union

from flint import fmpq, fmpq_poly

__all__ = [
    "QScalar",
    "EvaluationError",
    "DomainError",
    "ParseError",
    "Q",
    "ONE",
    "ZERO",
    "OMEGA",
    "qint",
    "qnum",
    "qbinom",
    "eval_at",
    "parse_qscalar",
    "to_fraction",
]

_PZERO = fmpq_poly([])
_PONE = fmpq_poly([1])


class EvaluationError(ArithmeticError):
    """Raised when a QScalar is evaluated at a pole or at q = 0."""


class DomainError(ValueError):
    """Raised for arguments outside the domain of a q-combinatorial function."""


class ParseError(ValueError):
    """Raised when a QScalar text or JSON form cannot be parsed."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


def _to_fmpq(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, int):
        return fmpq(x)
    x = to_fraction(x)
    return fmpq(x.numerator, x.denominator)


Number = Union[int, Fraction, fmpq]


class QScalar:
    """Element of Q(q) in canonical form.  Immutable and hashable."""

    __slots__ = ("_s", "_n", "_d", "_h")

    def __init__(self, value: "QScalar | Number | str" = 0):
        if isinstance(value, QScalar):
            self._s, self._n, self._d = value._s, value._n, value._d
        elif isinstance(value, str):
            other = parse_qscalar(value)
            self._s, self._n, self._d = other._s, other._n, other._d
        else:
            c = _to_fmpq(value)
            self._s = 0
            self._n = fmpq_poly([c]) if c != 0 else _PZERO
            self._d = _PONE
        self._h = None

    # -- construction helpers -------------------------------------------------
    @classmethod
    def _raw(cls, s: int, n: fmpq_poly, d: fmpq_poly) -> "QScalar":
        obj = object.__new__(cls)
        obj._s, obj._n, obj._d, obj._h = s, n, d, None
        return obj

    @classmethod
    def _canon(cls, s: int, n: fmpq_poly, d: fmpq_poly) -> "QScalar":
        if n.is_zero():
            return _ZERO_RAW
        if not d.is_one():
            g = n.gcd(d)
            if not g.is_one():
                n = n // g
                d = d // g
            while d[0] == 0:
                d = d.right_shift(1)
                s -= 1
            c = d[0]
            if c != 1:
                n = n / c
                d = d / c
        while n[0] == 0:
            n = n.right_shift(1)
            s += 1
        return cls._raw(s, n, d)

    @classmethod
    def q(cls) -> "QScalar":
        return Q

    @classmethod
    def monomial(cls, e: int, c: Number = 1) -> "QScalar":
        c = _to_fmpq(c)
        if c == 0:
            return _ZERO_RAW
        return cls._raw(e, fmpq_poly([c]), _PONE)

    @classmethod
    def from_laurent(cls, coeffs: dict) -> "QScalar":
        """Build from a map exponent -> rational coefficient."""
        items = [(e, _to_fmpq(c)) for e, c in coeffs.items() if c != 0]
        if not items:
            return _ZERO_RAW
        lo = min(e for e, _ in items)
        hi = max(e for e, _ in items)
        arr = [fmpq(0)] * (hi - lo + 1)
        for e, c in items:
            arr[e - lo] = arr[e - lo] + c
        return cls._canon(lo, fmpq_poly(arr), _PONE)

    @classmethod
    def from_fraction(cls, num: dict, den: dict) -> "QScalar":
        n = cls.from_laurent(num)
        d = cls.from_laurent(den)
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        return n / d

    # -- predicates and accessors ---------------------------------------------
    def is_zero(self) -> bool:
        return self._n.is_zero()

    def is_laurent(self) -> bool:
        return self._d.is_one()

    def laurent_span(self):
        """(lowest, highest) exponent of a Laurent polynomial; None for zero."""
        if not self.is_laurent():
            raise DomainError(f"{self} is not a Laurent polynomial")
        if self._n.is_zero():
            return None
        return (self._s, self._s + self._n.degree())

    def is_constant(self) -> bool:
        return self._n.is_zero() or (self._s == 0 and self._d.is_one() and self._n.degree() == 0)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return to_fraction(self._n[0]) if not self._n.is_zero() else Fraction(0)

    def numerator(self) -> dict:
        """Laurent numerator as exponent -> Fraction (shift included)."""
        return {i + self._s: to_fraction(c) for i, c in enumerate(self._n.coeffs()) if c != 0}

    def denominator(self) -> dict:
        return {i: to_fraction(c) for i, c in enumerate(self._d.coeffs()) if c != 0}

    def __bool__(self) -> bool:
        return not self._n.is_zero()

    # -- arithmetic -------------------------------------------------------------
    @staticmethod
    def _lift(x) -> "QScalar":
        if isinstance(x, QScalar):
            return x
        if isinstance(x, (int, Fraction, fmpq)):
            return QScalar(x)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o._n.is_zero():
            return self
        if self._n.is_zero():
            return o
        s1, s2 = self._s, o._s
        if self._d.is_one() and o._d.is_one():
            if s1 == s2:
                return QScalar._canon(s1, self._n + o._n, _PONE)
            if s1 < s2:
                return QScalar._raw(s1, self._n + o._n.left_shift(s2 - s1), _PONE)
            return QScalar._raw(s2, o._n + self._n.left_shift(s1 - s2), _PONE)
        s = min(s1, s2)
        if self._d == o._d:
            return QScalar._canon(s, self._n.left_shift(s1 - s) + o._n.left_shift(s2 - s), self._d)
        a = (self._n * o._d).left_shift(s1 - s)
        b = (o._n * self._d).left_shift(s2 - s)
        return QScalar._canon(s, a + b, self._d * o._d)

    __radd__ = __add__

    def __neg__(self):
        if self._n.is_zero():
            return self
        return QScalar._raw(self._s, -self._n, self._d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if self._n.is_zero() or o._n.is_zero():
            return _ZERO_RAW
        if self._d.is_one() and o._d.is_one():
            return QScalar._raw(self._s + o._s, self._n * o._n, _PONE)
        # cross-cancel before multiplying to keep degrees small
        n1, d1, n2, d2 = self._n, self._d, o._n, o._d
        if not d2.is_one():
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 // g, d2 // g
        if not d1.is_one():
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 // g, d1 // g
        return QScalar._canon(self._s + o._s, n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "QScalar":
        if self._n.is_zero():
            raise ZeroDivisionError("QScalar division by zero")
        c = self._n[0]
        return QScalar._canon(-self._s, self._d / c, self._n / c)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        if self._n.is_zero():
            return _ONE_RAW if e == 0 else _ZERO_RAW
        if self._d.is_one() and self._n.degree() == 0:
            return QScalar._raw(self._s * e, self._n ** e, _PONE)
        return QScalar._canon(self._s * e, self._n ** e, self._d ** e)

    # -- comparison -------------------------------------------------------------
    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self._s == o._s and self._n == o._n and self._d == o._d

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._h is None:
            if self.is_constant():
                self._h = hash(self.constant_value())
            else:
                self._h = hash((self._s, tuple(self._n.coeffs()), tuple(self._d.coeffs())))
        return self._h

    # -- evaluation -------------------------------------------------------------
    def _eval_fmpq(self, q0: fmpq) -> fmpq:
        if self._n.is_zero():
            return fmpq(0)
        if q0 == 0:
            raise EvaluationError(f"cannot evaluate {self} at q = 0")
        dv = self._d(q0)
        if dv == 0:
            raise EvaluationError(f"pole of {self} at q = {q0}: denominator {self._den_str()} vanishes")
        v = self._n(q0) / dv
        if self._s:
            v = v * q0 ** self._s
        return v

    def eval_at(self, q0) -> Fraction:
        return to_fraction(self._eval_fmpq(_to_fmpq(q0)))

    def taylor1(self, q0=1) -> tuple:
        """Value and first derivative at ``q0`` (exact)."""
        x = _to_fmpq(q0)
        v = self._eval_fmpq(x)
        n, d, s = self._n, self._d, self._s
        # f = q^s n/d, f' = s q^(s-1) n/d + q^s (n'd - nd')/d^2
        dv = d(x)
        dn = n.derivative()(x) * dv - n(x) * d.derivative()(x)
        deriv = (x ** s) * dn / (dv * dv)
        if s:
            deriv = deriv + s * x ** (s - 1) * n(x) / dv
        return to_fraction(v), to_fraction(deriv)

    # -- text and json ------------------------------------------------------------
    @staticmethod
    def _laurent_str(terms: list) -> str:
        """terms: list of (exponent, fmpq) in descending exponent order."""
        if not terms:
            return "0"
        out = []
        for idx, (e, c) in enumerate(terms):
            c = to_fraction(c)
            neg = c < 0
            a = -c if neg else c
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if idx == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def _num_terms(self):
        cs = self._n.coeffs()
        return [(i + self._s, cs[i]) for i in range(len(cs) - 1, -1, -1) if cs[i] != 0]

    def _den_str(self) -> str:
        cs = self._d.coeffs()
        return self._laurent_str([(i, cs[i]) for i in range(len(cs) - 1, -1, -1) if cs[i] != 0])

    def __str__(self) -> str:
        num = self._laurent_str(self._num_terms())
        if self._d.is_one():
            return num
        return f"({num})/({self._den_str()})"

    def __repr__(self) -> str:
        return f"QScalar('{self}')"

    def to_json(self) -> dict:
        num = sorted(self.numerator().items())
        den = sorted(self.denominator().items())
        return {
            "num": [[e, str(c)] for e, c in num],
            "den": [[e, str(c)] for e, c in den],
        }

    def __reduce__(self):
        # flint polynomials do not pickle; go through the canonical JSON form
        return (QScalar.from_json, (self.to_json(),))

    @classmethod
    def from_json(cls, obj) -> "QScalar":
        try:
            num = {int(e): Fraction(c) for e, c in obj["num"]}
            den = {int(e): Fraction(c) for e, c in obj["den"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed QScalar JSON: {obj!r}") from exc
        if not den:
            raise ParseError("QScalar JSON with empty denominator")
        return cls.from_fraction(num, den)


_ZERO_RAW = QScalar._raw(0, _PZERO, _PONE)
_ONE_RAW = QScalar._raw(0, _PONE, _PONE)
ZERO = _ZERO_RAW
ONE = _ONE_RAW
Q = QScalar._raw(1, _PONE, _PONE)
OMEGA = Q - Q.inverse()


def qnum(k: int, q: QScalar = Q) -> QScalar:
    """k_q for an arbitrary (possibly specialized) value of q.

    Uses the polynomial form q^(k-1) + q^(k-3) + ... + q^(1-k), so it is
    defined at q = 1 as well (where it equals k).
    """
    if k < 0:
        return -qnum(-k, q)
    if q is Q:
        return QScalar.from_laurent({k - 1 - 2 * i: 1 for i in range(k)})
    acc = ZERO
    for i in range(k):
        acc = acc + q ** (k - 1 - 2 * i)
    return acc


def qint(k: int) -> QScalar:
    """The q-number (q^k - q^-k)/(q - q^-1)."""
    return qnum(k, Q)


def qbinom(p: int, k: int, q: QScalar = Q) -> QScalar:
    """Gaussian binomial in the symmetric normalization."""
    if p < 0 or k < 0 or k > p:
        raise DomainError(f"qbinom({p}, {k}) undefined: need 0 <= k <= p")
    acc = ONE
    for i in range(k):
        acc = acc * qnum(p - i, q) / qnum(i + 1, q)
    return acc


def eval_at(x: QScalar, q0) -> Fraction:
    return x.eval_at(q0)


# -- parsing -------------------------------------------------------------------

def _eval_node(node):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return QScalar(node.value)
    if isinstance(node, ast.Name) and node.id == "q":
        return Q
    if isinstance(node, ast.UnaryOp):
        v = _eval_node(node.operand)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = _eval_node(node.left)
            e = node.right
            sign = 1
            if isinstance(e, ast.UnaryOp) and isinstance(e.op, (ast.USub, ast.UAdd)):
                sign = -1 if isinstance(e.op, ast.USub) else 1
                e = e.operand
            if not (isinstance(e, ast.Constant) and isinstance(e.value, int)):
                raise ParseError("exponents must be integer literals")
            return base ** (sign * e.value)
        a, b = _eval_node(node.left), _eval_node(node.right)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            return a / b
    raise ParseError(f"unsupported syntax in QScalar expression: {ast.dump(node)}")


def parse_qscalar(text: str) -> QScalar:
    """Parse expressions such as ``"q^2 - 1 + q^-2"`` or ``"(q)/(1 + q^2)"``."""
    src = text.strip().replace("^", "**")
    if not src:
        raise ParseError("empty QScalar expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse QScalar {text!r}") from exc
    try:
        return _eval_node(tree)
    except ZeroDivisionError as exc:
        raise ParseError(f"division by zero in {text!r}") from exc
