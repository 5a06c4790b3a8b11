"""Semiclassical layer: the classical r-matrix, the quadratic bracket {,}_r and the Poisson pencil.

Functions on gl(m)^* are sympy polynomials in commuting symbols ``l11, l12, ...``
(1-based, ``l_i^j`` is ``lij``).  Brackets are stored by their values on
generator pairs and extended as biderivations.  No q appears here except in
:func:`r_expansion_check`, which differentiates ``standard_R(m) P`` at q = 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import sympy as sp

from .hecke import standard_R
from .linalg import flip
from .report import CheckReport

__all__ = [
    "gens",
    "Bracket",
    "classical_r",
    "cybe_check",
    "r_expansion_check",
    "bracket_r",
    "bracket_r_vector_fields",
    "bracket_plus",
    "bracket_minus",
    "bracket_pl",
    "jacobiator",
    "pencil_jacobi",
    "pencil_report",
    "sl2_tables",
    "su2_tables",
    "plus_bracket_search",
    "cocycle_check",
    "cocycle_pairing",
]


def gens(m: int) -> list:
    """m x m matrix of generator symbols, ``L[i][j] = l_{i+1}^{j+1}``."""
    return [[sp.Symbol(f"l{i + 1}{j + 1}") for j in range(m)] for i in range(m)]


def _flat(m: int) -> list:
    return [x for row in gens(m) for x in row]


@dataclass
class Bracket:
    """A bilinear biderivation given on generator pairs."""

    m: int
    table: dict          # (sym, sym) -> sympy expression
    name: str = ""

    def on(self, a, b):
        return self.table[(a, b)]

    def __call__(self, f, g):
        f, g = sp.sympify(f), sp.sympify(g)
        out = sp.Integer(0)
        vs = _flat(self.m)
        df = {a: sp.diff(f, a) for a in vs if f.has(a)}
        dg = {b: sp.diff(g, b) for b in vs if g.has(b)}
        for a, fa in df.items():
            for b, gb in dg.items():
                v = self.table[(a, b)]
                if v != 0:
                    out += fa * gb * v
        return sp.expand(out)

    def __add__(self, other: "Bracket") -> "Bracket":
        return Bracket(self.m, {k: sp.expand(v + other.table[k]) for k, v in self.table.items()},
                       f"{self.name}+{other.name}")

    def __mul__(self, c) -> "Bracket":
        c = sp.nsimplify(c) if isinstance(c, (Fraction, float)) else sp.sympify(c)
        return Bracket(self.m, {k: sp.expand(c * v) for k, v in self.table.items()}, f"{c}*{self.name}")

    __rmul__ = __mul__

    def antisymmetric(self) -> bool:
        return all(sp.expand(v + self.table[(b, a)]) == 0 for (a, b), v in self.table.items())

    def degrees(self) -> set:
        out = set()
        for v in self.table.values():
            if v != 0:
                out.add(sp.Poly(v, *_flat(self.m)).total_degree())
        return out


# -- the classical r-matrix -----------------------------------------------------------------

def _unit(m, i, j):
    M = sp.zeros(m, m)
    M[i, j] = 1
    return M


def _kron(A, B):
    return sp.kronecker_product(A, B)


def classical_r(m: int) -> dict:
    """r = sum h_i^i (x) h_i^i + 2 sum_{i<j} h_i^j (x) h_j^i with r_+, r_- as elements and images.

    Elements of gl(m) (x) gl(m) are dicts {((i, j), (k, s)): coeff} in the basis e_i^j (x) e_k^s.
    """
    if m < 2:
        raise ValueError("m >= 2")
    r_plus = {((i, j), (j, i)): 1 for i in range(m) for j in range(m)}
    r_minus = {}
    for i, j in combinations(range(m), 2):
        r_minus[((i, j), (j, i))] = 1
        r_minus[((j, i), (i, j))] = -1
    r = sp.zeros(m * m, m * m)
    for i in range(m):
        r += _kron(_unit(m, i, i), _unit(m, i, i))
    for i, j in combinations(range(m), 2):
        r += 2 * _kron(_unit(m, i, j), _unit(m, j, i))
    return {"r": r, "r_plus": r_plus, "r_minus": r_minus}


def _image(m: int, elem: dict):
    out = sp.zeros(m * m, m * m)
    for ((i, j), (k, s)), c in elem.items():
        out += c * _kron(_unit(m, i, j), _unit(m, k, s))
    return out


def _P(m: int):
    return sum((_kron(_unit(m, i, j), _unit(m, j, i)) for i in range(m) for j in range(m)), sp.zeros(m * m, m * m))


def _leg(m: int, M, legs: tuple):
    """Place an m^2 x m^2 operator on legs (a, b) of (C^m)^{(x)3}."""
    a, b = legs
    P = _P(m)
    I = sp.eye(m)
    M12 = _kron(M, I)
    if (a, b) == (1, 2):
        return M12
    P23 = _kron(I, P)
    if (a, b) == (1, 3):
        return P23 * M12 * P23
    if (a, b) == (2, 3):
        return _kron(I, M)
    raise ValueError(legs)


def cybe_check(m: int) -> CheckReport:
    d = classical_r(m)
    r = d["r"]
    rep = CheckReport(f"classical r-matrix m={m}")
    r12, r13, r23 = _leg(m, r, (1, 2)), _leg(m, r, (1, 3)), _leg(m, r, (2, 3))

    def br(x, y):
        return x * y - y * x

    Y = br(r12, r13) + br(r12, r23) + br(r13, r23)
    rep.add("[r12,r13] + [r12,r23] + [r13,r23] = 0", Y.is_zero_matrix)
    P = _P(m)
    r21 = P * r * P
    rep.add("image of r_+ is (r_12 + r_21)/2", _image(m, d["r_plus"]) == (r + r21) / 2)
    rep.add("image of r_- is (r_12 - r_21)/2", _image(m, d["r_minus"]) == (r - r21) / 2)
    rp = d["r_plus"]
    rep.add("r_+ equals its flip", all(rp.get((b, a)) == c for (a, b), c in rp.items()))
    return rep


def r_expansion_check(m: int) -> CheckReport:
    """standard_R(m) P = I + nu r + O(nu^2) with q = 1 + nu."""
    H = standard_R(m)
    RP = H.R @ flip(m)
    rep = CheckReport(f"first-order expansion of R P, m={m}")
    n = m * m
    val = sp.zeros(n, n)
    der = sp.zeros(n, n)
    for (a, b), v in RP.items():
        x0, x1 = v.taylor1(1)
        val[a, b] = sp.Rational(x0.numerator, x0.denominator)
        der[a, b] = sp.Rational(x1.numerator, x1.denominator)
    rep.add("R P = I at q = 1", val == sp.eye(n))
    rep.add("d(R P)/dq at q = 1 equals r", der == classical_r(m)["r"], None)
    rep.values["r_computed"] = der
    # the O(nu) part of the REA relations, with the commutator read as nu {,}
    rep.add("first-order REA relations reproduce {,}_r", _quadratic(m, der).table == bracket_r(m).table)
    return rep


# -- brackets ---------------------------------------------------------------------------------

def _from_matrix(m: int, Bm, name: str) -> Bracket:
    """Read {l_i^j, l_k^s} off the entry [(i,k),(j,s)] of an m^2 x m^2 matrix."""
    L = gens(m)
    table = {}
    for i, j, k, s in product(range(m), repeat=4):
        table[(L[i][j], L[k][s])] = sp.expand(Bm[i * m + k, j * m + s])
    return Bracket(m, table, name)


def _quadratic(m: int, r) -> Bracket:
    L = sp.Matrix(gens(m))
    I = sp.eye(m)
    P = _P(m)
    L1, L2 = _kron(L, I), _kron(I, L)
    rb12 = r.T
    rb21 = (P * r * P).T
    Bm = L2 * L1 * rb21 - rb12 * L1 * L2 + L2 * rb12 * L1 - L1 * rb21 * L2
    return _from_matrix(m, Bm, "r")


def bracket_r(m: int) -> Bracket:
    """{L_1, L_2}_r = L_2 L_1 rb_21 - rb_12 L_1 L_2 + L_2 rb_12 L_1 - L_1 rb_21 L_2."""
    return _quadratic(m, classical_r(m)["r"])


def _left(m, i, j, f):
    """e_i^j |> f: l_k^s -> delta_kj l_i^s, extended by Leibniz."""
    L = gens(m)
    return sp.expand(sum(L[i][s] * sp.diff(f, L[j][s]) for s in range(m)))


def _right(m, i, j, f):
    """f <| e_i^j: l_k^s -> delta_is l_k^j."""
    L = gens(m)
    return sp.expand(sum(L[k][j] * sp.diff(f, L[k][i]) for k in range(m)))


def _ad(m, i, j, f):
    return sp.expand(_left(m, i, j, f) - _right(m, i, j, f))


def _plus(m, f, g):
    lr = sum(_left(m, i, j, f) * _right(m, j, i, g) for i in range(m) for j in range(m))
    rl = sum(_right(m, i, j, f) * _left(m, j, i, g) for i in range(m) for j in range(m))
    return sp.expand(lr - rl)


def _minus(m, f, g):
    out = 0
    for i, j in combinations(range(m), 2):
        out += _ad(m, i, j, f) * _ad(m, j, i, g) - _ad(m, j, i, f) * _ad(m, i, j, g)
    return sp.expand(out)


def _table(m: int, fn, name: str) -> Bracket:
    vs = _flat(m)
    return Bracket(m, {(a, b): fn(m, a, b) for a in vs for b in vs}, name)


def bracket_plus(m: int) -> Bracket:
    """{f, g}_+ = o r_+^{l,r}(f (x) g) - o r_+^{r,l}(f (x) g)."""
    return _table(m, _plus, "+")


def bracket_minus(m: int) -> Bracket:
    """{f, g}_- = o r_-^{ad,ad}(f (x) g)."""
    return _table(m, _minus, "-")


def bracket_r_vector_fields(m: int) -> Bracket:
    """{,}_+ - {,}_- assembled from left, right and adjoint vector fields."""
    p, q = bracket_plus(m), bracket_minus(m)
    return Bracket(m, {k: sp.expand(v - q.table[k]) for k, v in p.table.items()}, "r(vf)")


def bracket_pl(m: int) -> Bracket:
    """{l_i^j, l_k^s} = delta_kj l_i^s - delta_is l_k^j."""
    L = gens(m)
    table = {}
    for i, j, k, s in product(range(m), repeat=4):
        table[(L[i][j], L[k][s])] = (L[i][s] if k == j else 0) - (L[k][j] if i == s else 0)
    return Bracket(m, table, "PL")


def jacobiator(b: Bracket, x, y, z):
    return sp.expand(b(x, b(y, z)) + b(y, b(z, x)) + b(z, b(x, y)))


def _mixed(b1: Bracket, b2: Bracket, x, y, z):
    out = 0
    for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
        out += b1(u, b2(v, w)) + b2(u, b1(v, w))
    return sp.expand(out)


def _triples(m: int):
    return list(combinations(_flat(m), 3))


def pencil_jacobi(m: int, a, b) -> tuple:
    """(ok, witness): the Jacobiator of a {,}_PL + b {,}_r on all generator triples."""
    br = bracket_pl(m) * sp.Rational(a) + bracket_r(m) * sp.Rational(b)
    for t in _triples(m):
        J = jacobiator(br, *t)
        if J != 0:
            return False, (tuple(str(s) for s in t), str(J))
    return True, None


def pencil_report(m: int, pairs=((1, 0), (0, 1), (1, 1), (2, 3))) -> CheckReport:
    rep = CheckReport(f"Poisson pencil m={m}")
    pl, r = bracket_pl(m), bracket_r(m)
    rep.add("{,}_PL antisymmetric", pl.antisymmetric())
    rep.add("{,}_r antisymmetric", r.antisymmetric())
    rep.add("{,}_PL linear, {,}_r quadratic on generators", pl.degrees() == {1} and r.degrees() == {2})
    rep.add("matrix form of {,}_r matches the vector-field form", r.table == bracket_r_vector_fields(m).table)
    for a, b in pairs:
        ok, wit = pencil_jacobi(m, a, b)
        rep.add(f"Jacobi for {a} PL + {b} r", ok, wit)
    for name, fn in (("PL-PL", lambda t: jacobiator(pl, *t)),
                     ("mixed Schouten term", lambda t: _mixed(pl, r, *t)),
                     ("r-r", lambda t: jacobiator(r, *t))):
        bad = next((t for t in _triples(m) if fn(t) != 0), None)
        rep.add(f"{name} component vanishes", bad is None, bad and tuple(str(s) for s in bad))
    return rep


def plus_bracket_search(m: int):
    """A generator triple on which {,}_+ alone violates Jacobi, or None (inconclusive)."""
    b = bracket_plus(m)
    for t in _triples(m):
        J = jacobiator(b, *t)
        if J != 0:
            return tuple(str(s) for s in t), str(J)
    return None


# -- sl(2) and su(2) --------------------------------------------------------------------------

def _sl2_subs():
    L = gens(2)
    e, f, h = sp.symbols("e f h")
    # l_1^1 = h/2, l_2^2 = -h/2 on the variety c_1 = 0
    subs = {L[0][0]: h / 2, L[1][1]: -h / 2, L[0][1]: e, L[1][0]: f}
    lin = {e: L[0][1], f: L[1][0], h: L[0][0] - L[1][1]}
    return (e, f, h), subs, lin


def sl2_tables() -> CheckReport:
    """{h,e}_r = -2eh, {h,f}_r = 2fh, {e,f}_r = -h^2; proportionality to PL and centrality of c_2."""
    (e, f, h), subs, lin = _sl2_subs()
    r, pl = bracket_r(2), bracket_pl(2)
    rep = CheckReport("sl(2) brackets")

    def on(b, x, y):
        return sp.expand(b(lin[x], lin[y]).subs(subs))

    exp_r = {(h, e): -2 * e * h, (h, f): 2 * f * h, (e, f): -h ** 2}
    exp_pl = {(h, e): 2 * e, (h, f): -2 * f, (e, f): h}
    for (x, y), v in exp_r.items():
        got = on(r, x, y)
        rep.add(f"{{{x},{y}}}_r = {v}", sp.expand(got - v) == 0, str(got))
    for (x, y), v in exp_pl.items():
        got = on(pl, x, y)
        rep.add(f"{{{x},{y}}}_PL = {v}", sp.expand(got - v) == 0, str(got))
    prop = all(sp.expand(on(r, x, y) + h * on(pl, x, y)) == 0 for x, y in exp_r)
    rep.add("{,}_r + h {,}_PL = 0 on sl(2) generators", prop)
    L = gens(2)
    c2 = (L[0][0] - L[1][1]) ** 2 / 2 + 2 * L[0][1] * L[1][0]
    for b, nm in ((r, "r"), (pl, "PL")):
        ok = all(sp.expand(b(c2, lin[x]).subs(subs)) == 0 for x in (e, f, h))
        rep.add(f"c_2 = h^2/2 + 2ef is central for {{,}}_{nm}", ok)
    c1 = L[0][0] + L[1][1]
    rep.add("{,}_+ vanishes for m = 2 on sl(2)", all(
        sp.expand(bracket_plus(2)(lin[x], lin[y]).subs(subs)) == 0 for x, y in exp_r))
    rep.add("{c_1, g}_r = 0 for every generator", all(r(c1, g) == 0 for g in _flat(2)))
    return rep


def su2_tables() -> CheckReport:
    """x = (e-f)/2, y = i(e+f)/2, z = ih/2: {x,y}_PL = z etc. and {x,y}_r = k z^2 etc. with one k."""
    (e, f, h), subs, lin = _sl2_subs()
    r, pl = bracket_r(2), bracket_pl(2)
    I = sp.I
    x, y, z = sp.symbols("x y z")
    X = {x: (lin[e] - lin[f]) / 2, y: I * (lin[e] + lin[f]) / 2, z: I * lin[h] / 2}
    # back-substitution e, f, h in terms of x, y, z
    back = sp.solve([sp.Eq(x, (e - f) / 2), sp.Eq(y, I * (e + f) / 2), sp.Eq(z, I * h / 2)], [e, f, h], dict=True)[0]
    rep = CheckReport("su(2) brackets")

    def on(b, u, v):
        return sp.expand(sp.expand(b(X[u], X[v]).subs(subs)).subs(back))

    for (u, v), w in (((x, y), z), ((y, z), x), ((z, x), y)):
        got = on(pl, u, v)
        rep.add(f"{{{u},{v}}}_PL = {w}", sp.expand(got - w) == 0, str(got))
    exp_r = {(x, y): z ** 2, (y, z): x * z, (z, x): y * z}
    ks = set()
    for (u, v), w in exp_r.items():
        got = on(r, u, v)
        k = sp.simplify(got / w)
        ks.add(k)
        rep.add(f"{{{u},{v}}}_r proportional to {w}", k.is_number, str(got))
    rep.add("one common renormalization factor", len(ks) == 1, [str(k) for k in ks])
    rep.values["renormalization"] = str(next(iter(ks))) if len(ks) == 1 else None
    c2 = sp.expand((x ** 2 + y ** 2 + z ** 2).subs({x: X[x], y: X[y], z: X[z]}).subs(subs))
    c2_sl = sp.expand(((lin[h]) ** 2 / 2 + 2 * lin[e] * lin[f]).subs(subs))
    rep.add("x^2 + y^2 + z^2 is proportional to h^2/2 + 2ef", sp.simplify(c2 / c2_sl).is_number)
    return rep


# -- the trace-deformation cocycle -----------------------------------------------------------

def cocycle_pairing(m: int, A, B):
    """<A, B> = -b o (A (x) B - B (x) A) = Tr(r_-^{ad,ad} + r_+^{r,l} - r_+^{l,r})(A (x) B)."""
    A, B = sp.Matrix(A), sp.Matrix(B)
    out = 0
    for i, j in combinations(range(m), 2):
        Eij, Eji = _unit(m, i, j), _unit(m, j, i)
        out += ((Eij * A - A * Eij) * (Eji * B - B * Eji)).trace()
        out -= ((Eji * A - A * Eji) * (Eij * B - B * Eij)).trace()
    for i in range(m):
        for j in range(m):
            Eij, Eji = _unit(m, i, j), _unit(m, j, i)
            out += (A * Eij * Eji * B).trace()
            out -= (Eij * A * B * Eji).trace()
    return sp.expand(out)


def _matrix_form(m: int) -> dict:
    """b o (l_i^j (x) l_k^s - l_k^s (x) l_i^j) = -Tr o (r_12 L_1 L_2 + L_1 r_21 L_2 - L_2 r_12 L_1 - L_2 L_1 r_21).

    A matrix X with End(V) entries is stored as sum_xy E_xy (x) X_xy, so products
    of such matrices multiply the End(V) entries in order.
    """
    r = classical_r(m)["r"]
    P = _P(m)
    I = sp.eye(m)
    L1 = sp.zeros(m ** 3, m ** 3)
    L2 = sp.zeros(m ** 3, m ** 3)
    for a, b in product(range(m), repeat=2):
        L1 += _kron(_kron(_unit(m, a, b), I), _unit(m, a, b))
        L2 += _kron(_kron(I, _unit(m, a, b)), _unit(m, a, b))
    r12 = _kron(r, I)
    r21 = _kron(P * r * P, I)
    T = r12 * L1 * L2 + L1 * r21 * L2 - L2 * r12 * L1 - L2 * L1 * r21
    out = {}
    for i, j, k, s in product(range(m), repeat=4):
        x, y = i * m + k, j * m + s
        out[(i, j, k, s)] = -T[x * m:(x + 1) * m, y * m:(y + 1) * m].trace()
    return out


def cocycle_check(m: int) -> CheckReport:
    if m not in (2, 3):
        raise ValueError("m in {2, 3}")
    rep = CheckReport(f"trace-deformation cocycle m={m}")
    basis = [(i, j) for i in range(m) for j in range(m)]
    U = {ij: _unit(m, *ij) for ij in basis}
    pair = {(a, b): cocycle_pairing(m, U[a], U[b]) for a in basis for b in basis}

    def lin(M):
        return {ij: M[ij] for ij in basis if M[ij] != 0}

    def pv(A, B):
        la, lb = lin(A), lin(B)
        return sp.expand(sum(ca * cb * pair[(a, b)] for a, ca in la.items() for b, cb in lb.items()))

    mf = _matrix_form(m)
    # the matrix-form display yields +<A, B>: its overall sign is opposite to the vector-field form
    rep.add("matrix form of b equals minus the vector-field form on basis pairs",
            all(sp.expand(mf[(i, j, k, s)] - pair[((i, j), (k, s))]) == 0 for (i, j) in basis for (k, s) in basis))
    rep.add("<A, A> = 0 and antisymmetry", all(sp.expand(pair[(a, b)] + pair[(b, a)]) == 0 for a in basis for b in basis))
    bad = None
    for a, b, c in product(basis, repeat=3):
        A, B, C = U[a], U[b], U[c]
        v = pv(A, B * C - C * B) + pv(B, C * A - A * C) + pv(C, A * B - B * A)
        if v != 0:
            bad = (a, b, c, v)
            break
    rep.add("<A,[B,C]> + <B,[C,A]> + <C,[A,B]> = 0 on basis triples", bad is None, bad)
    Hsum = sp.zeros(m, m)
    for i, j in combinations(range(m), 2):
        Hsum += U[(i, i)] - U[(j, j)]
    closed = {(a, b): sp.expand(((U[a] * U[b] - U[b] * U[a]) * Hsum).trace()) for a in basis for b in basis}
    diff = [(a, b) for a in basis for b in basis if sp.expand(closed[(a, b)] - pair[(a, b)]) != 0]
    rep.add("<A, B> = Tr([A, B] sum_{alpha > 0} H_alpha)", not diff, diff[:1])
    rep.add("<I, B> = 0, so the cocycle reduces to sl(m)", all(pv(sp.eye(m), U[b]) == 0 for b in basis))
    rep.values["H_sum"] = [list(map(int, Hsum.row(i))) for i in range(m)]
    return rep
