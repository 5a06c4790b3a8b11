"""Reflection equation algebra: the Q operator, q-symmetrizers and component dimensions.

Coordinates.  The degree-k component of the free algebra on l_i^j is spanned by
the entries of the N^k x N^k matrix ``L_1 L_2 ... L_k`` (barred copies built by
``L_{k+1} = Rb_k L_k Rb_k^{-1}``).  A map ``X -> A X B`` on these entries has
coordinate matrix ``kron(A^T, B)``.  Writing ``Lt_i = kron(Rb_i^T, I)`` and
``Rt_i = kron(I, Rb_i)``, every operator used here is a polynomial in these
commuting actions:

    Q_i      = Lt_i (Rt_i - omega)
    Q_i^{-1} = (Lt_i - omega) Rt_i

All defining identities are multiplied through by powers of 2_q so that they
become Laurent-polynomial identities, then certified exactly (see
:func:`hecke_rea.linalg.certify_identity`).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .hecke import HeckeSymmetry
from .linalg import (
    DEFAULT_POINTS,
    BlockMat,
    BlockStructure,
    GenericityError,
    QMatrix,
    amplify,
    certify_identity,
    kron,
    rank_at,
    rank_generic,
)
from .linalg import _Ctx
from .report import CheckReport
from .scalar import ONE, Q, QScalar, qnum

__all__ = [
    "ReaStructure",
    "build_rea",
    "rea_constants",
    "component_dims",
    "ideal_span_check",
    "classical_symmetric_dim",
    "form_matrices",
]


def rea_constants(q: QScalar = Q) -> tuple:
    """a = (q^4+q^2+4+q^-2+q^-4)/2_q^4 and b = 4_q^2/2_q^8."""
    two = qnum(2, q)
    a = (q ** 4 + q ** 2 + 4 + q ** -2 + q ** -4) / two ** 4
    b = qnum(4, q) ** 2 / two ** 8
    return a, b


def _actions(H: HeckeSymmetry, k: int) -> dict:
    """Lt_i, Rt_i (i < k) on the N^{2k}-dimensional coordinate space of degree k."""
    key = ("rea-actions", k)
    if key in H._cache:
        return H._cache[key]
    N = H.N
    Rb = H.R.T
    d = N ** k
    I = QMatrix.eye(d)
    out = {}
    for i in range(1, k):
        Rbi = amplify(Rb, i, k, N) if k > 2 else Rb
        out[f"L{i}"] = kron(Rbi.T, I)
        out[f"R{i}"] = kron(I, Rbi)
    H._cache[key] = out
    return out


def _ops(ctx, H: HeckeSymmetry, i: int) -> dict:
    """Cleared operators on a context: Q, Qinv, St = 2_q^2 S, At = 2_q^2 A, Pt[a] = 2_q^2 P^(a)."""
    om = ctx.s(H.omega)
    L, R = ctx.m(f"L{i}"), ctx.m(f"R{i}")
    I = ctx.eye(f"L{i}")
    q = H.q
    Qop = L @ (R - I * om)
    Qinv = (L - I * om) @ R
    St = I * ctx.s(q ** 2 + q ** -2) + Qop + Qinv
    At = I * ctx.s(QScalar(2)) - Qop - Qinv
    # P_+ = (q^-1 + Rb)/2_q, P_- = (q - Rb)/2_q; the map X -> A X B is Lt(A) Rt(B)
    Lp = L + I * ctx.s(q ** -1)
    Lm = I * ctx.s(q) - L
    Rp = R + I * ctx.s(q ** -1)
    Rm = I * ctx.s(q) - R
    Pt = {
        "-q^2": Lp @ Rm,
        "-q^-2": Lm @ Rp,
        "1": Lp @ Rp + Lm @ Rm,
    }
    return {"Q": Qop, "Qinv": Qinv, "St": St, "At": At, "Pt": Pt, "I": I}


def _w_tilde(ctx, H: HeckeSymmetry, first: int):
    """2_q^10 (S_f S_o S_f S_o S_f - a S_f S_o S_f + b S_f) with f = first."""
    q = H.q
    o = 2 if first == 1 else 1
    Sf = _ops(ctx, H, first)["St"]
    So = _ops(ctx, H, o)["St"]
    a_t = ctx.s(q ** 4 + q ** 2 + 4 + q ** -2 + q ** -4)
    b_t = ctx.s(qnum(4, q) ** 2)
    s3 = Sf @ So @ Sf
    return s3 @ So @ Sf - s3 * a_t + Sf * b_t


@dataclass
class ReaStructure:
    H: HeckeSymmetry
    Rbar: QMatrix
    Q: QMatrix
    S: QMatrix
    A: QMatrix
    P: dict
    report: CheckReport = field(default_factory=CheckReport)

    @property
    def constants(self) -> tuple:
        return rea_constants(self.H.q)

    def S3_at(self, q0) -> BlockMat:
        """S^(3) specialized at q = q0 (block form)."""
        H = self.H
        bases = _actions(H, 3)
        bs = BlockStructure(H.N ** 6, list(bases.values()))
        ctx = _Ctx("point", bases, bs, q0)
        W = _w_tilde(ctx, H, 1)
        q = H.q
        c = (4 * qnum(3, q) ** 2 * qnum(2, q) ** 4).eval_at(q0)
        return W * (1 / c)

    def S3(self) -> QMatrix:
        """S^(3) symbolically (N^6 x N^6; practical for N <= 2)."""
        H = self.H
        ctx = _Ctx("symbolic", _actions(H, 3))
        q = H.q
        return _w_tilde(ctx, H, 1) * (4 * qnum(3, q) ** 2 * qnum(2, q) ** 4).inverse()


def build_rea(H: HeckeSymmetry, verify: bool = True, third_order: bool = True) -> ReaStructure:
    """Q, S, A and the P^(a) on degree 2, with every projector identity certified."""
    bases2 = _actions(H, 2)
    ctx = _Ctx("symbolic", bases2)
    ops = _ops(ctx, H, 1)
    two2inv = (qnum(2, H.q) ** 2).inverse()
    P = {k: v * two2inv for k, v in ops["Pt"].items()}
    rs = ReaStructure(H, H.R.T, ops["Q"], ops["St"] * two2inv, ops["At"] * two2inv, P)
    rs.report = CheckReport(f"REA projector calculus {H.name}")
    if verify:
        rs.report.extend(projector_checks(H))
        if third_order:
            rs.report.extend(third_order_checks(H))
    return rs


def _cert(rep: CheckReport, name: str, build, bases) -> bool:
    ok, how = certify_identity(build, bases)
    rep.add(name, ok, how, how if ok else None)
    return ok


def projector_checks(H: HeckeSymmetry) -> CheckReport:
    rep = CheckReport("degree-2 projector identities")
    b2 = _actions(H, 2)
    q = H.q
    two2 = qnum(2, q) ** 2
    c = q ** 2 - 1 + q ** -2

    def qch(ctx):
        o = _ops(ctx, H, 1)
        Qo, I = o["Q"], o["I"]
        return (Qo + I * ctx.s(q ** 2)) @ (Qo + I * ctx.s(q ** -2)) @ (Qo - I)

    _cert(rep, "(Q+q^2)(Q+q^-2)(Q-1) = 0", qch, b2)
    _cert(rep, "Q Q^-1 = 1 for Q^-1 = Rb^-1 X Rb",
          lambda ctx: (lambda o: o["Q"] @ o["Qinv"] - o["I"])(_ops(ctx, H, 1)), b2)
    _cert(rep, "Q^-1 = Q^2 + (q^2-1+q^-2)Q - (q^2-1+q^-2)",
          lambda ctx: (lambda o: o["Q"] @ o["Q"] + o["Q"] * ctx.s(c) - o["I"] * ctx.s(c) - o["Qinv"])(_ops(ctx, H, 1)), b2)
    eig = {"-q^2": -(q ** 2), "-q^-2": -(q ** -2), "1": ONE}
    for a, val in eig.items():
        _cert(rep, f"Q P^({a}) = {a} P^({a})",
              lambda ctx, a=a, val=val: (lambda o: o["Q"] @ o["Pt"][a] - o["Pt"][a] * ctx.s(val))(_ops(ctx, H, 1)), b2)
        _cert(rep, f"P^({a}) Q = {a} P^({a})",
              lambda ctx, a=a, val=val: (lambda o: o["Pt"][a] @ o["Q"] - o["Pt"][a] * ctx.s(val))(_ops(ctx, H, 1)), b2)
    for a in eig:
        for b in eig:
            def orth(ctx, a=a, b=b):
                o = _ops(ctx, H, 1)
                prod_ = o["Pt"][a] @ o["Pt"][b]
                return prod_ - o["Pt"][a] * ctx.s(two2) if a == b else prod_
            _cert(rep, f"P^({a}) P^({b}) = delta P^({a})", orth, b2)
    _cert(rep, "P^(-q^2) + P^(1) + P^(-q^-2) = 1",
          lambda ctx: (lambda o: o["Pt"]["-q^2"] + o["Pt"]["1"] + o["Pt"]["-q^-2"] - o["I"] * ctx.s(two2))(_ops(ctx, H, 1)), b2)
    _cert(rep, "S from Q equals P^(1)", lambda ctx: (lambda o: o["St"] - o["Pt"]["1"])(_ops(ctx, H, 1)), b2)
    _cert(rep, "A from Q equals P^(-q^2) + P^(-q^-2)",
          lambda ctx: (lambda o: o["At"] - o["Pt"]["-q^2"] - o["Pt"]["-q^-2"])(_ops(ctx, H, 1)), b2)
    _cert(rep, "S A = 0", lambda ctx: (lambda o: o["St"] @ o["At"])(_ops(ctx, H, 1)), b2)
    _cert(rep, "A S = 0", lambda ctx: (lambda o: o["At"] @ o["St"])(_ops(ctx, H, 1)), b2)
    _cert(rep, "S + A = 1", lambda ctx: (lambda o: o["St"] + o["At"] - o["I"] * ctx.s(two2))(_ops(ctx, H, 1)), b2)
    return rep


def third_order_checks(H: HeckeSymmetry) -> CheckReport:
    rep = CheckReport("degree-3 identities")
    b3 = _actions(H, 3)
    q = H.q

    def qyb(ctx):
        Q1, Q2 = _ops(ctx, H, 1)["Q"], _ops(ctx, H, 2)["Q"]
        return Q1 @ Q2 @ Q1 - Q2 @ Q1 @ Q2

    _cert(rep, "Q_1 Q_2 Q_1 = Q_2 Q_1 Q_2", qyb, b3)
    _cert(rep, "fifth-order relation for S_1, S_2 (equivalently the two forms of the symmetric trace agree)",
          lambda ctx: _w_tilde(ctx, H, 1) - _w_tilde(ctx, H, 2), b3)
    norm = 4 * qnum(3, q) ** 2 * qnum(2, q) ** 4

    def idem(ctx):
        W = _w_tilde(ctx, H, 1)
        return W @ W - W * ctx.s(norm)

    _cert(rep, "S^(3) S^(3) = S^(3)", idem, b3)

    def s1_absorbs(ctx):
        W = _w_tilde(ctx, H, 1)
        return _ops(ctx, H, 1)["St"] @ W - W * ctx.s(qnum(2, q) ** 2)

    def s2_absorbs(ctx):
        W = _w_tilde(ctx, H, 2)
        return _ops(ctx, H, 2)["St"] @ W - W * ctx.s(qnum(2, q) ** 2)

    _cert(rep, "S_1 S^(3) = S^(3)", s1_absorbs, b3)
    _cert(rep, "S_2 S^(3) = S^(3)", s2_absorbs, b3)
    rep.extend(sandwich_check(H))
    return rep


def _point_ops(H: HeckeSymmetry, k: int, q0):
    bases = _actions(H, k)
    bs = BlockStructure(H.N ** (2 * k), list(bases.values()))
    return _Ctx("point", bases, bs, q0)


def _rank_at(H: HeckeSymmetry, k: int, q0, which: str = "S") -> int:
    ctx = _point_ops(H, k, q0)
    if k == 2:
        return _ops(ctx, H, 1)["St" if which == "S" else "At"].rank()
    return _w_tilde(ctx, H, 1).rank()


def _sample_points(H: HeckeSymmetry, points) -> tuple:
    return (1,) if H.involutive else tuple(points)


def sandwich_check(H: HeckeSymmetry, points=DEFAULT_POINTS) -> CheckReport:
    """rank S^(3) = dim(Im S_1 cap Im S_2) at sample points."""
    rep = CheckReport("degree-3 sandwich")
    for p in _sample_points(H, points):
        ctx = _point_ops(H, 3, p)
        S1, S2 = _ops(ctx, H, 1)["St"], _ops(ctx, H, 2)["St"]
        r3 = _w_tilde(ctx, H, 1).rank()
        inter = 0
        for b1, b2 in zip(S1.blocks, S2.blocks):
            if b1.nrows() == 0:
                continue
            n = b1.nrows()
            from flint import fmpq_mat
            stacked = fmpq_mat(n, 2 * n)
            for i in range(n):
                for j in range(n):
                    stacked[i, j] = b1[i, j]
                    stacked[i, n + j] = b2[i, j]
            inter += b1.rank() + b2.rank() - stacked.rank()
        rep.add(f"rank S^(3) = dim(Im S_1 cap Im S_2) at q={p}", r3 == inter, (r3, inter))
    return rep


def classical_symmetric_dim(m: int, n: int, k: int) -> int:
    """dim of the degree-k part of the super-symmetric algebra on End(C^{m|n})."""
    even, odd = m * m + n * n, 2 * m * n
    return sum(comb(even + k - j - 1, k - j) * comb(odd, j) for j in range(0, min(k, odd) + 1))


def component_dims(H: HeckeSymmetry, k: int, points=DEFAULT_POINTS) -> tuple:
    """(rank at generic q, rank of the same projector at q = 1)."""
    if k not in (2, 3):
        raise ValueError("closed-form projectors exist for k = 2, 3 only")
    if H.involutive:
        r = _rank_at(H, k, 1)
        return r, r
    ranks = {p: _rank_at(H, k, p) for p in points}
    if len(set(ranks.values())) != 1:
        raise GenericityError(f"ranks {ranks} disagree at the sample points")
    generic = next(iter(ranks.values()))
    return generic, _rank_at(H, k, 1)


# -- the relation ideal in naive monomial coordinates -------------------------------------

def _lmul(A: QMatrix, F: QMatrix, n: int) -> QMatrix:
    return kron(A, QMatrix.eye(n)) @ F


def _rmul(F: QMatrix, B: QMatrix, n: int) -> QMatrix:
    return kron(QMatrix.eye(n), B.T) @ F


def _fprod(F: QMatrix, G: QMatrix, n: int) -> QMatrix:
    """Entrywise-noncommutative product of two n x n matrices of forms."""
    g2 = G.ncols
    ent: dict = {}
    Gr = {r: dict(G.row(r)) for r in range(G.nrows) if G.row(r)}
    for r in range(n):
        for c in range(n):
            frow = F.row(r * n + c)
            if not frow:
                continue
            for s in range(n):
                grow = Gr.get(c * n + s)
                if not grow:
                    continue
                for a, x in frow.items():
                    for b, y in grow.items():
                        key = (r * n + s, a * g2 + b)
                        v = ent.get(key)
                        ent[key] = x * y if v is None else v + x * y
    ent = {k: v for k, v in ent.items() if v}
    return QMatrix(n * n, F.ncols * g2, ent)


def form_matrices(H: HeckeSymmetry) -> tuple:
    """(L_1, L_2) as N^2 x N^2 matrices of linear forms in the N^2 generators."""
    N = H.N
    n = N * N
    ent = {}
    for i in range(N):
        for j in range(N):
            for a in range(N):
                r, c = i * N + a, j * N + a
                ent[(r * n + c, i * N + j)] = ONE
    L1 = QMatrix(n * n, n, ent)
    Rb = H.R.T
    Rbinv = H.Rinv.T
    L2 = _rmul(_lmul(Rb, L1, n), Rbinv, n)
    return L1, L2


def ideal_span_check(H: HeckeSymmetry, points=DEFAULT_POINTS) -> CheckReport:
    """Span of the quadratic relations equals the image of A in free-algebra coordinates."""
    N = H.N
    n = N * N
    rep = CheckReport(f"relation ideal span {H.name}")
    L1, L2 = form_matrices(H)
    X = _fprod(L1, L2, n)
    Y = _rmul(_lmul(H.R.T, X, n), H.Rinv.T, n)
    T = X.T  # naive monomial coordinates of the entries of L_1 L_2
    rs = build_rea(H, verify=False)
    rep.add("conjugation by Rb on entries has coordinate matrix Q", Y.T == T @ rs.Q)
    def rank(M):
        return rank_at(M, 1) if H.involutive else rank_generic(M, points)

    rank_T = rank(T)
    rep.add("entries of L_1 L_2 form a basis of the degree-2 component", rank_T == n * n, rank_T)
    J = (X - Y).T
    TA = T @ rs.A
    stack = QMatrix(J.nrows, 2 * J.ncols, {**dict(J.items()), **{(r, c + J.ncols): v for (r, c), v in TA.items()}})
    rj, ra, rs_ = rank(J), rank(TA), rank(stack)
    rep.values.update({"rank_I": rj, "rank_A": ra, "rank_stack": rs_})
    rep.add("Span(I_-) = Im A", rj == ra == rs_, (rj, ra, rs_))
    return rep
