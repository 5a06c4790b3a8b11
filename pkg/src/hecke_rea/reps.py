"""Equivariant representations of the modified REA at hbar = 1.

A representation stores one matrix ``rho(l_i^j)`` per generator.  Every claim
(relations, equivariance, centrality of the R-trace element) is checked as an
exact matrix identity over Q(q); algebra elements are never normal-ordered.

Conventions: ``L[i][j] = l_i^j``, ``Rb = R^T``, the defining relation is

    Rb L_1 Rb L_1 - L_1 Rb L_1 Rb - (Rb L_1 - L_1 Rb) = 0,

read as an operator on aux (x) aux (x) U with ``L_1 = sum E_ij (x) I (x) rho(l_i^j)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .hecke import HeckeSymmetry, dual_symmetry
from .heckealg import standard_tableaux, idempotent_image
from .linalg import DEFAULT_POINTS, QMatrix, _Ctx, kron, rank_at, rank_generic
from .rea import _actions, _fprod, _lmul, _ops, _rmul, form_matrices
from .report import CheckReport
from .scalar import ONE, ZERO, QScalar, qnum
from .swcat import _word_str, check_invariance, extend_braiding, mixed_braiding

__all__ = [
    "Representation",
    "RepresentationError",
    "relation_defect",
    "rho_basic",
    "rho_dual",
    "character",
    "coproduct",
    "counit",
    "coproduct_checks",
    "rho_pair",
    "rho_tensor",
    "rho2_formula",
    "restrict",
    "restricted_family",
    "adjoint_rep",
    "adjoint_formula_check",
    "braided_lie_checks",
    "relation_invariance_check",
    "mform_check",
    "sl_reduce",
    "z_family",
    "sl_adjoint_check",
    "traceless_adjoint",
    "sl2_presentation",
    "graded_adjoint_oracle",
    "classical_adjoint_check",
    "relation_vectors",
    "relation_vectors_check",
]

E_UNIT = "e"


class RepresentationError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


def _unit(N: int, i: int, j: int) -> QMatrix:
    return QMatrix(N, N, {(i, j): ONE})


def _gens(N: int):
    return [(i, j) for i in range(N) for j in range(N)]


@dataclass
class Representation:
    H: HeckeSymmetry
    carrier: Optional[tuple]   # mixed word, or None for characters / quotient modules
    images: dict               # (i, j) -> d x d QMatrix
    dim: int
    label: str = ""
    ambient: Optional["Representation"] = None   # for restricted modules
    projector: Optional[QMatrix] = None
    algebra: str = "mREA"      # or "SL" after sl-reduction

    def __getitem__(self, ij) -> QMatrix:
        return self.images[ij]

    def L_operator(self) -> QMatrix:
        N, d = self.H.N, self.dim
        out = QMatrix.zeros(N * N * d)
        IN = QMatrix.eye(N)
        for (i, j), M in self.images.items():
            if not M.is_zero():
                out = out + kron(kron(_unit(N, i, j), IN), M)
        return out

    def ell(self) -> QMatrix:
        """rho(Tr_R L) = sum_ij C[i, j] rho(l_j^i)."""
        out = QMatrix.zeros(self.dim)
        for (i, j), c in self.H.C.items():
            out = out + self.images[(j, i)] * c
        return out

    def relations(self) -> CheckReport:
        rep = CheckReport(f"mREA relations ({self.label})")
        D = relation_defect(self.H, self.images, self.dim)
        rep.add("Rb L1 Rb L1 - L1 Rb L1 Rb = Rb L1 - L1 Rb", D.is_zero(), _nz(D))
        return rep

    def action_map(self) -> QMatrix:
        """(V (x) V*) (x) U -> U, x_i (x) x^j (x) u -> rho(l_i^j) u."""
        N, d = self.H.N, self.dim
        ent = {}
        for (i, j), M in self.images.items():
            off = (i * N + j) * d
            for (r, c), v in M.items():
                ent[(r, off + c)] = v
        return QMatrix(d, N * N * d, ent)

    def equivariance(self) -> CheckReport:
        if self.ambient is not None:
            amb = self.ambient
            E = self.projector
            f = E @ amb.action_map() @ kron(QMatrix.eye(self.H.N ** 2), E)
            word = amb.carrier
        else:
            if self.carrier is None:
                rep = CheckReport(f"equivariance ({self.label})")
                rep.skip("equivariance", "no tensor-word carrier")
                return rep
            f = self.action_map()
            word = self.carrier
        E = extend_braiding(self.H)
        rep = check_invariance(E, f, ("V", "V*") + tuple(word), word)
        rep.title = f"equivariance ({self.label})"
        return rep

    def centrality(self) -> CheckReport:
        rep = CheckReport(f"centrality of Tr_R L ({self.label})")
        ell = self.ell()
        bad = [ij for ij, M in self.images.items() if ell @ M != M @ ell]
        rep.add("rho(ell) commutes with every rho(l_i^j)", not bad, bad[:1])
        return rep

    def verify(self) -> CheckReport:
        rep = CheckReport(f"representation {self.label}")
        rep.extend(self.relations())
        rep.extend(self.equivariance())
        if self.algebra == "mREA":
            rep.extend(self.centrality())
        return rep

    def traces(self) -> dict:
        return {ij: M.trace() for ij, M in self.images.items()}

    def r_dim(self) -> QScalar:
        """q^{2(m-n)}-normalized trace of the identity on an invariant subspace of a word."""
        if self.carrier is None and self.ambient is None:
            raise ValueError("R-dimension needs a tensor-word carrier")
        word = self.ambient.carrier if self.ambient is not None else self.carrier
        E = self.projector if self.projector is not None else QMatrix.eye(self.H.N ** len(word))
        return _word_r_trace(self.H, word, E)


def _word_r_trace(H: HeckeSymmetry, word, F: QMatrix) -> QScalar:
    """Tr(F * (C or C*)^{(x)k}) / nu^{#V - #V*}, the categorical trace on a mixed word."""
    nuinv = H.nu.inverse()
    W = QMatrix.eye(1)
    scale = ONE
    for a in word:
        if a == "V":
            W = kron(W, H.C)
            scale = scale * nuinv
        else:
            W = kron(W, H.B)
            scale = scale * H.nu
    return (F @ W).trace() * scale


def _nz(M: QMatrix):
    for (r, c), v in M.items():
        return (r, c, str(v))
    return None


def relation_defect(H: HeckeSymmetry, images: dict, d: int) -> QMatrix:
    N = H.N
    IN = QMatrix.eye(N)
    L = QMatrix.zeros(N * N * d)
    for (i, j), M in images.items():
        if not M.is_zero():
            L = L + kron(kron(_unit(N, i, j), IN), M)
    Rb = kron(H.R.T, QMatrix.eye(d))
    RL = Rb @ L
    LR = L @ Rb
    return RL @ RL - LR @ LR - (RL - LR)


# -- basic representations ------------------------------------------------------------

def rho_basic(H: HeckeSymmetry, verify: bool = True) -> Representation:
    """rho_1(l_i^j) x_k = B^j_k x_i."""
    N = H.N
    images = {}
    for i, j in _gens(N):
        ent = {(i, k): H.B[j, k] for k in range(N) if H.B[j, k]}
        images[(i, j)] = QMatrix(N, N, ent)
    rho = Representation(H, ("V",), images, N, f"rho_1 {H.name}")
    return _certified(rho, verify)


def rho_dual(H: HeckeSymmetry, verify: bool = True, sign: int = -1) -> Representation:
    """rho_1*(l_i^j) x^k = -x^r Rb^{kj}_{ri}; ``sign=+1`` is the negative control."""
    N = H.N
    R = H.R
    images = {}
    for i, j in _gens(N):
        ent = {}
        for r in range(N):
            for k in range(N):
                v = R[k * N + j, r * N + i]
                if v:
                    ent[(r, k)] = v * sign
        images[(i, j)] = QMatrix(N, N, ent)
    rho = Representation(H, ("V*",), images, N, f"rho_1* {H.name}" + ("" if sign == -1 else " (sign flipped)"))
    return _certified(rho, verify and sign == -1)


def character(H: HeckeSymmetry, c) -> Representation:
    """One-dimensional rho(l_i^j) = c delta_i^j."""
    N = H.N
    c = QScalar(c) if not isinstance(c, QScalar) else c
    images = {(i, j): QMatrix(1, 1, {(0, 0): c} if i == j else {}) for i, j in _gens(N)}
    return Representation(H, None, images, 1, f"character c={c}")


def _certified(rho: Representation, verify: bool) -> Representation:
    if verify:
        rep = rho.verify()
        if not rep:
            f = rep.failures()[0]
            raise RepresentationError(f"{rho.label}: {f.name} fails", f.witness)
    return rho


# -- coproduct, counit, and the braided action on U (x) W --------------------------------

def coproduct(H: HeckeSymmetry, ij: tuple) -> list:
    """Delta(l_i^j) as [(coef, left, right)] with left/right "e" or a generator index."""
    i, j = ij
    out = [(ONE, ij, E_UNIT), (ONE, E_UNIT, ij)]
    om = H.omega
    if om:
        out += [(-om, (i, k), (k, j)) for k in range(H.N)]
    return out


def counit(x) -> QScalar:
    return ONE if x == E_UNIT else ZERO


def _collect(terms) -> dict:
    out: dict = {}
    for c, a, b in terms:
        out[(a, b)] = out.get((a, b), ZERO) + c
    return {k: v for k, v in out.items() if v}


def coproduct_checks(H: HeckeSymmetry) -> CheckReport:
    """Counit laws and the multiplicative form Delta(m_i^j) = sum_s m_i^s (x) m_s^j."""
    rep = CheckReport(f"coproduct and counit {H.name}")
    N, om = H.N, H.omega
    ok_l = ok_r = ok_m = True
    for ij in _gens(N):
        d = coproduct(H, ij)
        left: dict = {}
        right: dict = {}
        for c, a, b in d:
            if counit(b):
                left[a] = left.get(a, ZERO) + c * counit(b)
            if counit(a):
                right[b] = right.get(b, ZERO) + c * counit(a)
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        ok_l &= left == {ij: ONE}
        ok_r &= right == {ij: ONE}
        # m_i^j = delta e - omega l_i^j; both sides expanded on {e, l} (x) {e, l}
        i, j = ij
        lhs = [(-om * c, a, b) for c, a, b in d]
        if i == j:
            lhs.append((ONE, E_UNIT, E_UNIT))
        rhs = []
        for s in range(N):
            for ca, a in _m_terms(om, i, s):
                for cb, b in _m_terms(om, s, j):
                    rhs.append((ca * cb, a, b))
        ok_m &= _collect(lhs) == _collect(rhs)
    rep.add("(id (x) eps) Delta = id on generators", ok_l)
    rep.add("(eps (x) id) Delta = id on generators", ok_r)
    rep.add("eps(e) = 1, eps(l_i^j) = 0", counit(E_UNIT) == ONE and counit((0, 0)) == ZERO)
    rep.add("Delta(m_i^j) = sum_s m_i^s (x) m_s^j with M = I e - omega L", ok_m)
    return rep


def _m_terms(om: QScalar, i: int, j: int) -> list:
    out = [(-om, (i, j))] if om else []
    if i == j:
        out.append((ONE, E_UNIT))
    return out


def _braided_images(rU: Representation, rW: Representation) -> dict:
    """Y_ab = rho_{U(x)W}(e (x) l_a^b): braid l_a^b past u, then act on W."""
    H = rU.H
    N = H.N
    dU, dW = rU.dim, rW.dim
    E = extend_braiding(H)
    Bm = mixed_braiding(E, ("V", "V*"), rU.carrier)
    out = {ij: {} for ij in _gens(N)}
    n2 = N * N
    for (row, col), v in Bm.items():
        u2, g2 = divmod(row, n2)
        g1, u1 = divmod(col, dU)
        a, b = divmod(g1, N)
        acc = out[(a, b)]
        key = (u2, u1, divmod(g2, N))
        acc[key] = acc.get(key, ZERO) + v
    Y = {}
    for ab, terms in out.items():
        M = QMatrix.zeros(dU * dW)
        for (u2, u1, g), v in terms.items():
            if v:
                M = M + kron(_unit(dU, u2, u1), rW.images[g]) * v
        Y[ab] = M
    return Y


def rho_pair(rU: Representation, rW: Representation, a, b, _Y=None) -> QMatrix:
    """rho_{U(x)W}(a (x) b) for a, b each "e" or a generator index."""
    IU, IW = QMatrix.eye(rU.dim), QMatrix.eye(rW.dim)
    left = IU if a == E_UNIT else rU.images[a]
    if b == E_UNIT:
        return kron(left, IW)
    Y = _Y if _Y is not None else _braided_images(rU, rW)
    return kron(left, IW) @ Y[b]


def rho_tensor(rU: Representation, rW: Representation, verify: bool = True) -> Representation:
    """a -> rho_{U(x)W}(Delta(a)) on the concatenated word."""
    if rU.carrier is None or rW.carrier is None:
        raise ValueError("tensor products need tensor-word carriers")
    H = rU.H
    Y = _braided_images(rU, rW)
    images = {}
    for ij in _gens(H.N):
        M = QMatrix.zeros(rU.dim * rW.dim)
        for c, a, b in coproduct(H, ij):
            M = M + rho_pair(rU, rW, a, b, Y) * c
        images[ij] = M
    word = tuple(rU.carrier) + tuple(rW.carrier)
    rho = Representation(H, word, images, rU.dim * rW.dim, f"rho_{_word_str(word)} {H.name}")
    return _certified(rho, verify)


def rho2_formula(H: HeckeSymmetry) -> dict:
    """rho_2(l) = rho_1(l) (x) I + R^-1 (rho_1(l) (x) I) R^-1 on V (x) V."""
    r1 = rho_basic(H, verify=False)
    I = QMatrix.eye(H.N)
    Ri = H.Rinv
    return {ij: kron(M, I) + Ri @ kron(M, I) @ Ri for ij, M in r1.images.items()}


# -- restriction to Young components ------------------------------------------------------

def _sample_point(H: HeckeSymmetry):
    return 1 if H.involutive else DEFAULT_POINTS[0]


def _pivots(M) -> list:
    """Pivot columns of an fmpq_mat."""
    R, r = M.rref()
    piv = []
    c = 0
    for i in range(r):
        while R[i, c] == 0:
            c += 1
        piv.append(c)
    return piv


def _compress(H: HeckeSymmetry, E: QMatrix, ops: dict):
    """Coordinates of each op restricted to Im E, in a basis of columns of E."""
    q0 = _sample_point(H)
    cols = _pivots(E.to_fmpq_mat(q0))
    if not cols:
        return None, None
    Bc = E.submatrix(range(E.nrows), cols)
    rows = _pivots(Bc.T.to_fmpq_mat(q0))
    Binv = Bc.submatrix(rows, range(len(cols))).inverse()
    out = {}
    for key, M in ops.items():
        X = M @ Bc
        coords = Binv @ X.submatrix(rows, range(len(cols)))
        if Bc @ coords != X:
            raise RepresentationError(f"Im E is not invariant under {key}", key)
        out[key] = coords
    return out, Bc


def restrict(rho: Representation, lam: Sequence[int], a: int = 1, verify: bool = True) -> Representation:
    """rho_{lam,a} = E^lam_a rho_p E^lam_a, compressed to Im E^lam_a (a is 1-based)."""
    H = rho.H
    word = rho.carrier
    if word is None or len(set(word)) != 1:
        raise ValueError("restriction needs a carrier V^p or V*^p")
    lam = tuple(lam)
    if sum(lam) != len(word):
        raise ValueError(f"{lam} is not a partition of {len(word)}")
    tabs = standard_tableaux(lam)
    if not 1 <= a <= len(tabs):
        raise ValueError(f"tableau index {a} outside 1..{len(tabs)}")
    Hs = H if word[0] == "V" else dual_symmetry(H)
    E = idempotent_image(Hs, tabs[a - 1]).matrix
    if len(word) == 1:
        E = QMatrix.eye(H.N)
    comp, _ = _compress(H, E, rho.images)
    if comp is None:
        raise ValueError(f"lambda = {lam} outside hook: E^lambda_a = 0")
    d = next(iter(comp.values())).nrows
    out = Representation(H, None, comp, d, f"{rho.label} | {lam},{a}", ambient=rho, projector=E)
    return _certified(out, verify)


def restricted_family(rho: Representation, lam: Sequence[int]) -> tuple:
    """All rho_{lam,a}, with a necessary equivalence test: equal traces of all images and pair products."""
    mods = [restrict(rho, lam, a) for a in range(1, len(standard_tableaux(tuple(lam))) + 1)]
    rep = CheckReport(f"restricted modules {tuple(lam)}")
    ref = mods[0]
    for a, m in enumerate(mods[1:], start=2):
        same = m.dim == ref.dim and all(
            (m.images[x] @ m.images[y]).trace() == (ref.images[x] @ ref.images[y]).trace()
            and m.images[x].trace() == ref.images[x].trace()
            for x in ref.images for y in ref.images
        )
        rep.add(f"characters of a=1 and a={a} agree", same)
    return mods, rep


# -- adjoint representation and braided Lie structure ---------------------------------------

def adjoint_rep(H: HeckeSymmetry, verify: bool = True) -> Representation:
    rho = rho_tensor(rho_basic(H, verify), rho_dual(H, verify), verify)
    rho.label = f"adjoint {H.name}"
    return rho


def _act_matrix(rho: Representation) -> QMatrix:
    """g (x) g -> g, x (x) y -> rho_ad(x) y, with g = span(l_i^j) = V (x) V*."""
    N = rho.H.N
    n = N * N
    ent = {}
    for (i, j), M in rho.images.items():
        a = i * N + j
        for (h, b), v in M.items():
            ent[(h, a * n + b)] = v
    return QMatrix(n, n * n, ent)


def _bracket_entries(H: HeckeSymmetry) -> QMatrix:
    """Coordinates (in g) of the entries of L_1 Rb - Rb L_1: shape N^2 x N^4 (generators x entries)."""
    n = H.N ** 2
    L1, _ = form_matrices(H)
    Rb = H.R.T
    return (_rmul(L1, Rb, n) - _lmul(Rb, L1, n)).T


def adjoint_formula_check(H: HeckeSymmetry, rho: Representation | None = None) -> CheckReport:
    """rho_ad(L_1) |> L_2 = L_1 Rb - Rb L_1 on the entries of L_1 L_2."""
    rho = adjoint_rep(H) if rho is None else rho
    n = H.N ** 2
    rep = CheckReport(f"adjoint formula {H.name}")
    L1, L2 = form_matrices(H)
    T = _fprod(L1, L2, n).T
    lhs = _act_matrix(rho) @ T
    rhs = _bracket_entries(H)
    rep.add("rho_(V(x)V*)(L_1) |> L_2 = L_1 Rb - Rb L_1", lhs == rhs, _nz(lhs - rhs))
    return rep


def braided_lie_checks(H: HeckeSymmetry, rho: Representation | None = None) -> CheckReport:
    """[,] S = 0 and [,][,]_12 = [,][,]_23 (I - sigma_12), sigma(L_1 L_2) = Rb^-1 L_1 L_2 Rb."""
    rho = adjoint_rep(H) if rho is None else rho
    n = H.N ** 2
    rep = CheckReport(f"braided Lie axioms {H.name}")
    L1, L2 = form_matrices(H)
    T = _fprod(L1, L2, n).T          # entry coordinates -> monomial coordinates
    br = _act_matrix(rho)            # monomial bracket
    br_e = _bracket_entries(H)       # bracket on entry coordinates
    ctx = _Ctx("symbolic", _actions(H, 2))
    ops = _ops(ctx, H, 1)
    S = ops["St"] * (qnum(2, H.q) ** 2).inverse()
    D = br_e @ S
    rep.add("[,] S = 0", D.is_zero(), _nz(D))
    Ig = QMatrix.eye(n)
    lhs = br @ kron(br_e, Ig)
    sigma_T = T @ ops["Qinv"]
    rhs = br @ kron(Ig, br) @ (kron(T, Ig) - kron(sigma_T, Ig))
    rep.add("[,][,]_12 = [,][,]_23 (I - sigma_12)", lhs == rhs, _nz(lhs - rhs))
    return rep


def relation_vectors(H: HeckeSymmetry) -> QMatrix:
    """Rows: the relations L_1 L_2 - Rb^-1 L_1 L_2 Rb - (L_1 Rb - Rb L_1), coordinates in g(x)g + g."""
    n = H.N ** 2
    L1, L2 = form_matrices(H)
    X = _fprod(L1, L2, n)
    Y = _rmul(_lmul(H.Rinv.T, X, n), H.R.T, n)
    quad = X - Y
    lin = _bracket_entries(H).T
    ent = dict(quad.items())
    ent.update({(r, c + n * n): -v for (r, c), v in lin.items()})
    return QMatrix(n * n, n * n + n, ent)


def relation_vectors_check(rho: Representation) -> CheckReport:
    """Every row of relation_vectors, read as an element of T(g), acts by zero."""
    H = rho.H
    N, n = H.N, H.N ** 2
    J = relation_vectors(H)
    rep = CheckReport(f"relation vectors ({rho.label})")
    bad = None
    for r in range(J.nrows):
        M = QMatrix.zeros(rho.dim)
        for c, v in J.row(r).items():
            if c < n * n:
                a, b = divmod(c, n)
                M = M + rho.images[divmod(a, N)] @ rho.images[divmod(b, N)] * v
            else:
                M = M + rho.images[divmod(c - n * n, N)] * v
        if not M.is_zero():
            bad = r
            break
    rep.add("relation vectors act by zero", bad is None, bad)
    return rep


def relation_invariance_check(H: HeckeSymmetry, points=DEFAULT_POINTS) -> CheckReport:
    """The span of the relations is carried to W (x) span by the braiding, W in {V, V*}."""
    rep = CheckReport(f"R-invariance of the relations {H.name}")
    N = H.N
    n = N * N
    J = relation_vectors(H)
    E = extend_braiding(H)
    g2 = ("V", "V*", "V", "V*")
    g1 = ("V", "V*")

    def rank(M):
        return rank_at(M, 1) if H.involutive else rank_generic(M, points)

    for W in ("V", "V*"):
        B4 = mixed_braiding(E, g2, (W,))
        B2 = mixed_braiding(E, g1, (W,))
        # columns v (x) w in the source, images and W (x) span in the target
        src_q, src_l, tgt = {}, {}, {}
        col = 0
        for r in range(J.nrows):
            row = J.row(r)
            for w in range(N):
                for c, v in row.items():
                    if c < n * n:
                        src_q[(c * N + w, col)] = v
                        tgt[(w * n * n + c, col)] = v
                    else:
                        src_l[((c - n * n) * N + w, col)] = v
                        tgt[(N * n * n + w * n + (c - n * n), col)] = v
                col += 1
        Sq = B4 @ QMatrix(n * n * N, col, src_q)
        Sl = B2 @ QMatrix(n * N, col, src_l)
        img = {(r, c): v for (r, c), v in Sq.items()}
        img.update({(N * n * n + r, c): v for (r, c), v in Sl.items()})
        rows = N * n * n + N * n
        Tm = QMatrix(rows, col, tgt)
        both = QMatrix(rows, 2 * col, {**tgt, **{(r, c + col): v for (r, c), v in img.items()}})
        rt, rb = rank(Tm), rank(both)
        rep.add(f"braiding with {W} preserves the relation span", rt == rb, (rt, rb))
    return rep


def mform_check(rho: Representation) -> CheckReport:
    """M = I - omega rho(L) satisfies Rb M_1 Rb M_1 = M_1 Rb M_1 Rb."""
    H = rho.H
    rep = CheckReport(f"M-form ({rho.label})")
    N, d = H.N, rho.dim
    om = H.omega
    M = QMatrix.eye(N * N * d) - rho.L_operator() * om
    Rb = kron(H.R.T, QMatrix.eye(d))
    D = Rb @ M @ Rb @ M - M @ Rb @ M @ Rb
    rep.add("Rb M_1 Rb M_1 - M_1 Rb M_1 Rb = 0", D.is_zero(), _nz(D))
    return rep


# -- sl-reduction --------------------------------------------------------------------------

def _scalar_of(M: QMatrix) -> QScalar | None:
    if M.is_zero():
        return ZERO
    c = M[0, 0]
    return c if M == QMatrix.scalar(M.nrows, c) else None


def sl_reduce(H: HeckeSymmetry, rho: Representation, verify: bool = True) -> Representation:
    """rho~(f_i^j) = (rho(l_i^j) - chi/Tr C delta_i^j) / xi, xi = 1 - omega chi / Tr C."""
    trC = H.trace_C
    if not trC:
        raise ValueError("Tr C = 0 (m = n): sl-reduction unavailable")
    cent = rho.centrality()
    if not cent:
        raise RepresentationError("rho(ell) is not central", cent.failures()[0].witness)
    chi = _scalar_of(rho.ell())
    if chi is None:
        raise RepresentationError("rho(ell) is not a scalar operator")
    xi = ONE - H.omega * chi / trC
    if not xi:
        raise RepresentationError("xi = 0")
    I = QMatrix.eye(rho.dim)
    images = {}
    for (i, j), M in rho.images.items():
        X = M - I * (chi / trC) if i == j else M
        images[(i, j)] = X * xi.inverse()
    out = Representation(H, None, images, rho.dim, f"sl {rho.label}", algebra="SL")
    out.chi, out.xi = chi, xi
    if verify:
        rep = out.relations()
        trR = QMatrix.zeros(rho.dim)
        for (i, j), c in H.C.items():
            trR = trR + images[(j, i)] * c
        rep.add("Tr_R F = 0", trR.is_zero())
        if not rep:
            raise RepresentationError(f"sl-reduction of {rho.label} fails: {rep.failures()[0].name}")
    return out


def z_family(rho: Representation, z) -> Representation:
    """rho^z(l) = z rho(l) + delta (1 - z)/omega I (an automorphism image; omega != 0)."""
    H = rho.H
    om = H.omega
    if not om:
        raise ValueError("the z-family needs omega != 0")
    z = QScalar(z) if not isinstance(z, QScalar) else z
    I = QMatrix.eye(rho.dim)
    images = {(i, j): M * z + (I * ((ONE - z) / om) if i == j else QMatrix.zeros(rho.dim))
              for (i, j), M in rho.images.items()}
    return Representation(H, None, images, rho.dim, f"{rho.label}^z={z}")


def traceless_adjoint(H: HeckeSymmetry, rho: Representation | None = None) -> Representation:
    """The adjoint module restricted to span(f_i^j) = {v : Tr_R v = 0}."""
    rho = adjoint_rep(H) if rho is None else rho
    N = H.N
    n = N * N
    trC = H.trace_C
    if not trC:
        raise ValueError("Tr C = 0 (m = n): no traceless splitting")
    # projector L -> L - (Tr C)^-1 I ell on g
    ent = {(a, a): ONE for a in range(n)}
    for (a, b), c in H.C.items():
        for k in range(N):
            key = (b * N + a, k * N + k)
            ent[key] = ent.get(key, ZERO) - c / trC
    P = QMatrix(n, n, ent)
    comp, _ = _compress(H, P, rho.images)
    d = next(iter(comp.values())).nrows
    return Representation(H, None, comp, d, f"traceless adjoint {H.name}", ambient=rho, projector=P)


def sl_adjoint_check(H: HeckeSymmetry, rho: Representation | None = None) -> CheckReport:
    """The adjoint action in the generators f_i^j and ell."""
    rho = adjoint_rep(H) if rho is None else rho
    N = H.N
    n = N * N
    rep = CheckReport(f"sl-adjoint table {H.name}")
    trC = H.trace_C
    om = H.omega
    # vectors: ell and f_i^j in g-coordinates
    ell = QMatrix(n, 1, {(j * N + i, 0): c for (i, j), c in H.C.items()})
    f = {}
    for i, j in _gens(N):
        v = {(i * N + j, 0): ONE}
        if i == j:
            for (a, b), c in H.C.items():
                key = (b * N + a, 0)
                v[key] = v.get(key, ZERO) - c / trC
        f[(i, j)] = QMatrix(n, 1, v)
    r_ell = rho.ell()
    r_f = {(i, j): (M - r_ell * trC.inverse()) if i == j else M for (i, j), M in rho.images.items()}
    rep.add("rho(ell) |> ell = 0", (r_ell @ ell).is_zero())
    rep.add("rho(F) |> ell = 0", all((M @ ell).is_zero() for M in r_f.values()))
    rep.add("rho(ell) |> F = -omega Tr C F", all(r_ell @ v == v * (-om * trC) for v in f.values()))
    # rho(F_1) |> F_2 = F_1 Rb - Rb F_1 + omega Rb F_1 Rb^-1, with F_2 = Rb F_1 Rb^-1
    ent = {}
    for (i, j), v in f.items():
        for a in range(N):
            for (g, _), c in v.items():
                ent[((i * N + a) * n + (j * N + a), g)] = c
    F1 = QMatrix(n * n, n, ent)
    Rb, Rbi = H.R.T, H.Rinv.T
    F2 = _rmul(_lmul(Rb, F1, n), Rbi, n)
    # LHS entries: sum_b rho(F_1[r, b]) |> F_2[b, c]
    act = {}
    for (i, j), M in r_f.items():
        act[(i, j)] = M
    lhs_ent = {}
    for r1 in range(N):
        for r2 in range(N):
            for c in range(n):
                acc = QMatrix.zeros(n, 1)
                for b1 in range(N):
                    vec = QMatrix(n, 1, {(g, 0): v for g, v in F2.row((b1 * N + r2) * n + c).items()})
                    acc = acc + act[(r1, b1)] @ vec
                for (g, _), v in acc.items():
                    lhs_ent[((r1 * N + r2) * n + c, g)] = v
    lhs = QMatrix(n * n, n, lhs_ent)
    rhs = _rmul(F1, Rb, n) - _lmul(Rb, F1, n) + _rmul(_lmul(Rb, F1, n), Rbi, n) * om
    rep.add("rho(F_1) |> F_2 = F_1 Rb - Rb F_1 + omega Rb F_1 Rb^-1", lhs == rhs, _nz(lhs - rhs))
    return rep


# -- the sl(2) presentation --------------------------------------------------------------

def _ratio(M: QMatrix, E: QMatrix) -> QScalar | None:
    """lambda with M = lambda E, or None."""
    if E.is_zero():
        return None
    (r, c), e = next(iter(E.items()))
    lam = M[r, c] / e
    return lam if M == E * lam else None


def sl2_presentation(H: HeckeSymmetry) -> CheckReport:
    """Traceless generators H^, E^, F^ for the standard m = 2 symmetry and their relations.

    The normalization (H^ = h f_1^1, E^ = f_1^2, F^ = g f_2^1) is solved in rho_1
    and then checked in the traceless adjoint module; general hbar follows by
    rescaling every generator by hbar (each relation is homogeneous of degree 2).
    """
    if H.N != 2:
        raise ValueError("the sl(2) presentation needs N = 2")
    q = H.q
    two = qnum(2, q)
    rep = CheckReport(f"sl(2) presentation {H.name}")
    basic = sl_reduce(H, rho_basic(H))
    F11, E0, F0 = basic.images[(0, 0)], basic.images[(0, 1)], basic.images[(1, 0)]
    lam = _ratio(F11 @ E0 * q ** 2 - E0 @ F11, E0)
    if lam is None or not lam:
        rep.add("q^2 f11 f12 - f12 f11 is proportional to f12", False)
        return rep
    h = two / lam
    Hh = F11 * h
    comm = (E0 @ F0 - F0 @ E0) * q
    target = Hh - Hh @ Hh * ((q ** 2 - 1) / two)
    g = _ratio(target, comm)
    if g is None:
        rep.add("q (f12 f21 - f21 f12) is proportional to H^(1 - (q^2-1)/2_q H^)", False)
        return rep
    rep.values.update({"h": h, "g": g})
    modules = [("rho_1", basic)]
    modules.append(("adjoint", sl_reduce(H, traceless_adjoint(H))))
    for name, mod in modules:
        for hbar in (1, 2, QScalar(1) / 3):
            hb = QScalar(hbar)
            Hm = mod.images[(0, 0)] * (h * hb)
            Em = mod.images[(0, 1)] * hb
            Fm = mod.images[(1, 0)] * (g * hb)
            r1 = Hm @ Em * q ** 2 - Em @ Hm - Em * (two * hb)
            r2 = Hm @ Fm - Fm @ Hm * q ** 2 + Fm * (two * hb)
            r3 = (Em @ Fm - Fm @ Em) * q - Hm * hb + Hm @ Hm * ((q ** 2 - 1) / two)
            tag = f"{name}, hbar={hb}"
            rep.add(f"q^2 HE - EH = 2_q hbar E ({tag})", r1.is_zero())
            rep.add(f"HF - q^2 FH = -2_q hbar F ({tag})", r2.is_zero())
            rep.add(f"q(EF - FE) = H(hbar - (q^2-1)/2_q H) ({tag})", r3.is_zero())
            Cq = Hm @ Hm * two.inverse() + Em @ Fm * q.inverse() + Fm @ Em * q
            rep.add(f"C_q central ({tag})", all(Cq @ X == X @ Cq for X in (Hm, Em, Fm)))
    return rep


# -- classical oracle ----------------------------------------------------------------------

def graded_adjoint_oracle(m: int, n: int) -> dict:
    """ad(l_i^j) on span(l) at q = 1 for gl(m|n), with l_i^j = (-1)^|j| e_i^j.

    [e_i^j, e_k^s] = delta_jk e_i^s - (-1)^{(|i|+|j|)(|k|+|s|)} delta_si e_k^j.
    """
    N = m + n
    par = [0] * m + [1] * n
    sign = [(-1) ** p for p in par]

    def bracket(i, j, k, s):
        out = {}
        if j == k:
            out[(i, s)] = out.get((i, s), 0) + 1
        if s == i:
            out[(k, j)] = out.get((k, j), 0) - (-1) ** ((par[i] + par[j]) * (par[k] + par[s]))
        return out

    images = {}
    for i, j in _gens(N):
        ent = {}
        for k, s in _gens(N):
            # l_i^j |> l_k^s = sign_j sign_s [e_i^j, e_k^s], then e_a^b = sign_b l_a^b
            for (a, b), c in bracket(i, j, k, s).items():
                v = c * sign[j] * sign[s] * sign[b]
                if v:
                    ent[(a * N + b, k * N + s)] = ent.get((a * N + b, k * N + s), 0) + v
        images[(i, j)] = QMatrix(N * N, N * N, ent)
    return images


def classical_adjoint_check(H: HeckeSymmetry, m: int, n: int, rho: Representation | None = None) -> CheckReport:
    """The adjoint module evaluated at q = 1 against gl(m|n) structure constants."""
    rho = adjoint_rep(H) if rho is None else rho
    rep = CheckReport(f"classical adjoint limit {H.name}")
    exp = graded_adjoint_oracle(m, n)
    bad = [ij for ij, M in rho.images.items() if M.evaluate(1) != exp[ij]]
    rep.add(f"rho_ad at q = 1 equals the gl({m}|{n}) adjoint", not bad, bad[:1])
    return rep
