"""Braidings, pairings and R-traces on mixed tensor words over V and V*.

Words are strings such as ``"VV*V"`` or tuples of ``"V"``/``"V*"`` letters.
Every letter carries an N-dimensional space with basis x_i (for V) or the
right dual basis x^i (for V*); a word's space has the row-major product basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .hecke import HeckeSymmetry
from .heckealg import check_cap, idempotent_image, standard_tableaux
from .linalg import QMatrix, kron
from .report import CheckReport
from .scalar import ONE, Q, ZERO, QScalar, qbinom

__all__ = [
    "MixedWord",
    "ExtendedBraiding",
    "extend_braiding",
    "mixed_braiding",
    "Pairings",
    "pairings",
    "check_invariance",
    "trans_map",
    "r_trace",
    "r_dimension",
    "category_check",
    "schur_principal",
]

V, VD = "V", "V*"


def MixedWord(w) -> tuple:
    """Normalize a word given as a string ("VV*V") or a sequence of letters."""
    if isinstance(w, str):
        out = []
        i = 0
        while i < len(w):
            if w[i] != "V":
                raise ValueError(f"bad word {w!r}")
            if w[i + 1:i + 2] == "*":
                out.append(VD)
                i += 2
            else:
                out.append(V)
                i += 1
        return tuple(out)
    w = tuple(w)
    if any(x not in (V, VD) for x in w):
        raise ValueError(f"bad word {w!r}")
    return w


def _word_str(w) -> str:
    return "".join(w) or "1"


@dataclass(frozen=True)
class ExtendedBraiding:
    H: HeckeSymmetry
    blocks: dict  # (letter, letter) -> N^2 x N^2 QMatrix mapping a(x)b to b(x)a

    @property
    def N(self) -> int:
        return self.H.N

    def total(self) -> QMatrix:
        """The operator on (V + V*)^{(x)2} in the basis x_1..x_N, x^1..x^N."""
        N = self.N
        ent = {}
        off = {V: 0, VD: N}
        for (a, b), M in self.blocks.items():
            for (r, c), v in M.items():
                k, l = divmod(r, N)
                i, j = divmod(c, N)
                row = (off[b] + k) * 2 * N + off[a] + l
                col = (off[a] + i) * 2 * N + off[b] + j
                ent[(row, col)] = v
        return QMatrix(4 * N * N, 4 * N * N, ent, (2 * N, 2 * N), (2 * N, 2 * N))


def extend_braiding(H: HeckeSymmetry, verify: bool = True) -> ExtendedBraiding:
    """The four blocks of the extension of R to V + V*, with YBE checked on all 8 sectors."""
    key = "ext"
    if key in H._cache:
        return H._cache[key]
    N = H.N
    R, Ri, Psi = H.R, H.Rinv, H.psi

    def build(f):
        ent = {}
        for k in range(N):
            for l in range(N):
                for i in range(N):
                    for j in range(N):
                        v = f(k, l, i, j)
                        if v:
                            ent[(k * N + l, i * N + j)] = v
        return QMatrix(N * N, N * N, ent, (N, N), (N, N))

    blocks = {
        (V, V): R,
        # x_i (x) x^j -> x^k (x) x_l (R^-1)^{lj}_{ki}
        (V, VD): build(lambda k, l, i, j: Ri[l * N + j, k * N + i]),
        # x^j (x) x_i -> x_k (x) x^l Psi^{kj}_{li}; input index (j, i)
        (VD, V): build(lambda k, l, j, i: Psi[k * N + j, l * N + i]),
        # x^i (x) x^j -> x^k (x) x^l R^{ji}_{lk}
        (VD, VD): build(lambda k, l, i, j: R[j * N + i, l * N + k]),
    }
    E = ExtendedBraiding(H, blocks)
    if verify:
        rep = ybe_sectors(E)
        if not rep:
            from .hecke import YBEError
            raise YBEError("extended braiding violates YBE", rep.failures()[0].name)
    H._cache[key] = E
    return E


def _elementary(E: ExtendedBraiding, word: tuple, p: int) -> QMatrix:
    """Braid letters p, p+1 (0-based) of word; maps word to word with the two swapped."""
    N = E.N
    blk = E.blocks[(word[p], word[p + 1])]
    left = QMatrix.eye(N ** p)
    right = QMatrix.eye(N ** (len(word) - p - 2))
    legs = (N,) * len(word)
    return kron(kron(left, blk), right).with_legs(legs, legs)


def mixed_braiding(E: ExtendedBraiding, w1, w2) -> QMatrix:
    """Braiding of the w1-block past the w2-block: w1 (x) w2 -> w2 (x) w1.

    Built from |w1| * |w2| elementary factors; the last letter of w1 is moved
    right first, so (VV, V) gives R_12 R_23 as an operator product.
    """
    w1, w2 = MixedWord(w1), MixedWord(w2)
    N = E.N
    word = list(w1 + w2)
    n = len(word)
    M = QMatrix.eye(N ** n, (N,) * n)
    for a in range(len(w1) - 1, -1, -1):
        for p in range(a, a + len(w2)):
            M = _elementary(E, tuple(word), p) @ M
            word[p], word[p + 1] = word[p + 1], word[p]
    assert tuple(word) == w2 + w1
    return M


def ybe_sectors(E: ExtendedBraiding) -> CheckReport:
    rep = CheckReport(f"extended braiding YBE {E.H.name}")
    for a in (V, VD):
        for b in (V, VD):
            for c in (V, VD):
                w = (a, b, c)
                # R12 R23 R12 = R23 R12 R23, tracking letters
                r1 = _elementary(E, w, 0)
                w1 = (b, a, c)
                r2 = _elementary(E, w1, 1)
                w2 = (b, c, a)
                r3 = _elementary(E, w2, 0)
                lhs = r3 @ r2 @ r1
                s1 = _elementary(E, w, 1)
                v1 = (a, c, b)
                s2 = _elementary(E, v1, 0)
                v2 = (c, a, b)
                s3 = _elementary(E, v2, 1)
                rhs = s3 @ s2 @ s1
                rep.add(f"YBE on {_word_str(w)}", lhs == rhs, lhs.first_difference(rhs))
    return rep


# -- pairings ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Pairings:
    right: QMatrix       # V (x) V* -> K, 1 x N^2
    left: QMatrix        # V* (x) V -> K
    copair_right: QMatrix  # K -> V* (x) V, N^2 x 1
    copair_left: QMatrix   # K -> V (x) V*
    left_basis: QMatrix  # T with x~^i = sum_j T[i, j] x^j
    norm: QScalar        # q^{2(m-n)} = 1/nu


def pairings(H: HeckeSymmetry) -> Pairings:
    N = H.N
    if not H.nu:
        raise ZeroDivisionError("nu = 0: the symmetry is not strictly skew-invertible")
    norm = H.nu.inverse()
    right = QMatrix(1, N * N, {(0, i * N + i): ONE for i in range(N)}, (1,), (N, N))
    left = QMatrix(1, N * N, {(0, i * N + j): v for (i, j), v in H.B.items()}, (1,), (N, N))
    copair_r = QMatrix(N * N, 1, {(i * N + i, 0): ONE for i in range(N)}, (N, N), (1,))
    T = H.C * norm
    copair_l = QMatrix(N * N, 1, {(i * N + j, 0): v for (i, j), v in T.items()}, (N, N), (1,))
    return Pairings(right, left, copair_r, copair_l, T, norm)


def trans_map(H: HeckeSymmetry) -> QMatrix:
    """V (x) V* -> V* (x) V : x_i (x) x^j -> x^k (x) x_l R^{lj}_{ki}."""
    N = H.N
    R = H.R
    ent = {}
    for k in range(N):
        for l in range(N):
            for i in range(N):
                for j in range(N):
                    v = R[l * N + j, k * N + i]
                    if v:
                        ent[(k * N + l, i * N + j)] = v
    return QMatrix(N * N, N * N, ent, (N, N), (N, N))


def _braid_letter(E: ExtendedBraiding, w, letter_first: bool, x) -> QMatrix:
    """R_{w,x} (letter_first False) or R_{x,w}; the unit object braids trivially."""
    w = MixedWord(w)
    N = E.N
    if not w:
        return QMatrix.eye(N)
    return mixed_braiding(E, (x,), w) if letter_first else mixed_braiding(E, w, (x,))


def check_invariance(E: ExtendedBraiding, f: QMatrix, src, dst) -> CheckReport:
    """Both naturality squares for W in {V, V*}."""
    src, dst = MixedWord(src), MixedWord(dst)
    N = E.N
    rep = CheckReport(f"R-invariance {_word_str(src)} -> {_word_str(dst)}")
    if f.shape != (N ** len(dst), N ** len(src)):
        raise ValueError(f"map has shape {f.shape}, expected {(N ** len(dst), N ** len(src))}")
    I = QMatrix.eye(N)
    for W in (V, VD):
        # (id_W (x) f) R_{src,W} = R_{dst,W} (f (x) id_W)
        lhs = kron(I, f) @ _braid_letter(E, src, False, W)
        rhs = _braid_letter(E, dst, False, W) @ kron(f, I)
        rep.add(f"(id (x) f) R_(src,{W}) = R_(dst,{W}) (f (x) id)", lhs == rhs, lhs.first_difference(rhs))
        # (f (x) id_W) R_{W,src} = R_{W,dst} (id_W (x) f)
        lhs = kron(f, I) @ _braid_letter(E, src, True, W)
        rhs = _braid_letter(E, dst, True, W) @ kron(I, f)
        rep.add(f"(f (x) id) R_({W},src) = R_({W},dst) (id (x) f)", lhs == rhs, lhs.first_difference(rhs))
    return rep


# -- R-trace and R-dimension --------------------------------------------------------------

def r_trace(H: HeckeSymmetry, F: QMatrix) -> QScalar:
    """Tr_R(F) = q^{2(m-n)} Tr(F C) with q^{2(m-n)} taken as 1/nu."""
    return (F @ H.C).trace() * H.nu.inverse()


def r_dimension(H: HeckeSymmetry, lam: Sequence[int], tableau_index: int | None = None) -> QScalar:
    """q^{2k(m-n)} Tr(C_1...C_k E^lam_a); with no index, all a are computed and must agree."""
    lam = tuple(lam)
    k = sum(lam)
    if k == 0:
        return ONE
    check_cap(H, k, max(k, 5))
    Ck = H.C
    for _ in range(k - 1):
        Ck = kron(Ck, H.C)
    tabs = standard_tableaux(lam)
    chosen = tabs if tableau_index is None else [tabs[tableau_index - 1]]
    vals = []
    for t in chosen:
        E = idempotent_image(H, t).matrix
        vals.append((Ck @ E).trace() * H.nu.inverse() ** k)
    if any(v != vals[0] for v in vals):
        raise AssertionError(f"R-dimension of {lam} depends on the tableau: {[str(v) for v in vals]}")
    return vals[0]


def schur_principal(lam: Sequence[int], d: int, q: QScalar = Q) -> QScalar:
    """s_lam(q^{d-1}, q^{d-3}, ..., q^{1-d}) via the q-hook-content formula."""
    from .heckealg import conjugate
    from .scalar import qnum
    lam = tuple(lam)
    if len(lam) > d:
        return ZERO
    conj = conjugate(lam)
    num, den = ONE, ONE
    for r, row in enumerate(lam):
        for c in range(row):
            num = num * qnum(d + c - r, q)
            den = den * qnum((row - c - 1) + (conj[c] - r - 1) + 1, q)
    return num / den


def category_check(H: HeckeSymmetry, max_weight: int = 3) -> CheckReport:
    """YBE, pairing invariance, left-basis rewrite of the braiding, left-form diagrams, R-trace values."""
    E = extend_braiding(H)
    N = H.N
    rep = CheckReport(f"Schur-Weyl category checks {H.name}")
    rep.extend(ybe_sectors(E))
    P = pairings(H)
    rep.extend(check_invariance(E, P.right, "VV*", ""), "<,>_r: ")
    rep.extend(check_invariance(E, P.left, "V*V", ""), "<,>_l: ")
    rep.extend(check_invariance(E, P.copair_right, "", "V*V"), "pi_r: ")
    rep.extend(check_invariance(E, P.copair_left, "", "VV*"), "pi_l: ")
    rep.extend(check_invariance(E, trans_map(H), "VV*", "V*V"), "trans: ")
    naive = QMatrix(1, N * N, {(0, i * N + i): ONE for i in range(N)}, (1,), (N, N))
    naive_ok = bool(check_invariance(E, naive, "V*V", ""))
    rep.add("naive left pairing is R-invariant only for involutive R", naive_ok == H.involutive, naive_ok)
    # left dual basis
    dual = P.left_basis @ H.B
    rep.add("<x~^i, x_j>_l = delta", dual == QMatrix.eye(N), dual.first_difference(QMatrix.eye(N)))
    # first diagram: <,>_l = <,>_r o R_{V*,V};  second: <,>_l o R_{V,V*} = <,>_r
    lf1 = P.right @ E.blocks[(VD, V)]
    rep.add("left form diagram <,>_l = <,>_r R_(V*,V) commutes", lf1 == P.left, lf1.first_difference(P.left))
    lf2 = P.left @ E.blocks[(V, VD)]
    rep.add("<,>_l R_(V,V*) = <,>_r commutes exactly when R is involutive", (lf2 == P.right) == H.involutive)
    rep.extend(ext_prime_check(H, E))
    # R-trace of the l-basis: F(l_i^j) = E_ij B
    ok = True
    for i in range(N):
        for j in range(N):
            Eij = QMatrix(N, N, {(i, j): ONE})
            if r_trace(H, Eij @ H.B) != (ONE if i == j else ZERO):
                ok = False
    rep.add("Tr_R(l_i^j) = delta_i^j", ok)
    return rep


def ext_prime_check(H: HeckeSymmetry, E: ExtendedBraiding | None = None) -> CheckReport:
    """Rewrite the extended blocks in the left basis x~^i and compare with the closed forms."""
    E = extend_braiding(H) if E is None else E
    N = H.N
    rep = CheckReport("left-basis form of the extension")
    T = pairings(H).left_basis
    S = T.T  # right coordinates of a left-basis vector: c_right = T^T c_left
    Sinv = S.inverse()
    I = QMatrix.eye(N)
    conj = {
        (V, VD): (kron(Sinv, I), kron(I, S)),
        (VD, V): (kron(I, Sinv), kron(S, I)),
        (VD, VD): (kron(Sinv, Sinv), kron(S, S)),
    }
    R, Ri, Psi = H.R, H.Rinv, H.psi
    closed = {
        # R(x_i (x) x~^j) = x~^k (x) x_l Psi^{jl}_{ik}
        (V, VD): lambda k, l, i, j: Psi[j * N + l, i * N + k],
        # R(x~^j (x) x_i) = x_k (x) x~^l (R^-1)^{jk}_{il}; input (j, i)
        (VD, V): lambda k, l, j, i: Ri[j * N + k, i * N + l],
        (VD, VD): lambda k, l, i, j: R[j * N + i, l * N + k],
    }
    for key, (pre, post) in conj.items():
        # pre maps output right-coords to left-coords; post maps left-coords input to right-coords
        M = pre @ E.blocks[key] @ post
        f = closed[key]
        ent = {}
        for k in range(N):
            for l in range(N):
                for i in range(N):
                    for j in range(N):
                        v = f(k, l, i, j)
                        if v:
                            ent[(k * N + l, i * N + j)] = v
        want = QMatrix(N * N, N * N, ent)
        rep.add(f"braiding {_word_str(key)} block in the left basis", M == want, M.first_difference(want))
    return rep


def q_minus_coefficients(H: HeckeSymmetry, K: int) -> list:
    """dim_R Lambda^k_-(V) for k = 0..K."""
    return [r_dimension(H, (1,) * k) if k else ONE for k in range(K + 1)]


def q_minus_expected(m: int, n: int, K: int, q: QScalar = Q) -> list:
    """Closed form following from the definition: q^{k(m-n)} binom(m-n, k)_q (zero past m-n)."""
    d = m - n
    return [q ** (k * d) * qbinom(d, k, q) if 0 <= k <= d else ZERO for k in range(K + 1)]
