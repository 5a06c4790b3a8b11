"""Hecke symmetries, their skew-inverse and the operators B and C.

A Hecke symmetry is an N^2 x N^2 matrix R solving the braid relation
``R12 R23 R12 = R23 R12 R23`` with ``(R - q I)(R + q^-1 I) = 0``.  Matrix
elements follow ``R(x_i (x) x_j) = x_k (x) x_l R^{kl}_{ij}`` with the upper
pair indexing rows.  Involutive symmetries (R^2 = I) are handled at the
specialized value q = 1.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Optional

from .linalg import QMatrix, SingularMatrixError, amplify, flip, kron, partial_trace
from .report import CheckReport
from .scalar import ONE, Q, ParseError, QScalar, qnum

__all__ = [
    "HeckeSymmetry",
    "CertificationError",
    "YBEError",
    "HeckeConditionError",
    "SkewInvertibilityError",
    "standard_R",
    "super_flip",
    "skew_inverse",
    "certify",
    "verify_skew_identities",
    "load_R",
    "dump_R",
    "dual_symmetry",
]


class CertificationError(ValueError):
    """A matrix failed one of the defining properties of a Hecke symmetry."""

    invariant = "certification"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class YBEError(CertificationError):
    invariant = "yang-baxter"


class HeckeConditionError(CertificationError):
    invariant = "hecke"


class SkewInvertibilityError(CertificationError):
    invariant = "skew-invertibility"


def _idx(a: int, b: int, N: int) -> int:
    return a * N + b


@dataclass(frozen=True)
class HeckeSymmetry:
    """A certified skew-invertible Hecke symmetry with cached derived data."""

    N: int
    R: QMatrix
    q: QScalar
    psi: QMatrix
    B: QMatrix
    C: QMatrix
    nu: QScalar
    birank: Optional[tuple] = None
    name: str = "custom"
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def omega(self) -> QScalar:
        return self.q - self.q.inverse()

    @property
    def involutive(self) -> bool:
        return self.q == ONE

    @property
    def Rinv(self) -> QMatrix:
        """R^{-1} = R - (q - q^-1) I (Hecke inversion)."""
        if "Rinv" not in self._cache:
            self._cache["Rinv"] = self.R - QMatrix.scalar(self.N ** 2, self.omega, (self.N, self.N))
        return self._cache["Rinv"]

    @property
    def P(self) -> QMatrix:
        return flip(self.N)

    @property
    def R21(self) -> QMatrix:
        P = self.P
        return P @ self.R @ P

    @property
    def trace_C(self) -> QScalar:
        return self.C.trace()

    @property
    def trace_B(self) -> QScalar:
        return self.B.trace()

    def with_birank(self, m: int, n: int) -> "HeckeSymmetry":
        return replace(self, birank=(m, n), _cache=self._cache)

    def eye(self, k: int = 1) -> QMatrix:
        return QMatrix.eye(self.N ** k, (self.N,) * k)

    def R_at(self, i: int, k: int) -> QMatrix:
        """R acting on legs i, i+1 of V^{(x)k} (cached)."""
        key = ("R", i, k)
        if key not in self._cache:
            self._cache[key] = amplify(self.R, i, k, self.N)
        return self._cache[key]

    def __hash__(self):
        return hash((self.N, self.R, self.q))

    def __eq__(self, other):
        if not isinstance(other, HeckeSymmetry):
            return NotImplemented
        return self.N == other.N and self.R == other.R and self.q == other.q


# -- construction ---------------------------------------------------------------

def _standard_matrix(m: int) -> QMatrix:
    ent = {}
    om = Q - Q.inverse()
    for i in range(m):
        for j in range(m):
            # h_i^j (x) h_j^i sends x_j (x) x_i to x_i (x) x_j
            ent[(_idx(i, j, m), _idx(j, i, m))] = Q if i == j else ONE
    for i in range(m):
        for j in range(i + 1, m):
            ent[(_idx(i, j, m), _idx(i, j, m))] = om
    return QMatrix(m * m, m * m, ent, (m, m), (m, m))


def standard_R(m: int) -> HeckeSymmetry:
    """The Drinfeld-Jimbo symmetry of GL_q(m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    H = certify(_standard_matrix(m), m, Q, name=f"standard({m})")
    return replace(H, birank=(m, 0))


def super_flip(m: int, n: int) -> HeckeSymmetry:
    """Signed flip on a superspace with m even and n odd basis vectors."""
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("need m, n >= 0 and m + n >= 1")
    N = m + n
    par = [0] * m + [1] * n
    R = flip(N, lambda i, j: -1 if par[i] and par[j] else 1)
    H = certify(R, N, ONE, name=f"superflip({m},{n})")
    return replace(H, birank=(m, n))


def skew_inverse(R: QMatrix, N: int) -> QMatrix:
    """Solve R^{ia}_{jb} Psi^{bl}_{ak} = delta^i_k delta^l_j for Psi."""
    if R.shape != (N * N, N * N):
        raise ValueError("R must be N^2 x N^2")
    # F[(i,j),(a,b)] = R^{ia}_{jb}: partial transpose of R in the second leg
    ent = {}
    for (r, c), v in R.items():
        i, a = divmod(r, N)
        j, b = divmod(c, N)
        ent[(_idx(i, j, N), _idx(a, b, N))] = v
    F = QMatrix(N * N, N * N, ent)
    try:
        G = F.inverse()
    except SingularMatrixError as exc:
        raise SkewInvertibilityError("not skew-invertible: partial transpose of R is singular") from exc
    # Psi^{bl}_{ak} = G[(a,b),(k,l)]
    pent = {}
    for (r, c), v in G.items():
        a, b = divmod(r, N)
        k, l = divmod(c, N)
        pent[(_idx(b, l, N), _idx(a, k, N))] = v
    psi = QMatrix(N * N, N * N, pent, (N, N), (N, N))
    # the second defining equality: Psi^{ia}_{jb} R^{bl}_{ak} = delta^i_k delta^l_j
    ent2 = {}
    for (r, c), v in psi.items():
        i, a = divmod(r, N)
        j, b = divmod(c, N)
        ent2[(_idx(i, j, N), _idx(a, b, N))] = v
    Fp = QMatrix(N * N, N * N, ent2)
    ent3 = {}
    for (r, c), v in R.items():
        b, l = divmod(r, N)
        a, k = divmod(c, N)
        ent3[(_idx(a, b, N), _idx(k, l, N))] = v
    prod_ = Fp @ QMatrix(N * N, N * N, ent3)
    if prod_ != QMatrix.eye(N * N):
        bad = prod_.first_difference(QMatrix.eye(N * N))
        raise SkewInvertibilityError("not skew-invertible: right skew-inverse differs from left", witness=bad)
    return psi


def _braid_check(R: QMatrix, N: int):
    R12 = amplify(R, 1, 3, N)
    R23 = amplify(R, 2, 3, N)
    lhs = R12 @ R23 @ R12
    rhs = R23 @ R12 @ R23
    if lhs == rhs:
        return None
    return lhs.first_difference(rhs)


def _hecke_check(R: QMatrix, N: int, q: QScalar):
    I = QMatrix.eye(N * N, (N, N))
    lhs = (R - I * q) @ (R + I * q.inverse())
    if lhs.is_zero():
        return None
    return lhs.first_difference(QMatrix.zeros(N * N))


def certify(R: QMatrix, N: int, q: QScalar | None = None, name: str = "custom") -> HeckeSymmetry:
    """Verify YBE, the Hecke condition and strict skew-invertibility.

    When ``q`` is ``None`` it is inferred: symbolic ``q`` if any entry of R
    depends on q, otherwise the involutive value 1.
    """
    if R.shape != (N * N, N * N):
        raise CertificationError(f"R must be {N * N}x{N * N}, got {R.nrows}x{R.ncols}")
    R = R.with_legs((N, N), (N, N))
    w = _braid_check(R, N)
    if w is not None:
        raise YBEError(f"R12 R23 R12 != R23 R12 R23 at 1-based index {(w[0] + 1, w[1] + 1)}", witness=w)
    if q is None:
        q = ONE if all(v.is_constant() for _, v in R.items()) else Q
    w = _hecke_check(R, N, q)
    if w is not None:
        raise HeckeConditionError(
            f"(R - q)(R + 1/q) != 0 for q = {q} at 1-based index {(w[0] + 1, w[1] + 1)}", witness=w
        )
    psi = skew_inverse(R, N)
    psi3 = psi.with_legs((N, N), (N, N))
    B = partial_trace(psi3, [1])
    C = partial_trace(psi3, [2])
    BC = B @ C
    nu = BC[0, 0]
    if not nu or BC != QMatrix.scalar(N, nu, (N,)) or C @ B != BC:
        raise SkewInvertibilityError("not strictly skew-invertible: B C is not a nonzero scalar")
    return HeckeSymmetry(N=N, R=R, q=q, psi=psi3, B=B.with_legs((N,), (N,)), C=C.with_legs((N,), (N,)), nu=nu, name=name)


def dual_symmetry(H: HeckeSymmetry) -> HeckeSymmetry:
    """The braiding of V* (x) V*: R*(x^i (x) x^j) = x^k (x) x^l R^{ji}_{lk}."""
    if "dual" not in H._cache:
        N = H.N
        ent = {}
        for (r, c), v in H.R.items():
            j, i = divmod(r, N)
            l, k = divmod(c, N)
            ent[(_idx(k, l, N), _idx(i, j, N))] = v
        D = certify(QMatrix(N * N, N * N, ent), N, H.q, name=f"dual({H.name})")
        H._cache["dual"] = replace(D, birank=H.birank)
    return H._cache["dual"]


# -- the identity suite -------------------------------------------------------------

def expected_trace_B(m: int, n: int, q: QScalar) -> QScalar:
    return q ** (n - m) * qnum(m - n, q)


def _wit(M: QMatrix, target: QMatrix):
    d = M.first_difference(target)
    return None if d is None else tuple(x + 1 for x in d)


def verify_skew_identities(H: HeckeSymmetry) -> CheckReport:
    """Check every listed identity for Psi, B and C as an exact operator equation."""
    N = H.N
    rep = CheckReport(f"skew identities for {H.name}")
    I1 = H.eye(1)
    I2 = H.eye(2)
    R, Rinv, psi, B, C = H.R, H.Rinv, H.psi, H.B, H.C
    P = H.P
    R21 = H.R21
    R21inv = P @ Rinv @ P

    rep.add("hecke inversion R^-1 = R - omega I", R @ Rinv == I2, _wit(R @ Rinv, I2))
    P13 = P.with_legs((N, N), (N, N))
    # the skew-inverse identity in partial-trace form on V^{(x)3}
    R12 = amplify(R, 1, 3, N)
    R23 = amplify(R, 2, 3, N)
    psi12 = amplify(psi, 1, 3, N)
    psi23 = amplify(psi, 2, 3, N)
    lhs = partial_trace(R12 @ psi23, [2])
    rep.add("psi: Tr_(2) R12 Psi23 = P13", lhs == P13, _wit(lhs, P13))
    lhs = partial_trace(psi12 @ R23, [2])
    rep.add("psi: Tr_(2) Psi12 R23 = P13", lhs == P13, _wit(lhs, P13))

    rep.add("Tr B = Tr C", B.trace() == C.trace(), (str(B.trace()), str(C.trace())))
    B2 = kron(I1, B)
    C2 = kron(I1, C)
    B1 = kron(B, I1)
    C1 = kron(C, I1)
    t = partial_trace(B2 @ R21, [2])
    rep.add("R-trace of R: Tr_(2) B2 R21 = I", t == I1, _wit(t, I1))
    t = partial_trace(C2 @ R, [2])
    rep.add("R-trace of R: Tr_(2) C2 R12 = I", t == I1, _wit(t, I1))
    nuI = QMatrix.scalar(N, H.nu, (N,))
    rep.add("BC: B C = nu I", B @ C == nuI, _wit(B @ C, nuI))
    rep.add("BC: C B = nu I", C @ B == nuI, _wit(C @ B, nuI))
    BB = B1 @ B2
    CC = C1 @ C2
    rep.add("B, C commute with R: R B1 B2 = B1 B2 R", R @ BB == BB @ R, _wit(R @ BB, BB @ R))
    rep.add("B, C commute with R: R C1 C2 = C1 C2 R", R @ CC == CC @ R, _wit(R @ CC, CC @ R))
    pairs = [
        ("Psi vs B, C: B1 Psi12 = R21^-1 B2", B1 @ psi, R21inv @ B2),
        ("Psi vs B, C: Psi12 B1 = B2 R21^-1", psi @ B1, B2 @ R21inv),
        ("Psi vs B, C: C2 Psi12 = R21^-1 C1", C2 @ psi, R21inv @ C1),
        ("Psi vs B, C: Psi12 C2 = C1 R21^-1", psi @ C2, C1 @ R21inv),
    ]
    for name, a, b in pairs:
        rep.add(name, a == b, _wit(a, b))

    ok_b = ok_c = True
    wb = wc = None
    for i in range(N):
        for j in range(N):
            X = QMatrix(N, N, {(i, j): ONE}, (N,), (N,))
            X1 = kron(X, I1)
            X2 = kron(I1, X)
            target_b = QMatrix.scalar(N, (B @ X).trace(), (N,))
            target_c = QMatrix.scalar(N, (C @ X).trace(), (N,))
            for M in (R @ X2 @ Rinv, Rinv @ X2 @ R):
                if partial_trace(B1 @ M, [1]) != target_b and ok_b:
                    ok_b, wb = False, (i + 1, j + 1)
            for M in (R @ X1 @ Rinv, Rinv @ X1 @ R):
                if partial_trace(C2 @ M, [2]) != target_c and ok_c:
                    ok_c, wc = False, (i + 1, j + 1)
    rep.add("R-conjugation trace: Tr_(1) B1 R X2 R^-1 = Tr(BX) I", ok_b, wb)
    rep.add("R-conjugation trace: Tr_(2) C2 R X1 R^-1 = Tr(CX) I", ok_c, wc)

    # the two-leg trace invariance that precedes the dual-vector identity
    ok12 = True
    w12 = None
    for a in range(N * N):
        for b in range(N * N):
            X = QMatrix(N * N, N * N, {(a, b): ONE}, (N, N), (N, N))
            base_b = (BB @ X).trace()
            base_c = (CC @ X).trace()
            if (BB @ R @ X @ Rinv).trace() != base_b or (CC @ R @ X @ Rinv).trace() != base_c:
                ok12, w12 = False, (a + 1, b + 1)
                break
        if not ok12:
            break
    rep.add("Tr_(12) B1B2 R X R^-1 = Tr_(12) B1B2 X", ok12, w12)

    rep.values["trB"] = B.trace()
    rep.values["trC"] = C.trace()
    rep.values["nu"] = H.nu
    if H.birank is not None:
        m, n = H.birank
        exp = expected_trace_B(m, n, H.q)
        rep.add("Tr B = q^(n-m) (m-n)_q", B.trace() == exp, (str(B.trace()), str(exp)))
        rep.add("Tr C = q^(n-m) (m-n)_q", C.trace() == exp, (str(C.trace()), str(exp)))
        nu_exp = H.q ** (2 * (n - m))
        rep.add("nu = q^(2(n-m))", H.nu == nu_exp, (str(H.nu), str(nu_exp)))
    else:
        rep.skip("Tr B = q^(n-m) (m-n)_q", "bi-rank unknown")
    return rep


# -- io -------------------------------------------------------------------------------

def dump_R(H: HeckeSymmetry) -> str:
    obj = H.R.to_json()
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def load_R(src) -> HeckeSymmetry:
    """Load and certify a matrix from JSON text, a parsed dict or a path."""
    if isinstance(src, str) and not src.lstrip().startswith("{"):
        with open(src) as fh:
            src = fh.read()
    M = QMatrix.from_json(src)
    N = 1
    while N * N < M.nrows:
        N += 1
    if N * N != M.nrows or M.nrows != M.ncols:
        raise ParseError(f"R must be square of size N^2, got {M.nrows}x{M.ncols}")
    return certify(M, N)
