"""Young combinatorics and the image of the Hecke algebra H_k(q) on V^{(x)k}.

Primitive idempotents are produced by spectral projection onto Jucys-Murphy
eigenvalues: ``E_t = E_{t'} * prod_c (J_k - c) / (j_k - c)`` where ``t'`` is
``t`` with the box ``k`` removed and ``c`` runs over the contents of the other
addable boxes of ``shape(t')``.

For involutive symmetries (q = 1) the multiplicative elements
``J_{p+1} = R_p J_p R_p`` all collapse to the identity, so the additive
elements ``X_{p+1} = R_p X_p R_p + R_p`` (eigenvalue ``c - r``) are used there.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .hecke import HeckeSymmetry
from .linalg import DEFAULT_POINTS, BlockMat, BlockStructure, GenericityError, QMatrix, kron, partial_trace
from .report import CheckReport
from .scalar import ONE, Q, ZERO, QScalar, qnum

__all__ = [
    "StandardTableau",
    "partitions",
    "conjugate",
    "contains",
    "hook_length_count",
    "standard_tableaux",
    "content_vector",
    "contents",
    "addable_boxes",
    "HeckeImage",
    "jm_images",
    "idempotent_image",
    "IdempotentImage",
    "young_decomposition",
    "trace_recursion_check",
    "lambda_mn",
    "lambda_mn_minus",
    "alpha_beta",
    "idempotent_rank",
    "completeness_check",
    "default_cap",
    "check_cap",
    "CapExceededError",
    "kernel_criterion_check",
    "lr_coefficient",
    "lr_consistency_check",
    "clear_cache",
]


# -- partitions ------------------------------------------------------------------

def _check_partition(lam: Sequence[int]) -> tuple:
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition")
    return lam


@lru_cache(maxsize=None)
def partitions(k: int) -> tuple:
    """Partitions of k in reverse lexicographic order, e.g. (3,), (2,1), (1,1,1)."""
    def gen(n, mx):
        if n == 0:
            yield ()
            return
        for first in range(min(n, mx), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest
    return tuple(gen(k, k))


def conjugate(lam: Sequence[int]) -> tuple:
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0]))


def contains(mu: Sequence[int], nu: Sequence[int]) -> bool:
    """mu is a subdiagram of nu."""
    if len(mu) > len(nu):
        return False
    return all(a <= b for a, b in zip(mu, nu))


def hook_length_count(lam: Sequence[int]) -> int:
    lam = tuple(lam)
    conj = conjugate(lam)
    h = 1
    for r, row in enumerate(lam):
        for c in range(row):
            h *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(sum(lam)) // h


def addable_boxes(lam: Sequence[int]) -> list:
    """0-based (row, col) positions where a box may be added."""
    lam = tuple(lam)
    out = []
    for r in range(len(lam) + 1):
        cur = lam[r] if r < len(lam) else 0
        above = lam[r - 1] if r > 0 else None
        if above is None or cur < above:
            out.append((r, cur))
    return out


def lambda_mn(m: int, n: int) -> tuple:
    """The rectangle ((n+1)^(m+1))."""
    return (n + 1,) * (m + 1)


def lambda_mn_minus(m: int, n: int) -> tuple:
    """The rectangle with its corner removed: ((n+1)^m, n)."""
    lam = (n + 1,) * m + ((n,) if n > 0 else ())
    return lam


# -- tableaux --------------------------------------------------------------------------

@dataclass(frozen=True)
class StandardTableau:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = tuple(len(r) for r in rows)
        _check_partition(shape)
        flat = sorted(x for r in rows for x in r)
        if flat != list(range(1, len(flat) + 1)):
            raise ValueError("filling must be a bijection onto 1..k")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError("rows must increase")
        for i in range(1, len(rows)):
            if any(rows[i][c] <= rows[i - 1][c] for c in range(len(rows[i]))):
                raise ValueError("columns must increase")

    @property
    def shape(self) -> tuple:
        return tuple(len(r) for r in self.rows)

    @property
    def k(self) -> int:
        return sum(self.shape)

    def position(self, p: int) -> tuple:
        """0-based (row, col) of entry p."""
        for r, row in enumerate(self.rows):
            if p in row:
                return (r, row.index(p))
        raise KeyError(p)

    def prefix(self) -> "StandardTableau | None":
        k = self.k
        if k <= 1:
            return None
        rows = [tuple(x for x in r if x != k) for r in self.rows]
        return StandardTableau(tuple(r for r in rows if r))

    def __str__(self) -> str:
        return " / ".join(" ".join(str(x) for x in r) for r in self.rows)


def standard_tableaux(lam: Sequence[int]) -> list:
    """All standard tableaux of shape lam, ordered lexicographically by rows."""
    lam = _check_partition(lam)
    k = sum(lam)
    out = []

    def rec(rows, p):
        if p > k:
            out.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for r in range(len(lam)):
            if len(rows[r]) < lam[r] and (r == 0 or len(rows[r - 1]) > len(rows[r])):
                rows[r].append(p)
                rec(rows, p + 1)
                rows[r].pop()

    rec([[] for _ in lam], 1)
    out.sort(key=lambda t: t.rows)
    return out


def contents(t: StandardTableau) -> list:
    """c_p - r_p for p = 1..k."""
    out = []
    for p in range(1, t.k + 1):
        r, c = t.position(p)
        out.append(c - r)
    return out


def content_vector(t: StandardTableau, q: QScalar = Q) -> list:
    """(j_1, ..., j_k) with j_p = q^(2(c_p - r_p))."""
    return [q ** (2 * c) for c in contents(t)]


# -- the algebra image ----------------------------------------------------------------

class HeckeImage:
    """The image of H_k(q) on V^{(x)k}, either symbolic or at a rational point.

    With ``point=None`` operators are :class:`QMatrix`; otherwise they are
    :class:`BlockMat` specializations at ``q = point``.
    """

    def __init__(self, H: HeckeSymmetry, k: int, point=None):
        self.H = H
        self.k = k
        self.point = point
        self.dim = H.N ** k
        gens_q = [H.R_at(i, k) for i in range(1, k)] if k >= 2 else []
        self._legs = (H.N,) * k
        if point is None:
            self.gens = gens_q
            self._eye = QMatrix.eye(self.dim, self._legs)
        else:
            if H.involutive:
                point = 1
                self.point = 1
            self.bs = BlockStructure(self.dim, gens_q)
            self.gens = [BlockMat.from_qmatrix(self.bs, g, point) for g in gens_q]
            self._eye = BlockMat.eye(self.bs)
        self._jm = {}
        self._xm = {}
        self._idem = {}

    def scalar(self, x: QScalar):
        if self.point is None:
            return x
        return x.eval_at(self.point)

    def eye(self):
        return self._eye

    def jm(self, p: int):
        """Multiplicative Jucys-Murphy element J_p on V^{(x)k}."""
        if p not in self._jm:
            if p == 1:
                self._jm[p] = self._eye
            else:
                R = self.gens[p - 2]
                self._jm[p] = R @ self.jm(p - 1) @ R
        return self._jm[p]

    def jm_additive(self, p: int):
        if p not in self._xm:
            if p == 1:
                self._xm[p] = self._eye * 0
            else:
                R = self.gens[p - 2]
                self._xm[p] = R @ self.jm_additive(p - 1) @ R + R
        return self._xm[p]

    def _spectral_value(self, content: int):
        if self.H.involutive:
            return QScalar(content)
        return self.H.q ** (2 * content)

    def idempotent(self, t: StandardTableau):
        """E_t acting on V^{(x)k} (as E_t (x) I if t is smaller than k)."""
        if t.k > self.k:
            raise ValueError("tableau larger than the tensor power")
        key = t.rows
        if key in self._idem:
            return self._idem[key]
        if t.k == 1:
            E = self._eye
        else:
            prev = t.prefix()
            E = self.idempotent(prev)
            p = t.k
            r, c = t.position(p)
            target = self._spectral_value(c - r)
            J = self.jm_additive(p) if self.H.involutive else self.jm(p)
            for (ar, ac) in addable_boxes(prev.shape):
                if (ar, ac) == (r, c):
                    continue
                val = self._spectral_value(ac - ar)
                den = target - val
                if not den:
                    raise GenericityError(f"non-generic q: contents {c - r} and {ac - ar} coincide")
                dv = self.scalar(den)
                if dv == 0:
                    raise GenericityError(f"non-generic q = {self.point}: eigenvalue denominators vanish")
                E = E @ (J.add_scalar(-self.scalar(val))) * (1 / dv if self.point is not None else den.inverse())
        self._idem[key] = E
        return E

    def rank(self, M) -> int:
        if self.point is None:
            raise ValueError("rank needs a point specialization")
        return M.rank()


_IMAGES: dict = {}


def _image(H: HeckeSymmetry, k: int, point=None) -> HeckeImage:
    key = (id(H), k, point)
    img = _IMAGES.get(key)
    if img is None or img.H is not H:
        img = HeckeImage(H, k, point)
        _IMAGES[key] = img
    return img


def clear_cache() -> None:
    _IMAGES.clear()


def jm_images(H: HeckeSymmetry, k: int) -> list:
    img = _image(H, k)
    return [img.jm(p) for p in range(1, k + 1)]


@dataclass(frozen=True)
class IdempotentImage:
    shape: tuple
    index: int
    k: int
    matrix: QMatrix
    tableau: StandardTableau


def idempotent_image(H: HeckeSymmetry, t: StandardTableau) -> IdempotentImage:
    E = _image(H, t.k).idempotent(t)
    tabs = standard_tableaux(t.shape)
    return IdempotentImage(t.shape, tabs.index(t) + 1, t.k, E, t)


def idempotent_rank(H: HeckeSymmetry, t: StandardTableau, points=DEFAULT_POINTS, k: int | None = None) -> int:
    """Generic rank of E_t (on V^{(x)k}, default k = |t|), agreed at all points."""
    k = t.k if k is None else k
    if H.involutive:
        return _image(H, k, 1).idempotent(t).rank()
    ranks = {p: _image(H, k, p).idempotent(t).rank() for p in points}
    if len(set(ranks.values())) != 1:
        raise GenericityError(f"ranks {ranks} disagree at the sample points")
    return next(iter(ranks.values()))


def young_decomposition(H: HeckeSymmetry, k: int, points=DEFAULT_POINTS) -> dict:
    """{lambda: (d_lambda, dim V_lambda)} with rank-independence and dimension count checked."""
    out = {}
    total = 0
    for lam in partitions(k):
        tabs = standard_tableaux(lam)
        ranks = [idempotent_rank(H, t, points) for t in tabs]
        if len(set(ranks)) != 1:
            raise AssertionError(f"rank of E^{lam}_a depends on a: {ranks}")
        out[lam] = (len(tabs), ranks[0])
        total += len(tabs) * ranks[0]
    if total != H.N ** k:
        raise AssertionError(f"sum d_lambda dim V_lambda = {total} != N^k = {H.N ** k}")
    return out


def completeness_check(H: HeckeSymmetry, k: int, symbolic: bool = True, points=DEFAULT_POINTS) -> CheckReport:
    """Sum of all E^lambda_a is I, they are orthogonal idempotents commuting with J_p."""
    rep = CheckReport(f"idempotent completeness {H.name}, k={k}")
    imgs = [_image(H, k)] if symbolic else [_image(H, k, p) for p in (points if not H.involutive else (1,))]
    for img in imgs:
        tag = "" if img.point is None else f" at q={img.point}"
        tabs = [t for lam in partitions(k) for t in standard_tableaux(lam)]
        Es = [img.idempotent(t) for t in tabs]
        total = Es[0]
        for E in Es[1:]:
            total = total + E
        rep.add("sum E = I" + tag, total == img.eye())
        ok = True
        wit = None
        for a, Ea in enumerate(Es):
            for b, Eb in enumerate(Es):
                prod_ = Ea @ Eb
                good = (prod_ == Ea) if a == b else prod_.is_zero()
                if not good and ok:
                    ok, wit = False, (str(tabs[a]), str(tabs[b]))
        rep.add("E_a E_b = delta_ab E_a" + tag, ok, wit)
        ok = True
        wit = None
        for t, E in zip(tabs, Es):
            js = content_vector(t, H.q)
            for p in range(1, k + 1):
                J = img.jm(p)
                lhs = J @ E
                if lhs != E @ J or lhs != E * img.scalar(js[p - 1]):
                    if ok:
                        ok, wit = False, (str(t), p)
        rep.add("J_p E = E J_p = j_p E" + tag, ok, wit)
    return rep


# -- weighted-trace recursion ------------------------------------------------------------

def _weighted_last_trace(H: HeckeSymmetry, X: QMatrix, p: int) -> QMatrix:
    """tr_(p)(X) = Tr_(p)((I (x) C) X) on V^{(x)p}."""
    C_last = kron(QMatrix.eye(H.N ** (p - 1)), H.C).with_legs((H.N,) * p, (H.N,) * p)
    return partial_trace(C_last @ X.with_legs((H.N,) * p, (H.N,) * p), [p])


def alpha_beta(t: StandardTableau, m: int, n: int, q: QScalar = Q) -> tuple:
    """alpha and beta of the linear equation alpha*tr(I) + beta = 0."""
    om = q - q.inverse()
    js = content_vector(t, q)
    s1 = sum(js, ZERO)
    s2 = sum((j * j for j in js), ZERO)
    a = ONE + q ** (2 * (n - m)) - q ** (2 * (n + 1)) - q ** (-2 * (m + 1)) + om * om * s1
    half = QScalar(1) / 2
    b = om * (2 + om * om * half) * s2 + om ** 3 * half * s1 * s1 - om * (q ** (2 * (n + 1)) + q ** (-2 * (m + 1))) * s1
    return a, b


def trace_recursion_check(H: HeckeSymmetry, t: StandardTableau, p: int | None = None) -> CheckReport:
    """Verify the weighted-trace identities for tr_(p)(J_p) and tr_(p)(J_p^2).

    ``t`` is a standard tableau with p - 1 boxes.  When its shape is
    lambda^-_{m,n} for the bi-rank of H, alpha and beta are recomputed and
    Tr C is recovered as -beta/alpha.
    """
    k = t.k
    p = k + 1 if p is None else p
    if p != k + 1:
        raise ValueError("p must equal |t| + 1")
    rep = CheckReport(f"trace recursion for {H.name}, tableau {t}")
    q = H.q
    om = H.omega
    img = _image(H, p)
    E_small = _image(H, k).idempotent(t)
    js = content_vector(t, q)
    trC = H.trace_C
    Jp = img.jm(p)
    t1 = _weighted_last_trace(H, Jp, p)
    s1 = sum(js, ZERO)
    rhs1 = om * s1 + trC
    lhs = E_small @ t1.with_legs(None, None)
    rep.add("E tr_(p)(J_p) = E (omega sum j + Tr C)", lhs == E_small * rhs1, lhs.first_difference(E_small * rhs1))
    t2 = _weighted_last_trace(H, Jp @ Jp, p)
    s2 = sum((j * j for j in js), ZERO)
    nested = ZERO
    running = ZERO
    for j in js:
        running = running + j
        nested = nested + j * running
    rhs2 = 2 * om * s2 + om ** 3 * nested + (ONE + om * om * s1) * trC
    lhs = E_small @ t2.with_legs(None, None)
    rep.add("E tr_(p)(J_p^2) = E (2 omega sum j^2 + omega^3 sum j_k sum j_s + (1 + omega^2 sum j) Tr C)",
            lhs == E_small * rhs2, lhs.first_difference(E_small * rhs2))
    rep.add("nested sum identity", nested * 2 == s2 + s1 * s1)
    if H.birank is not None and t.shape == lambda_mn_minus(*H.birank):
        m, n = H.birank
        # contents do not depend on H, so alpha and beta are derived at symbolic q
        a, b = alpha_beta(t, m, n, Q)
        om_s = Q - Q.inverse()
        a_exp = -(om_s * om_s) * Q ** (2 * (n - m))
        b_exp = om_s * om_s * Q ** (3 * (n - m)) * qnum(m - n)
        s1_sym = sum(content_vector(t, Q), ZERO)
        s1_exp = Q ** (n - m) * qnum(n + 1) * qnum(m + 1) - Q ** (2 * (n - m))
        rep.add("content sum = q^(n-m)(n+1)_q(m+1)_q - q^(2(n-m))", s1_sym == s1_exp, (str(s1_sym), str(s1_exp)))
        rep.add("alpha = -omega^2 q^(2(n-m))", a == a_exp, (str(a), str(a_exp)))
        rep.add("beta = omega^2 q^(3(n-m)) (m-n)_q", b == b_exp, (str(b), str(b_exp)))
        recovered = -b / a
        if H.involutive:
            value = QScalar(recovered.eval_at(1))
        else:
            value = recovered
        rep.values["alpha"] = a
        rep.values["recovered_trC"] = value
        rep.add("Tr C = -beta/alpha", value == trC, (str(value), str(trC)))
        # the full identity (tr-id): E tr_(p)(J^2 - (q^(2(n+1)) + q^(-2(m+1))) J + q^(2(n-m))) = 0
        X = Jp @ Jp - Jp * (q ** (2 * (n + 1)) + q ** (-2 * (m + 1))) + img.eye() * q ** (2 * (n - m))
        lhs = E_small @ _weighted_last_trace(H, X, p).with_legs(None, None)
        rep.add("tr-id: E tr_(p)(quadratic in J_p) = 0", lhs.is_zero())
    return rep


# -- caps, kernel criterion, Littlewood-Richardson ----------------------------------------

USER_CAP = 5


class CapExceededError(ValueError):
    pass


def default_cap(H: HeckeSymmetry) -> int:
    """(m+1)(n+1)+1 when the bi-rank is known, otherwise 5."""
    if H.birank is None:
        return USER_CAP
    m, n = H.birank
    return (m + 1) * (n + 1) + 1


def check_cap(H: HeckeSymmetry, k: int, cap: int | None = None) -> None:
    cap = default_cap(H) if cap is None else cap
    if k > cap:
        raise CapExceededError(f"k = {k} exceeds the cap {cap} for {H.name}")


def kernel_criterion_check(H: HeckeSymmetry, kmax: int | None = None, points=DEFAULT_POINTS) -> CheckReport:
    """rank(E^nu_a) = 0 exactly when lambda_{m,n} fits inside nu, for all nu with |nu| <= kmax."""
    if H.birank is None:
        raise ValueError("kernel criterion needs a known bi-rank")
    m, n = H.birank
    lam = lambda_mn(m, n)
    kmax = default_cap(H) if kmax is None else kmax
    rep = CheckReport(f"kernel criterion {H.name}, k <= {kmax}")
    for k in range(1, kmax + 1):
        for nu in partitions(k):
            for t in standard_tableaux(nu):
                r = idempotent_rank(H, t, points)
                rep.add(f"nu={nu} t=[{t}]: rank {r}", (r == 0) == contains(lam, nu), (nu, r))
    return rep


def _lr_words(skew_outer, skew_inner, weight):
    """Count LR fillings of outer/inner with content ``weight``."""
    rows = []
    for r, top in enumerate(skew_outer):
        lo = skew_inner[r] if r < len(skew_inner) else 0
        rows.append((lo, top))
    filling = [dict() for _ in rows]
    cells = [(r, c) for r in range(len(rows)) for c in range(rows[r][1] - 1, rows[r][0] - 1, -1)]
    # reading order: rows top to bottom, each right to left
    count = 0
    used = [0] * len(weight)

    def ok_cell(r, c, v):
        if c + 1 < rows[r][1] and filling[r].get(c + 1, 10 ** 9) < v:
            return False
        if r > 0 and rows[r - 1][0] <= c < rows[r - 1][1] and filling[r - 1][c] >= v:
            return False
        return True

    def rec(i):
        nonlocal count
        if i == len(cells):
            count += 1
            return
        r, c = cells[i]
        for v in range(len(weight)):
            if used[v] >= weight[v]:
                continue
            if v > 0 and used[v] + 1 > used[v - 1]:
                continue  # lattice word condition
            if not ok_cell(r, c, v):
                continue
            filling[r][c] = v
            used[v] += 1
            rec(i + 1)
            used[v] -= 1
            del filling[r][c]

    rec(0)
    return count


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """c^nu_{lam mu}: number of LR tableaux of skew shape nu/lam and content mu."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(nu) != sum(lam) + sum(mu) or not contains(lam, nu):
        return 0
    if not mu:
        return 1 if lam == nu else 0
    return _lr_words(nu, lam, mu)


def lr_consistency_check(H: HeckeSymmetry, max_weight: int = 4, points=DEFAULT_POINTS) -> CheckReport:
    """dim V_lam * dim V_mu = sum_nu c^nu_{lam mu} dim V_nu for |lam| + |mu| <= max_weight."""
    rep = CheckReport(f"Littlewood-Richardson consistency {H.name}")
    dims = {(): 1}
    for k in range(1, max_weight + 1):
        for lam, (_, d) in young_decomposition(H, k, points).items():
            dims[lam] = d
    for a in range(1, max_weight):
        for b in range(1, max_weight - a + 1):
            for lam in partitions(a):
                for mu in partitions(b):
                    rhs = sum(lr_coefficient(lam, mu, nu) * dims[nu] for nu in partitions(a + b))
                    lhs = dims[lam] * dims[mu]
                    rep.add(f"{lam} x {mu}", lhs == rhs, (lhs, rhs))
    return rep
