"""Hilbert-Poincare series of the q-exterior and q-symmetric algebras.

``P_-(t) = sum_k dim Lambda^k_-(V) t^k`` is fitted exactly by a rational
function ``N(t)/D(t)``.  Its coefficients feed the super-symmetric Schur
functions, so the roots of N and D never have to be computed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from flint import fmpz_mat, fmpz_poly

from .hecke import HeckeSymmetry
from .heckealg import (
    StandardTableau,
    check_cap,
    conjugate,
    default_cap,
    idempotent_rank,
    partitions,
    standard_tableaux,
)
from .linalg import DEFAULT_POINTS
from .report import CheckReport

__all__ = [
    "HPSeries",
    "HPFitError",
    "exterior_dims",
    "fit_series",
    "hp_series",
    "super_schur",
    "hook_test",
    "dimension_crosscheck",
    "series_product",
    "conjugate_duality",
]


class HPFitError(ValueError):
    pass


def _row(k: int) -> StandardTableau:
    return StandardTableau((tuple(range(1, k + 1)),))


def _column(k: int) -> StandardTableau:
    return StandardTableau(tuple((i,) for i in range(1, k + 1)))


def exterior_dims(H: HeckeSymmetry, K: int, cap: int | None = None, points=DEFAULT_POINTS) -> tuple:
    """(dims of Lambda^k_-, dims of Lambda^k_+) for k = 0..K from projector ranks."""
    check_cap(H, K, cap)
    minus, plus = [1], [1]
    for k in range(1, K + 1):
        minus.append(idempotent_rank(H, _column(k), points))
        plus.append(idempotent_rank(H, _row(k), points))
    return tuple(minus), tuple(plus)


def series_product(a: Sequence, b: Sequence, K: int) -> list:
    return [sum(a[i] * b[k - i] for i in range(k + 1) if i < len(a) and k - i < len(b)) for k in range(K + 1)]


def _solve(A: list, rhs: list):
    """Exact Gauss-Jordan; returns None if singular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(A, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[r][n] for r in range(n)]


@dataclass
class HPSeries:
    dims_minus: tuple
    numerator: tuple
    denominator: tuple
    dims_plus: tuple = field(default=())

    @property
    def birank(self) -> tuple:
        return (len(self.numerator) - 1, len(self.denominator) - 1)

    @property
    def a(self) -> tuple:
        """Coefficients a_0 = 1, a_1, ... of N(t)."""
        return self.numerator

    @property
    def b(self) -> tuple:
        """b_0 = 1, b_1, ... with D(t) = sum (-1)^k b_k t^k."""
        return tuple((-1) ** k * d for k, d in enumerate(self.denominator))

    def expand(self, K: int) -> list:
        """Taylor coefficients of N/D up to t^K."""
        D = self.denominator
        out = []
        for k in range(K + 1):
            v = Fraction(self.numerator[k] if k < len(self.numerator) else 0)
            for j in range(1, min(k, len(D) - 1) + 1):
                v -= D[j] * out[k - j]
            out.append(v)
        return [int(x) for x in out]

    def expand_plus(self, K: int) -> list:
        """Coefficients of 1/P_-(-t) = D(-t)/N(-t)."""
        num = [(-1) ** k * d for k, d in enumerate(self.denominator)]
        den = [(-1) ** k * a for k, a in enumerate(self.numerator)]
        out = []
        for k in range(K + 1):
            v = Fraction(num[k] if k < len(num) else 0)
            for j in range(1, min(k, len(den) - 1) + 1):
                v -= den[j] * out[k - j]
            out.append(v)
        return [int(x) for x in out]

    def to_json(self) -> dict:
        return {
            "dims_minus": list(self.dims_minus),
            "dims_plus": list(self.dims_plus),
            "numerator": list(self.numerator),
            "denominator": list(self.denominator),
            "birank": list(self.birank),
        }


def _is_palindrome(c: Sequence) -> bool:
    return list(c) == list(reversed(c))


def fit_series(dims_minus: Sequence[int], min_checks: int = 2) -> HPSeries:
    """Minimal N/D with D(0) = 1 reproducing the sequence, with surplus checks."""
    P = [int(x) for x in dims_minus]
    if not P or P[0] != 1:
        raise HPFitError("not a skew-invertible Hecke HP series: dim Lambda^0 must be 1")
    K = len(P) - 1
    for s in range(0, K - min_checks + 1):
        for b in range(0, s + 1):
            a = s - b
            # equations t^{a+1} .. t^{a+b}: sum_{j=0}^{b} D_j P_{i-j} = 0, D_0 = 1
            A = [[P[i - j] if i - j >= 0 else 0 for j in range(1, b + 1)] for i in range(a + 1, a + b + 1)]
            rhs = [-P[i] for i in range(a + 1, a + b + 1)]
            sol = _solve(A, rhs) if b else []
            if sol is None:
                continue
            D = [Fraction(1)] + sol
            if b and D[b] == 0:
                continue
            N = [sum(D[j] * P[i - j] for j in range(0, min(i, b) + 1)) for i in range(a + 1)]
            if a and N[a] == 0:
                continue
            good = all(
                sum(D[j] * P[i - j] for j in range(0, min(i, b) + 1)) == 0 for i in range(a + 1, K + 1)
            )
            if not good:
                continue
            return _validate(P, N, D)
    raise HPFitError(f"recurrence not stabilized within K = {K}: increase K")


def _validate(P, N, D) -> HPSeries:
    if any(x.denominator != 1 for x in N + D):
        raise HPFitError("not a skew-invertible Hecke HP series: non-integer coefficients")
    N = tuple(int(x) for x in N)
    D = tuple(int(x) for x in D)
    if any(x <= 0 for x in N):
        raise HPFitError("not a skew-invertible Hecke HP series: numerator coefficients must be positive")
    bs = [(-1) ** k * d for k, d in enumerate(D)]
    if any(x <= 0 for x in bs):
        raise HPFitError("not a skew-invertible Hecke HP series: denominator must be 1 - b1 t + b2 t^2 - ... with b_i > 0")
    if not _is_palindrome(N) or not _is_palindrome(bs):
        raise HPFitError("not a skew-invertible Hecke HP series: N(t) and D(-t) must be reciprocal")
    g = fmpz_poly(list(N)).gcd(fmpz_poly(list(D)))
    if g.degree() > 0:
        raise HPFitError("not a skew-invertible Hecke HP series: N and D share a factor")
    return HPSeries(tuple(P), N, D)


def hp_series(H: HeckeSymmetry, max_k: int | None = None, points=DEFAULT_POINTS) -> HPSeries:
    """Compute dims up to max_k (default: the cap), fit, and cross-check P_+(t) P_-(-t) = 1."""
    K = default_cap(H) if max_k is None else max_k
    minus, plus = exterior_dims(H, K, cap=max(K, default_cap(H)), points=points)
    s = fit_series(minus)
    s.dims_plus = plus
    if s.expand_plus(K) != list(plus):
        raise HPFitError("P_+(t) P_-(-t) != 1 to the computed order")
    return s


def hook_test(lam: Sequence[int], m: int, n: int) -> bool:
    """lam is in the (m, n) hook, i.e. lam_{m+1} <= n."""
    lam = tuple(lam)
    return len(lam) <= m or lam[m] <= n


def _wronski(e: Sequence[int], K: int) -> list:
    """h_0..h_K from e via sum_i (-1)^i e_i h_{k-i} = delta_{k0}."""
    h = [1]
    for k in range(1, K + 1):
        h.append(sum((-1) ** (i + 1) * (e[i] if i < len(e) else 0) * h[k - i] for i in range(1, k + 1)))
    return h


def super_schur(lam: Sequence[int], numerator: Sequence[int], denominator: Sequence[int]) -> int:
    """s_lam(x|y) with e_k(x) = a_k from N and e_k(y) = b_k from D."""
    lam = tuple(lam)
    if not lam:
        return 1
    K = lam[0] + len(lam)
    ex = list(numerator)
    ey = [(-1) ** k * d for k, d in enumerate(denominator)]
    hx = _wronski(ex, K)

    def s_row(k):
        if k < 0:
            return 0
        return sum(hx[i] * (ey[k - i] if k - i < len(ey) else 0) for i in range(k + 1))

    L = len(lam)
    M = fmpz_mat(L, L, [s_row(lam[i] - i + j) for i in range(L) for j in range(L)])
    return int(M.det())


def dimension_crosscheck(H: HeckeSymmetry, lam: Sequence[int], series: HPSeries | None = None,
                         points=DEFAULT_POINTS) -> CheckReport:
    lam = tuple(lam)
    series = hp_series(H) if series is None else series
    rep = CheckReport(f"dimension cross-check {H.name} {lam}")
    check_cap(H, sum(lam), max(default_cap(H), sum(lam)) if H.birank is not None else None)
    t = standard_tableaux(lam)[0]
    rank = idempotent_rank(H, t, points)
    s = super_schur(lam, series.numerator, series.denominator)
    rep.values.update({"rank": rank, "super_schur": s})
    rep.add(f"rank E^{lam} = s_lam(x|y)", rank == s, (rank, s))
    return rep


def conjugate_duality(numerator, denominator, max_weight: int = 4) -> bool:
    """s_lam for (N, D) equals s_{lam*} for the flipped series (D(-t), N(-t))."""
    fn = [(-1) ** k * d for k, d in enumerate(denominator)]
    fd = [(-1) ** k * a for k, a in enumerate(numerator)]
    return all(
        super_schur(lam, numerator, denominator) == super_schur(conjugate(lam), fn, fd)
        for k in range(1, max_weight + 1)
        for lam in partitions(k)
    )
