"""Configuration and the batch verification driver.

``run_suite`` executes every acceptance criterion that applies to one
configured symmetry and assembles a single report.  Criteria are
independent and pure, so they may run in worker processes; the report is
always assembled in criterion order, which keeps its JSON byte-stable.
"""
from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import hecke, heckealg, hpseries, poisson, rea, reps, swcat
from .hecke import HeckeSymmetry
from .linalg import DEFAULT_POINTS, QMatrix
from .report import FAIL, Check, CheckReport
from .scalar import ONE, Q, ZERO, ParseError, qbinom, to_fraction

__all__ = [
    "ConfigError",
    "Config",
    "CRITERIA",
    "build_symmetry",
    "parse_points",
    "run_criterion",
    "run_suite",
    "export",
    "canonical_json",
]


class ConfigError(ValueError):
    """Invalid configuration (a usage error, distinct from a mathematical failure)."""


def parse_points(text: str) -> tuple:
    try:
        pts = tuple(Fraction(s.strip()) for s in text.split(",") if s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad sample points {text!r}: {exc}") from exc
    return pts


@dataclass(frozen=True)
class Config:
    """What to check and under which caps.

    ``symmetry`` is ``("standard", m)``, ``("superflip", m, n)`` or
    ``("file", path)``.
    """

    symmetry: tuple
    max_k: Optional[int] = None
    max_dim: int = 1024
    points: tuple = DEFAULT_POINTS
    output: Optional[str] = None
    jobs: int = 1

    def __post_init__(self):
        if self.max_k is not None and self.max_k <= 0:
            raise ConfigError("max_k must be positive")
        if self.max_dim <= 0:
            raise ConfigError("max_dim must be positive")
        if self.jobs <= 0:
            raise ConfigError("jobs must be positive")
        pts = tuple(to_fraction(p) for p in self.points)
        if len(set(pts)) < 2:
            raise ConfigError("need at least 2 distinct sample points")
        if any(p in (0, 1, -1) for p in pts):
            raise ConfigError("sample points must avoid 0 and +-1")
        object.__setattr__(self, "points", pts)
        kind = self.symmetry[0] if self.symmetry else None
        if kind not in ("standard", "superflip", "file"):
            raise ConfigError(f"unknown symmetry {self.symmetry!r}")


def build_symmetry(spec: tuple) -> HeckeSymmetry:
    """Construct a built-in symmetry or load and certify one from JSON.

    For a loaded matrix the bi-rank is recovered from the fitted HP series
    when that fit succeeds within the default cap.
    """
    kind = spec[0]
    if kind == "standard":
        return hecke.standard_R(int(spec[1]))
    if kind == "superflip":
        return hecke.super_flip(int(spec[1]), int(spec[2]))
    try:
        H = hecke.load_R(spec[1])
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {spec[1]}: {exc}") from exc
    try:
        s = hpseries.hp_series(H, heckealg.USER_CAP)
        H = H.with_birank(*s.birank)
    except (hpseries.HPFitError, heckealg.CapExceededError):
        pass
    return H


# -- helpers -------------------------------------------------------------------------

def _guard(rep: CheckReport, name: str, fn: Callable):
    """Run ``fn``; an exception becomes a failed check carrying its message."""
    try:
        return fn()
    except Exception as exc:  # every failure must surface as a witness
        rep.add(name, False, f"{type(exc).__name__}: {exc}")
        return None


def _words(k: int) -> list:
    return [w for w in itertools.product(("V", "V*"), repeat=k)]


def _need_birank(H: HeckeSymmetry, rep: CheckReport, name: str) -> bool:
    if H.birank is None:
        rep.skip(name, "bi-rank unknown")
        return False
    return True


# -- criteria ------------------------------------------------------------------------

def c1_certification(H, cfg) -> CheckReport:
    rep = CheckReport("Hecke certification")
    N = H.N
    rep.add("braid relation R12 R23 R12 = R23 R12 R23", hecke._braid_check(H.R, N) is None)
    rep.add("Hecke condition (R - q)(R + q^-1) = 0", hecke._hecke_check(H.R, N, H.q) is None)
    skew = hecke.verify_skew_identities(H)
    for c in skew.checks:
        if c.name.startswith("psi"):
            rep.checks.append(c)
    return rep


def _subset(H, prefixes, title) -> CheckReport:
    skew = hecke.verify_skew_identities(H)
    rep = CheckReport(title)
    rep.checks = [c for c in skew.checks if c.name.startswith(prefixes)]
    rep.values = {k: v for k, v in skew.values.items()}
    return rep


def c2_traces(H, cfg) -> CheckReport:
    rep = _subset(H, ("Tr B", "Tr C"), "Tr B = Tr C = q^(n-m) (m-n)_q")
    if H.birank is not None:
        m, n = H.birank
        if H.involutive:
            rep.add("involutive: Tr B = m - n", H.trace_B == ONE * (m - n), str(H.trace_B))
    return rep


def c3_bc(H, cfg) -> CheckReport:
    rep = _subset(H, ("BC", "nu"), "B C = C B = q^(2(n-m)) I")
    rep.values = {"nu": H.nu}
    return rep


def c4_identities(H, cfg) -> CheckReport:
    return _subset(H, ("hecke inversion", "R-trace of R", "B, C commute", "Psi vs B, C", "R-conjugation trace", "Tr_(12)"), "operator identity suite")


def c5_hp_series(H, cfg) -> CheckReport:
    rep = CheckReport("HP series")
    K = 6 if cfg.max_k is None else cfg.max_k
    s = _guard(rep, "fit HP series", lambda: hpseries.hp_series(H, K, cfg.points))
    if s is None:
        return rep
    rep.values.update(s.to_json())
    rep.add(f"P_+(t) P_-(-t) = 1 through t^{K}", s.expand_plus(K) == list(s.dims_plus))
    rep.add("N/D reproduces dims of Lambda_-", s.expand(K) == list(s.dims_minus))
    if H.birank is not None:
        rep.add(f"bi-rank = {H.birank}", s.birank == tuple(H.birank), s.birank)
    return rep


def c6_dimensions(H, cfg) -> CheckReport:
    rep = CheckReport("ranks of idempotents")
    if not _need_birank(H, rep, "rank = super Schur"):
        return rep
    m, n = H.birank
    s = _guard(rep, "fit HP series", lambda: hpseries.hp_series(H, points=cfg.points))
    if s is None:
        return rep
    for k in range(1, 5):
        for lam in heckealg.partitions(k):
            r = heckealg.idempotent_rank(H, heckealg.standard_tableaux(lam)[0], cfg.points)
            ss = hpseries.super_schur(lam, s.numerator, s.denominator)
            rep.add(f"rank E^{lam} = s_lam(x|y) = {ss}", r == ss, (r, ss))
            rep.add(f"rank E^{lam} = 0 iff off the hook", (r == 0) == (not hpseries.hook_test(lam, m, n)), r)
    if (m, n) in ((1, 1), (2, 0)):
        top = (m + 1) * (n + 1)
        for k in range(2, top + 1):
            rep.extend(heckealg.completeness_check(H, k, symbolic=H.N ** k <= 27, points=cfg.points), f"(i) k={k}: ")
        E = heckealg.idempotent_image(H, heckealg.standard_tableaux(heckealg.lambda_mn(m, n))[0]).matrix
        rep.add(f"(ii) E^{heckealg.lambda_mn(m, n)} = 0", E.is_zero())
        rep.extend(heckealg.kernel_criterion_check(H, top + 1, cfg.points), "(iii) ")
    else:
        rep.skip("exhaustive idempotent properties", "exhaustive run is for (1|1) and (2|0)")
    return rep


def c7_recursion(H, cfg) -> CheckReport:
    rep = CheckReport("weighted-trace recursion")
    if not _need_birank(H, rep, "trace recursion"):
        return rep
    lam = heckealg.lambda_mn_minus(*H.birank)
    if not lam:
        rep.skip("trace recursion", "lambda^- is empty")
        return rep
    for t in heckealg.standard_tableaux(lam):
        r = heckealg.trace_recursion_check(H, t)
        rep.extend(r, f"[{t}] ")
        rep.values.update({f"{k} [{t}]": v for k, v in r.values.items()})
    return rep


def c8_category(H, cfg) -> CheckReport:
    return swcat.category_check(H)


def c9_qdims(H, cfg) -> CheckReport:
    rep = CheckReport("R-dimensions and Q_-")
    if not _need_birank(H, rep, "R-dimensions"):
        return rep
    m, n = H.birank
    for k in range(1, 4):
        for lam in heckealg.partitions(k):
            d = _guard(rep, f"dim_R V_{lam} is independent of the tableau",
                       lambda lam=lam: swcat.r_dimension(H, lam))
            if d is None:
                continue
            rep.add(f"dim_R V_{lam} is independent of the tableau", True)
            rep.values[f"dim_R {lam}"] = d
            if (m, n) == (1, 1):
                rep.add(f"dim_R V_{lam} = 0 at (1|1)", not d, str(d))
    K = 3
    got = swcat.q_minus_coefficients(H, K)
    if m >= n:
        want = swcat.q_minus_expected(m, n, K, H.q)
        rep.add("Q_- coefficients = q^(k(m-n)) binom(m-n, k)_q", got == want,
                [(str(a), str(b)) for a, b in zip(got, want) if a != b][:1])
    if n == 0:
        lit = [qbinom(m, k, H.q) if k <= m else ZERO for k in range(K + 1)]
        bad = [(k, str(a), str(b)) for k, (a, b) in enumerate(zip(got, lit)) if a != b]
        rep.add("Q_- coefficients = binom(m, k)_q (as stated)", not bad, bad[:1])
    rep.values["Q_-"] = got
    return rep


def c10_projectors(H, cfg) -> CheckReport:
    rep = CheckReport("projector calculus")
    if H.N > 3:
        rep.skip("projector calculus", "N > 3")
        return rep
    rs = _guard(rep, "build REA projectors", lambda: rea.build_rea(H))
    if rs is not None:
        rep.extend(rs.report)
    rep.extend(rea.ideal_span_check(H, cfg.points))
    return rep


def c11_component_dims(H, cfg) -> CheckReport:
    rep = CheckReport("component dimensions")
    if not _need_birank(H, rep, "component dimensions"):
        return rep
    for k in (2, 3):
        gen, cl = rea.component_dims(H, k, cfg.points)
        want = rea.classical_symmetric_dim(*H.birank, k)
        rep.values[f"rank S{k}"] = [gen, cl]
        rep.add(f"rank of the degree-{k} projector: generic {gen} = q=1 {cl}", gen == cl, (gen, cl))
        rep.add(f"rank of the degree-{k} projector = classical count {want}", gen == want, (gen, want))
    return rep


def _basic_reps(H):
    return {"V": reps.rho_basic(H, verify=False), "V*": reps.rho_dual(H, verify=False)}


def _tensor(base: dict, word: tuple):
    out = base[word[0]]
    for w in word[1:]:
        out = reps.rho_tensor(out, base[w], verify=False)
    return out


def c12_representations(H, cfg) -> CheckReport:
    rep = CheckReport("representation suite")
    base = _basic_reps(H)
    for w, rho in base.items():
        rep.extend(rho.verify(), f"{w}: ")
        rep.extend(reps.mform_check(rho), f"{w}: ")
        rep.extend(reps.relation_vectors_check(rho), f"{w}: ")
    for k in (2, 3):
        for word in _words(k):
            rho = _tensor(base, word)
            tag = swcat._word_str(word)
            rep.extend(rho.relations(), f"{tag}: ")
            rep.extend(rho.equivariance(), f"{tag}: ")
            if k == 2 and word == ("V", "V"):
                want = reps.rho2_formula(H)
                rep.add("rho_2 = rho_1 (x) I + R^-1 (rho_1 (x) I) R^-1",
                        all(rho.images[ij] == M for ij, M in want.items()))
    m_n = H.birank
    for k in (2, 3):
        for letter in ("V", "V*"):
            rho = _tensor(base, (letter,) * k)
            for lam in heckealg.partitions(k):
                # V*^k decomposes under the dual symmetry, whose hook is the same
                on_hook = m_n is None or hpseries.hook_test(lam, *m_n)
                for a in range(1, len(heckealg.standard_tableaux(lam)) + 1):
                    tag = f"{letter}^{k} {lam},{a}"
                    try:
                        sub = reps.restrict(rho, lam, a, verify=False)
                    except ValueError as exc:
                        if "outside hook" not in str(exc):
                            rep.add(f"{tag}: restriction", False, str(exc))
                        elif m_n is not None:
                            rep.add(f"{tag}: zero exactly off the hook", not on_hook)
                        continue
                    if m_n is not None:
                        rep.add(f"{tag}: nonzero exactly on the hook", on_hook)
                    rep.extend(sub.verify(), f"{tag}: ")
    ad = reps.adjoint_rep(H, verify=False)
    rep.extend(ad.verify(), "adjoint: ")
    rep.extend(reps.adjoint_formula_check(H, ad))
    rep.extend(reps.braided_lie_checks(H, ad))
    rep.extend(reps.relation_vectors_check(ad), "adjoint: ")
    rep.extend(reps.mform_check(ad), "adjoint: ")
    rep.extend(reps.relation_invariance_check(H, cfg.points))
    if H.birank is not None and (H.birank[1] == 0 or H.involutive):
        rep.extend(reps.classical_adjoint_check(H, *H.birank, rho=ad))
    else:
        rep.skip("classical adjoint limit", "no gl(m|n) oracle for this symmetry")
    return rep


def c13_bialgebra(H, cfg) -> CheckReport:
    rep = reps.coproduct_checks(H)
    base = _basic_reps(H)
    for word in _words(3):
        a, b, c = (base[w] for w in word)
        left = reps.rho_tensor(reps.rho_tensor(a, b, verify=False), c, verify=False)
        right = reps.rho_tensor(a, reps.rho_tensor(b, c, verify=False), verify=False)
        bad = [ij for ij in left.images if left.images[ij] != right.images[ij]]
        rep.add(f"rho_(UW)X = rho_U(WX) on {swcat._word_str(word)}", not bad, bad[:1])
    return rep


def c14_sl_reduction(H, cfg) -> CheckReport:
    rep = CheckReport("sl-reduction")
    if not H.trace_C:
        rep.skip("sl-reduction", "m=n: Tr C = 0, no sl-reduction")
        return rep
    base = _basic_reps(H)
    produced = dict(base)
    if H.birank is not None:
        for k in (2, 3):
            rho = _tensor(base, ("V",) * k)
            for lam in heckealg.partitions(k):
                if hpseries.hook_test(lam, *H.birank):
                    produced[f"V^{k} {lam}"] = reps.restrict(rho, lam, 1, verify=False)
    ad = reps.adjoint_rep(H, verify=False)
    produced["adjoint"] = ad
    produced["traceless adjoint"] = reps.traceless_adjoint(H, ad)
    for tag, rho in produced.items():
        rep.extend(rho.centrality(), f"{tag}: ")
        if tag == "adjoint":
            continue  # rho(ell) is not scalar on the reducible adjoint module
        red = _guard(rep, f"{tag}: sl-reduction", lambda rho=rho: reps.sl_reduce(H, rho))
        if red is not None:
            rep.add(f"{tag}: reduced relations and Tr_R F = 0", True)
            rep.values[f"{tag}: chi, xi"] = [red.chi, red.xi]
    rep.extend(reps.sl_adjoint_check(H, ad))
    if H.omega:
        ref = reps.sl_reduce(H, base["V"])
        for z in (ONE, Q, ONE * 2):
            red = reps.sl_reduce(H, reps.z_family(base["V"], z))
            rep.add(f"z = {z}: reduces to the same sl representation", red.images == ref.images)
    else:
        rep.skip("z-family", "omega = 0: the automorphism family needs q != 1")
    if H.N == 2:
        rep.extend(reps.sl2_presentation(H))
    else:
        rep.skip("sl(2) presentation", "N != 2")
    return rep


def c15_poisson(H, cfg) -> CheckReport:
    rep = CheckReport("Poisson suite")
    if not H.name.startswith("standard(") or H.N not in (2, 3):
        rep.skip("Poisson suite", "the classical limit is computed for the standard family, m = 2, 3")
        return rep
    m = H.N
    rep.extend(poisson.cybe_check(m))
    rep.extend(poisson.r_expansion_check(m))
    rep.extend(poisson.pencil_report(m))
    rep.extend(poisson.cocycle_check(m))
    if m == 2:
        rep.extend(poisson.sl2_tables())
        rep.extend(poisson.su2_tables())
    return rep


CRITERIA = {
    1: ("Hecke certification", c1_certification),
    2: ("traces of B and C", c2_traces),
    3: ("B C = nu I", c3_bc),
    4: ("operator identity suite", c4_identities),
    5: ("HP series", c5_hp_series),
    6: ("idempotent ranks", c6_dimensions),
    7: ("trace recursion", c7_recursion),
    8: ("Schur-Weyl category", c8_category),
    9: ("R-dimensions", c9_qdims),
    10: ("projector calculus", c10_projectors),
    11: ("component dimensions", c11_component_dims),
    12: ("representations", c12_representations),
    13: ("braided bialgebra", c13_bialgebra),
    14: ("sl-reduction", c14_sl_reduction),
    15: ("Poisson suite", c15_poisson),
}


def run_criterion(num: int, cfg: Config, H: HeckeSymmetry | None = None) -> CheckReport:
    H = build_symmetry(cfg.symmetry) if H is None else H
    title, fn = CRITERIA[num]
    rep = CheckReport(f"{num}. {title}")
    out = _guard(rep, "run", lambda: fn(H, cfg))
    if out is not None:
        rep.checks = out.checks
        rep.values = out.values
    return rep


def _worker(args):
    num, cfg = args
    t0 = time.perf_counter()
    rep = run_criterion(num, cfg)
    return rep, time.perf_counter() - t0


def run_suite(cfg: Config, only=None, timings: dict | None = None) -> CheckReport:
    """All applicable criteria for ``cfg``; the report is in criterion order."""
    nums = sorted(CRITERIA if only is None else only)
    H = build_symmetry(cfg.symmetry)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            results = list(ex.map(_worker, [(k, cfg) for k in nums]))
    else:
        results = []
        for k in nums:
            t0 = time.perf_counter()
            results.append((run_criterion(k, cfg, H), time.perf_counter() - t0))
    out = CheckReport(f"verify-all {H.name}")
    for k, (rep, dt) in zip(nums, results):
        if timings is not None:
            timings[k] = dt
        for c in rep.checks:
            out.checks.append(Check(f"[{k}] {c.name}", c.status, c.witness, c.detail))
        if rep.values:
            out.values[str(k)] = rep.values
    out.values["summary"] = {
        str(k): ("fail" if any(c.status == FAIL for c in rep.checks) else "pass") for k, (rep, _) in zip(nums, results)
    }
    return out


# -- export ----------------------------------------------------------------------------

def canonical_json(obj) -> str:
    """Sorted keys, fixed separators, exact values as strings; byte-stable."""
    if isinstance(obj, HeckeSymmetry):
        data = obj.R.to_json()
    elif isinstance(obj, (QMatrix, hpseries.HPSeries, CheckReport)):
        data = obj.to_json()
    else:
        data = obj
    if isinstance(obj, hpseries.HPSeries):
        data = {k: data[k] for k in ("numerator", "denominator", "birank")}
    return json.dumps(data, sort_keys=True, separators=(",", ":"), default=str)


def export(obj, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(canonical_json(obj))
        fh.write("\n")
