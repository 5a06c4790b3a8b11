"""Command-line front end.

Every subcommand prints canonical JSON on stdout.  Exit codes: 0 when all
checks pass, 1 on a mathematical failure, 2 on a usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import hecke, heckealg, hpseries, poisson, rea, reps, swcat
from .hecke import CertificationError
from .report import CheckReport
from .scalar import ONE, ParseError, Q, QScalar
from .suite import CRITERIA, Config, ConfigError, build_symmetry, parse_points, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _encode(obj, q0):
    """QScalar -> exact JSON (plus its value at q0 when --eval is given)."""
    if isinstance(obj, QScalar):
        out = obj.to_json()
        if q0 is not None:
            out["at"] = {"q": str(q0), "value": str(obj.eval_at(q0))}
        return out
    if isinstance(obj, dict):
        return {str(k): _encode(v, q0) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v, q0) for v in obj]
    if isinstance(obj, CheckReport):
        return _encode(obj.to_json(), q0)
    return obj


def _symmetry_spec(args) -> tuple:
    given = [x for x in (args.symmetry, args.standard, args.superflip) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --symmetry FILE, --standard m, --superflip m n")
    if args.symmetry is not None:
        return ("file", args.symmetry)
    if args.standard is not None:
        return ("standard", args.standard)
    return ("superflip", *args.superflip)


def _config(args) -> Config:
    pts = parse_points(args.sample_points) if args.sample_points else None
    kw = {"max_k": args.max_k, "output": args.json, "jobs": getattr(args, "jobs", 1)}
    if pts is not None:
        kw["points"] = pts
    return Config(_symmetry_spec(args), **kw)


# -- subcommands -----------------------------------------------------------------------

def cmd_check_hecke(args, cfg):
    spec = cfg.symmetry
    if spec[0] != "file":
        H = build_symmetry(spec)
        return {"yb": True, "hecke": True, "skew": True, "trB": H.trace_B, "nu": H.nu}, True
    text = open(spec[1]).read()
    M = hecke.QMatrix.from_json(text)
    N = 1
    while N * N < M.nrows:
        N += 1
    if N * N != M.nrows or M.nrows != M.ncols:
        raise ParseError(f"R must be square of size N^2, got {M.nrows}x{M.ncols}")
    M = M.with_legs((N, N), (N, N))
    q = ONE if all(v.is_constant() for _, v in M.items()) else Q
    yb = hecke._braid_check(M, N) is None
    hk = hecke._hecke_check(M, N, q) is None
    out = {"yb": yb, "hecke": hk, "skew": False, "trB": None, "nu": None}
    if yb and hk:
        try:
            H = hecke.certify(M, N, q)
            out.update(skew=True, trB=H.trace_B, nu=H.nu)
        except CertificationError as exc:
            out["witness"] = str(exc)
    return out, out["yb"] and out["hecke"] and out["skew"]


def cmd_hp_series(args, cfg):
    H = build_symmetry(cfg.symmetry)
    s = hpseries.hp_series(H, cfg.max_k, cfg.points)
    return s.to_json(), True


def cmd_idempotents(args, cfg):
    H = build_symmetry(cfg.symmetry)
    dec = heckealg.young_decomposition(H, args.k, cfg.points)
    return {",".join(map(str, lam)): list(v) for lam, v in dec.items()}, True


def cmd_tableaux(args, cfg):
    return [[list(r) for r in t.rows] for t in heckealg.standard_tableaux(_ints(args.shape))], True


def cmd_rdims(args, cfg):
    H = build_symmetry(cfg.symmetry)
    return swcat.r_dimension(H, _ints(args.shape)), True


def cmd_check_category(args, cfg):
    rep = swcat.category_check(build_symmetry(cfg.symmetry))
    return rep, rep.ok


def cmd_rea_dims(args, cfg):
    H = build_symmetry(cfg.symmetry)
    gen, cl = rea.component_dims(H, args.order, cfg.points)
    return {"generic_rank": gen, "classical_rank": cl, "equal": gen == cl}, gen == cl


def cmd_rep_verify(args, cfg):
    H = build_symmetry(cfg.symmetry)
    word = tuple(w.strip() for w in args.carrier.split(","))
    if not word or any(w not in ("V", "V*") for w in word):
        raise UsageError(f"carrier must be a comma-separated word in V, V*, got {args.carrier!r}")
    base = {"V": reps.rho_basic(H, verify=False), "V*": reps.rho_dual(H, verify=False)}
    rho = base[word[0]]
    for w in word[1:]:
        rho = reps.rho_tensor(rho, base[w], verify=False)
    if args.shape:
        try:
            rho = reps.restrict(rho, _ints(args.shape), args.index, verify=False)
        except ValueError as exc:
            if "outside hook" not in str(exc):
                raise UsageError(str(exc)) from exc
            return {"relations_ok": True, "equivariant": True, "dim": 0, "rdim": QScalar(0)}, True
    rel = rho.relations().ok
    eq = rho.equivariance().ok
    return {"relations_ok": rel, "equivariant": eq, "dim": rho.dim, "rdim": rho.r_dim()}, rel and eq


def cmd_poisson_check(args, cfg):
    a, b = (Fraction(x) for x in args.pencil.split(","))
    ok, wit = poisson.pencil_jacobi(args.m, a, b)
    out = {"m": args.m, "pencil": [str(a), str(b)], "jacobi": ok, "witness": wit}
    return out, ok


def cmd_poisson_cocycle(args, cfg):
    rep = poisson.cocycle_check(args.m)
    return rep, rep.ok


def cmd_verify_all(args, cfg):
    only = _ints(args.criteria) if args.criteria else None
    if only and any(k not in CRITERIA for k in only):
        raise UsageError(f"criteria must be in 1..{len(CRITERIA)}")
    timings: dict = {}
    rep = run_suite(cfg, only, timings)
    summary = rep.values["summary"]
    for k, dt in timings.items():
        print(f"[{k}] {CRITERIA[k][0]}: {summary[str(k)]} ({dt:.2f}s)", file=sys.stderr)
    return rep, rep.ok


COMMANDS = {
    "check-hecke": cmd_check_hecke,
    "hp-series": cmd_hp_series,
    "idempotents": cmd_idempotents,
    "tableaux": cmd_tableaux,
    "rdims": cmd_rdims,
    "check-category": cmd_check_category,
    "rea-dims": cmd_rea_dims,
    "rep-verify": cmd_rep_verify,
    "poisson-check": cmd_poisson_check,
    "poisson-cocycle": cmd_poisson_cocycle,
    "verify-all": cmd_verify_all,
}
NEEDS_SYMMETRY = {"check-hecke", "hp-series", "idempotents", "rdims", "check-category", "rea-dims",
                  "rep-verify", "verify-all"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("symmetry")
    g.add_argument("--symmetry", "--input", dest="symmetry", metavar="FILE", help="R matrix as JSON")
    g.add_argument("--standard", type=int, metavar="m")
    g.add_argument("--superflip", type=int, nargs=2, metavar=("m", "n"))
    common.add_argument("--max-k", type=int)
    common.add_argument("--sample-points", metavar="3/2,5/3")
    common.add_argument("--json", metavar="OUT", help="also write canonical JSON here")
    common.add_argument("--eval", metavar="q=3/2", help="add rational evaluations of every scalar")

    p = argparse.ArgumentParser(prog="hecke-rea", description="Exact checks for Hecke symmetries and the mREA.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "idempotents":
            sp.add_argument("--k", type=int, required=True)
        elif name in ("tableaux", "rdims"):
            sp.add_argument("--shape", required=True)
        elif name == "rea-dims":
            sp.add_argument("--order", type=int, choices=(2, 3), default=2)
        elif name == "rep-verify":
            sp.add_argument("--carrier", required=True)
            sp.add_argument("--shape")
            sp.add_argument("--index", type=int, default=1)
        elif name == "poisson-check":
            sp.add_argument("--m", type=int, required=True)
            sp.add_argument("--pencil", default="1,1")
        elif name == "poisson-cocycle":
            sp.add_argument("--m", type=int, required=True)
        elif name == "verify-all":
            sp.add_argument("--criteria", help="comma-separated criterion numbers")
            sp.add_argument("--jobs", type=int, default=1)
    return p


def _parse_eval(text):
    if text is None:
        return None
    name, _, val = text.partition("=")
    if name.strip() != "q" or not val:
        raise UsageError("--eval expects q=<rational>")
    try:
        return Fraction(val.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational {val!r}") from exc


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        q0 = _parse_eval(args.eval)
        if args.command in NEEDS_SYMMETRY:
            cfg = _config(args)
        else:
            cfg = None
        payload, ok = COMMANDS[args.command](args, cfg)
    except (UsageError, ConfigError, ParseError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificationError as exc:
        print(json.dumps({"error": str(exc), "invariant": exc.invariant}, sort_keys=True), file=sys.stdout)
        return EXIT_FAIL
    data = _encode(payload, q0)
    print(json.dumps(data, sort_keys=True, indent=1))
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
