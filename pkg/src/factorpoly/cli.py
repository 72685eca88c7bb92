"""Command-line front end: ``factorpoly {count,analyze,verify,scan}``.

Exit codes: 0 ok, 1 a proved statement came out Falsified, 2 bad input,
3 enumeration cap exceeded, 4 DP/brute-force mismatch, 5 root finder failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from typing import Optional, Sequence

from .config import RunConfig
from .enumeration import CapExceeded, brute_counts, dp_counts, interval_spec
from .families import FamilySpec, random_graphs
from .fugacities import FugacityError, PRESET_NAMES, load_config, preset_spec, spec_from_config
from .inequalities import (
    hurwitz_minors_check,
    log_concavity_check,
    newton_check,
    prop15_consequences,
    toeplitz_minors_check,
)
from .multigraph import DegreeBounds, GraphParseError, Multigraph, read_graph
from .polynomials import UniPoly
from .quadratic import parse_exact
from .roots import Disc, DiscExterior, RootFindingError, Sector, classify_roots, find_roots, verdict_from_roots
from .verify import FALSIFIED, THEOREM_IDS, TheoremCheck, run_check, scan_conjecture1

EXIT_FALSIFIED = 1
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4
EXIT_ROOTS = 5


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _g12(x: float) -> str:
    return f"{x:.12g}"


def parse_angle(text: str) -> float:
    """``pi``, ``pi/2``, ``2pi/3``, ``2*pi/3`` or a plain number of radians."""
    t = text.replace(" ", "").replace("*", "").lower()
    if "pi" not in t:
        return float(t)
    num, _, den = t.partition("/")
    coef = num.replace("pi", "")
    value = (float(coef) if coef not in ("", "+") else 1.0) * math.pi
    return value / float(den) if den else value


def _bound_arg(text: Optional[str]):
    if text is None:
        return None
    parts = [int(x) for x in text.split(",")]
    return parts[0] if len(parts) == 1 else parts


def _config(args) -> RunConfig:
    return RunConfig(
        residual_tol=args.tol,
        boundary_tol=args.boundary_tol,
        brute_cap=args.brute_cap,
        state_cap=args.state_cap,
        max_minor_order=args.max_minor_order or 6,
        seed=args.seed,
        fmt=args.format or "json",
    )


def _preset_params(args) -> dict:
    if args.fugacity in ("interval", "thm26"):
        f = int(args.f) if args.f is not None else 0
        g = int(args.g) if args.g is not None else (1 if args.fugacity == "interval" else None)
        return {"f": f, "g": g} if g is not None else {"f": f}
    if args.f is not None or args.g is not None:
        raise InputError(f"--f/--g do not apply to the {args.fugacity} preset")
    return {}


def _weights(G: Multigraph, args):
    """FugacitySpec from --f/--g, --fugacity or --fugacity-config (None if none given)."""
    if args.fugacity and args.fugacity_config:
        raise InputError("give only one of --fugacity, --fugacity-config")
    if args.fugacity_config:
        if args.f is not None or args.g is not None:
            raise InputError("--f/--g cannot be combined with --fugacity-config")
        return spec_from_config(G, load_config(args.fugacity_config))
    if args.fugacity:
        params = _preset_params(args)
        if args.fugacity == "thm26" and "g" not in params:
            deg = G.max_degree()
            params["g"] = deg
        return preset_spec(G, args.fugacity, **params)
    if args.f is not None or args.g is not None:
        f = _bound_arg(args.f) if args.f is not None else 0
        g = _bound_arg(args.g) if args.g is not None else f
        return interval_spec(G, DegreeBounds.coerce(G, f, g))
    return None


# -- commands ----------------------------------------------------------------


def cmd_count(args, cfg: RunConfig, out) -> int:
    G = read_graph(args.graph)
    spec = _weights(G, args)
    if spec is None:
        raise InputError("count needs --f/--g, --fugacity or --fugacity-config")
    order = [int(x) for x in args.order.split(",")] if args.order else None
    if args.method == "brute":
        counts = brute_counts(G, spec, brute_cap=cfg.brute_cap)
    else:
        counts = dp_counts(G, spec, order=order, state_cap=cfg.state_cap)
        if args.method == "both":
            other = brute_counts(G, spec, brute_cap=cfg.brute_cap)
            if UniPoly(other) != UniPoly(counts):
                print(f"dp/brute mismatch: {counts} vs {other}", file=sys.stderr)
                return EXIT_MISMATCH
    coeffs = UniPoly(counts).to_json()
    fmt = args.format or "text"
    if fmt == "text":
        print(" ".join(coeffs), file=out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["j", "N"])
        for j, c in enumerate(coeffs):
            w.writerow([j, c])
    else:
        print(_dump(coeffs), file=out)
    return 0


def _analysis(poly: UniPoly, cfg: RunConfig, regions) -> dict:
    report: dict = {"coeffs": poly.to_json()}
    if poly.degree >= 1:
        rs = find_roots(poly, cfg.residual_tol)
        report["roots"] = rs.to_json()
        report["classify"] = classify_roots(rs, cfg.boundary_tol).to_json()
        report["verdicts"] = [
            {"region": r.to_json(), **verdict_from_roots(rs, r, cfg.boundary_tol).to_json()} for r in regions
        ]
    elif regions:
        report["verdicts"] = [
            {"region": r.to_json(), "outcome": "IdenticallyZero" if poly.is_zero() else "Nonvanishing"}
            for r in regions
        ]
    N = list(poly.coeffs)
    if N:
        order = cfg.max_minor_order
        report["inequalities"] = [
            rep.to_json()
            for rep in (
                newton_check(N),
                log_concavity_check(N),
                log_concavity_check(N, strict=True),
                toeplitz_minors_check(N, min(order, len(N))),
                hurwitz_minors_check(N, min(order, max(len(N) - 1, 1))),
                prop15_consequences(N),
            )
        ]
    return report


def cmd_analyze(args, cfg: RunConfig, out) -> int:
    if args.coeffs:
        if args.graph:
            raise InputError("give either a graph or --coeffs, not both")
        poly = UniPoly(parse_exact(x) for x in args.coeffs.split(","))
    elif args.graph:
        G = read_graph(args.graph)
        spec = _weights(G, args) or preset_spec(G, "interval", f=0, g=1)
        poly = UniPoly(dp_counts(G, spec, state_cap=cfg.state_cap))
    else:
        raise InputError("analyze needs a graph file or --coeffs")
    regions = [Sector(parse_angle(s)) for s in args.sector or []]
    regions += [Disc(float(k)) for k in args.disc or []]
    regions += [DiscExterior(float(k)) for k in args.exterior or []]
    report = _analysis(poly, cfg, regions)
    if "classify" in report:
        c = report["classify"]
        report["unit_modulus"] = (
            abs(c["min_modulus"] - 1) <= cfg.boundary_tol and abs(c["max_modulus"] - 1) <= cfg.boundary_tol
        )
    fmt = args.format or "json"
    if fmt == "json":
        print(_dump(report), file=out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["re", "im"])
        for re, im in report.get("roots", {}).get("roots", []):
            w.writerow([_g12(re), _g12(im)])
    else:
        print("coeffs: " + " ".join(report["coeffs"]), file=out)
        for re, im in report.get("roots", {}).get("roots", []):
            print(f"root: {_g12(re)} {_g12(im)}", file=out)
        for key, val in report.get("classify", {}).items():
            print(f"{key}: {val}", file=out)
        for v in report.get("verdicts", []):
            label = " ".join(f"{k}={_g12(x)}" for k, x in sorted(v["region"].items()) if k != "kind")
            print(f"{v['region']['kind']}({label}): {v['outcome']}" + (f" witness {v['witness']}" if "witness" in v else ""), file=out)
        for rep in report.get("inequalities", []):
            print(f"{rep['name']}: {'holds' if rep['holds'] else 'fails ' + str(rep['violation'])}", file=out)
    return 0


def _verify_params(args, G: Multigraph) -> dict:
    params: dict = {}
    if args.f is not None:
        params["f"] = _bound_arg(args.f)
    if args.g is not None:
        params["g"] = _bound_arg(args.g)
    if args.quad:
        params["quad"] = args.quad
    if args.part:
        params["part"] = args.part
    if args.fugacity_config:
        params["u"] = spec_from_config(G, load_config(args.fugacity_config))
    elif args.fugacity:
        params["u"] = preset_spec(G, args.fugacity, **_preset_params(args))
        params.pop("f", None)
        params.pop("g", None)
    return params


def cmd_verify(args, cfg: RunConfig, out) -> int:
    ids = THEOREM_IDS if args.theorem == "all" else (args.theorem,)
    if args.theorem != "all" and args.theorem not in THEOREM_IDS:
        raise InputError(f"unknown theorem id {args.theorem!r}; valid: all, {', '.join(THEOREM_IDS)}")
    if args.graph:
        graphs = [read_graph(args.graph)]
    elif args.random:
        n, m, count = args.random
        graphs = random_graphs(count, cfg.seed, (1, n), (0, m))
    else:
        raise InputError("verify needs a graph file or --random N M COUNT")
    records: list[TheoremCheck] = []
    falsified = False
    fmt = args.format or "json"
    writer = csv.writer(out, lineterminator="\n") if fmt == "csv" else None
    if writer:
        writer.writerow(["theorem", "verdict", "reason"])
    for G in graphs:
        params = _verify_params(args, G)
        for tid in ids:
            try:
                rec = run_check(tid, G, params, cfg)
            except CapExceeded as exc:
                rec = TheoremCheck(tid, {"graph": G.to_dict(), "params": {}}, "Inapplicable", reason=str(exc))
            records.append(rec)
            if fmt == "json":
                print(_dump(rec.to_json()), file=out)
            elif writer:
                writer.writerow([rec.theorem, rec.verdict, rec.reason])
            else:
                print(f"{rec.theorem}: {rec.verdict}" + (f" ({rec.reason})" if rec.reason else ""), file=out)
            if rec.verdict == FALSIFIED:
                falsified = True
                print(f"FALSIFIED: {_dump(rec.to_json())}", file=sys.stderr)
                break
        if falsified:
            break
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(_dump([r.to_json() for r in records]) + "\n")
    return EXIT_FALSIFIED if falsified else 0


def cmd_scan(args, cfg: RunConfig, out) -> int:
    if args.random:
        n, m, count = args.random
        family = FamilySpec(generator="random", n=n, m=m, count=count, seed=cfg.seed,
                            bounds=args.bounds or "sampled", bound_samples=args.bound_samples)
    elif args.named:
        family = FamilySpec(generator="named", named=args.named, max_n=args.max_n,
                            bounds=args.bounds or "constant", bound_top=args.bound_top, seed=cfg.seed)
    else:
        family = FamilySpec(generator="all", max_n=args.max_n, max_m=args.max_m,
                            bounds=args.bounds or "all", seed=cfg.seed, bound_top=args.bound_top,
                            bound_samples=args.bound_samples)
    report = scan_conjecture1(family)
    os.makedirs(args.out, exist_ok=True)
    with open(os.path.join(args.out, "violations.json"), "w", encoding="utf-8") as fh:
        fh.write(_dump(report["violations"]) + "\n")
    fmt = args.format or "json"
    if fmt == "json":
        print(_dump(report), file=out)
    else:
        for key in ("graphs", "instances", "confirmed", "trivial", "falsified", "skipped_graphs"):
            print(f"{key}: {report[key]}" if fmt == "text" else f"{key},{report[key]}", file=out)
    return 0


# -- parser ------------------------------------------------------------------


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--tol", type=float, default=d(1e-10), help="root residual tolerance")
    p.add_argument("--boundary-tol", type=float, default=d(1e-8), help="region boundary tolerance")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--format", choices=("json", "csv", "text"), default=d(None))
    p.add_argument("--max-minor-order", type=int, default=d(None))
    p.add_argument("--brute-cap", type=int, default=d(30))
    p.add_argument("--state-cap", type=int, default=d(2_000_000))


def _weight_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--f", help="lower degree bound (int or comma list per vertex)")
    p.add_argument("--g", help="upper degree bound (int or comma list per vertex)")
    p.add_argument("--fugacity", choices=PRESET_NAMES, help="fugacity preset for every vertex")
    p.add_argument("--fugacity-config", help="JSON fugacity config file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="factorpoly", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    p = sub.add_parser("count", parents=[common], help="exact weighted subgraph counts")
    p.add_argument("graph")
    _weight_flags(p)
    p.add_argument("--method", choices=("dp", "brute", "both"), default="dp")
    p.add_argument("--order", help="explicit edge order for the DP (comma list of 0-based edge indices)")

    p = sub.add_parser("analyze", parents=[common], help="roots, zero regions and inequalities")
    p.add_argument("graph", nargs="?")
    p.add_argument("--coeffs", help="comma list of exact coefficients, constant term first")
    _weight_flags(p)
    p.add_argument("--sector", action="append", help="half-angle, e.g. pi, pi/2, 2pi/3")
    p.add_argument("--disc", action="append", help="radius of an open disc")
    p.add_argument("--exterior", action="append", help="radius of an open disc exterior")

    p = sub.add_parser("verify", parents=[common], help="run theorem checks")
    p.add_argument("theorem", help="all or one of: " + ", ".join(THEOREM_IDS))
    p.add_argument("graph", nargs="?")
    _weight_flags(p)
    p.add_argument("--quad", choices=("sqrt3", "sqrt2", "2"))
    p.add_argument("--part", choices=("a", "b", "c"))
    p.add_argument("--random", nargs=3, type=int, metavar=("N", "M", "COUNT"))
    p.add_argument("--report", help="also write all records as a JSON array to this file")

    p = sub.add_parser("scan", parents=[common], help="log-concavity scan over a graph family")
    p.add_argument("--all-graphs", action="store_true", help="all multigraphs up to --max-n/--max-m (default)")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--random", nargs=3, type=int, metavar=("N", "M", "COUNT"))
    p.add_argument("--named", choices=("cycles", "paths", "complete"))
    p.add_argument("--bounds", choices=("all", "constant", "sampled"))
    p.add_argument("--bound-top", type=int)
    p.add_argument("--bound-samples", type=int, default=20)
    p.add_argument("--out", default=".", help="directory for violations.json")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        cfg = _config(args)
        handler = {"count": cmd_count, "analyze": cmd_analyze, "verify": cmd_verify, "scan": cmd_scan}
        return handler[args.command](args, cfg, out)
    except (GraphParseError, FugacityError, InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except RootFindingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ROOTS


if __name__ == "__main__":
    sys.exit(main())
