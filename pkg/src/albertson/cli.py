"""Command-line entry point; every command prints a JSON report.

Exit codes: 0 success/PASS, 1 FAIL, 2 usage or input error, 3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import bounds, census, coloring, drawings, verifier
from .graph import GraphError, read_graph6_file, to_graph6

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("albertson")


@dataclass
class RunConfig:
    command: str
    node_budget: int = coloring.DEFAULT_NODE_BUDGET
    workers: int = 1
    enumeration_cap: int = census.ENUMERATION_CAP
    window_multiplier: int = 10
    out: Optional[str] = None
    cache_dir: Optional[str] = None

    def __post_init__(self):
        for name in ("node_budget", "workers", "enumeration_cap", "window_multiplier"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name.replace('_', '-')} must be positive")


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--node-budget", type=_positive, default=coloring.DEFAULT_NODE_BUDGET)
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--cache-dir", help=f"census cache directory (default: ${census.CACHE_ENV})")
    common.add_argument("--enumeration-cap", type=_positive, default=census.ENUMERATION_CAP)
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(
        prog="albertson",
        description="Exact checks of crossing-number lower bounds for color-critical graphs.",
        epilog="Exit codes: 0 success/PASS, 1 FAIL, 2 usage or input error, 3 node budget exhausted. "
               f"The census cache directory may also be set with ${census.CACHE_ENV}.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chromatic", parents=[common], help="exact chromatic number of each graph6 line")
    s.add_argument("file")
    s = sub.add_parser("critical", parents=[common], help="r-criticality of each graph6 line")
    s.add_argument("file")
    s.add_argument("--r", type=_positive, required=True)
    s = sub.add_parser("bounds", parents=[common], help="crossing lower bounds for n vertices, m edges")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--m", type=_nonneg, required=True)
    s.add_argument("--borodin", action="store_true", help="assume chi >= 7 and use the +1 rule")
    s = sub.add_parser("edge-bound", parents=[common], help="edge lower bound for r-critical graphs")
    s.add_argument("--r", type=_positive, required=True)
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--allow-complete", action="store_true", help="do not assume G is non-complete")
    s = sub.add_parser("verify-albertson", parents=[common], help="case analysis for 7 <= r <= 12")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--window", type=_positive)
    s.add_argument("--window-multiplier", type=_positive, default=10)
    s = sub.add_parser("verify-large-n", parents=[common], help="n >= 4r regime for r >= 13")
    s.add_argument("--r", type=int, required=True)
    s = sub.add_parser("lemma1", parents=[common], help="exhaustive small critical graph classification")
    s.add_argument("--r", type=int, required=True)
    s = sub.add_parser("excess-audit", parents=[common], help="check excess bounds on the census")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n-max", type=_positive, default=census.ENUMERATION_CAP)
    s = sub.add_parser("census", parents=[common], help="r-critical classes on n vertices")
    s.add_argument("--n", type=_nonneg, required=True)
    s.add_argument("--r", type=_positive, required=True)
    s.add_argument("--out-dir", help="also write graph6 + JSON summary files here")
    s = sub.add_parser("draw-kn", parents=[common], help="two-circle drawing of K_n with crossing counts")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--svg", help="write an SVG rendering here")
    s.add_argument("--include-drawing", action="store_true", help="embed coordinates in the report")
    s = sub.add_parser("audit", parents=[common], help="check cr(G) >= cr(K_chi) on each graph6 line")
    s.add_argument("file")
    return p


def _q(x) -> str:
    return bounds.frac_str(x)


def _cmd_chromatic(args, cfg):
    out = []
    for g in read_graph6_file(args.file):
        chi, col = coloring.optimal_coloring(g, cfg.node_budget)
        out.append({"graph6": to_graph6(g), "n": g.n, "m": g.m, "chi": chi, "witness_coloring": col})
    return {"command": "chromatic", "graphs": out}, EXIT_OK


def _cmd_critical(args, cfg):
    out = []
    for g in read_graph6_file(args.file):
        a = coloring.audit(g, args.r, cfg.node_budget)
        out.append({"graph6": to_graph6(g), **a.to_dict()})
    ok = bool(out) and all(x["critical"] for x in out)
    return {"command": "critical", "r": args.r, "graphs": out, "verdict": "PASS" if ok else "FAIL"}, \
        EXIT_OK if ok else EXIT_FAIL


def _cmd_bounds(args, cfg):
    n, m = args.n, args.m
    lin = bounds.cr_lower_linear(n, m, args.borodin)
    report = {
        "command": "bounds",
        "n": n,
        "m": m,
        "cr_lower": int(lin.value),
        "rule": lin.rule.value,
        "assumptions": list(lin.assumptions),
        "terms": {k.value: _q(v) for k, v in bounds.crossing_terms(n, m, args.borodin).items()},
        "best_by_range": [r.value for r in bounds.best_rules_for(n, m)],
    }
    try:
        cl = bounds.cr_lower_crossing_lemma(n, m)
        report["crossing_lemma"] = cl.to_dict()
    except bounds.NotApplicable as exc:
        report["crossing_lemma"] = {"not_applicable": str(exc)}
    c = int(lin.value)
    report["chi_upper_from_cr_lower"] = {"value": _q(bounds.chi_upper_from_cr(c)),
                                         "assumptions": list(bounds.CHI_UPPER_ASSUMPTIONS)}
    return report, EXIT_OK


def _cmd_edge_bound(args, cfg):
    not_complete = not args.allow_complete
    best = bounds.min_edges_critical(args.r, args.n, not_complete)
    rules = bounds.edge_rules(args.r, args.n, not_complete)
    return {"command": "edge-bound", "r": args.r, "n": args.n, "best": best.to_dict(),
            "rules": [b.to_dict() for b in rules]}, EXIT_OK


def _cmd_verify_albertson(args, cfg):
    window = args.window if args.window else args.window_multiplier * args.r
    rep = verifier.verify_albertson(args.r, window)
    log.info("r=%d certified_min=%d target=%d %s", rep.r, rep.certified_min, rep.target, rep.verdict)
    return {"command": "verify-albertson", **rep.to_dict()}, EXIT_OK if rep.verdict == "PASS" else EXIT_FAIL


def _cmd_verify_large_n(args, cfg):
    rec = verifier.verify_large_n(args.r)
    verdict = "PASS" if rec.passed else "FAIL"
    return {"command": "verify-large-n", "r": args.r, "case": rec.to_dict(), "verdict": verdict}, \
        EXIT_OK if rec.passed else EXIT_FAIL


def _cmd_lemma1(args, cfg):
    rep = census.verify_lemma1(args.r, cfg.enumeration_cap, cfg.cache_dir, cfg.workers)
    return {"command": "lemma1", **rep.to_dict()}, EXIT_OK if rep.verdict == "PASS" else EXIT_FAIL


def _cmd_excess_audit(args, cfg):
    rep = census.audit_excess_bounds(args.r, args.n_max, cfg.cache_dir, cfg.workers)
    return {"command": "excess-audit", **rep.to_dict()}, EXIT_OK if rep.verdict == "PASS" else EXIT_FAIL


def _cmd_census(args, cfg):
    if args.out_dir:
        summary = census.write_census(args.out_dir, args.n, args.r, cfg.cache_dir, cfg.workers)
        summary.pop("file", None)
    else:
        graphs = census.census_critical(args.n, args.r, cfg.enumeration_cap, cfg.cache_dir,
                                        cfg.node_budget, cfg.workers)
        summary = {"n": args.n, "r": args.r, "count": len(graphs), "graph6": [to_graph6(g) for g in graphs]}
    return {"command": "census", **summary}, EXIT_OK


def _cmd_draw_kn(args, cfg):
    d = drawings.cylindrical_drawing(args.n)
    geometric = drawings.count_crossings(d)
    breakdown = drawings.cylindrical_count_breakdown(args.n)
    combinatorial = sum(breakdown.values())
    f = bounds.guy_f(args.n)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(drawings.to_svg(d))
    ok = geometric.total == combinatorial == f
    report = {
        "command": "draw-kn",
        "n": args.n,
        "geometric_count": geometric.total,
        "combinatorial_count": combinatorial,
        "combinatorial_breakdown": breakdown,
        "guy_f": f,
        "verdict": "PASS" if ok else "FAIL",
    }
    if args.include_drawing:
        report["drawing"] = d.to_dict()
    return report, EXIT_OK if ok else EXIT_FAIL


def _cmd_audit(args, cfg):
    out = []
    for g in read_graph6_file(args.file):
        out.append({"graph6": to_graph6(g), **verifier.audit_graph_albertson(g, cfg.node_budget)})
    return {"command": "audit", "graphs": out}, EXIT_OK


COMMANDS = {
    "chromatic": _cmd_chromatic,
    "critical": _cmd_critical,
    "bounds": _cmd_bounds,
    "edge-bound": _cmd_edge_bound,
    "verify-albertson": _cmd_verify_albertson,
    "verify-large-n": _cmd_verify_large_n,
    "lemma1": _cmd_lemma1,
    "excess-audit": _cmd_excess_audit,
    "census": _cmd_census,
    "draw-kn": _cmd_draw_kn,
    "audit": _cmd_audit,
}


def _json_default(obj):
    if isinstance(obj, Fraction):
        return _q(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        cfg = RunConfig(
            command=args.command,
            node_budget=args.node_budget,
            workers=args.workers,
            enumeration_cap=args.enumeration_cap,
            window_multiplier=getattr(args, "window_multiplier", 10),
            out=args.out,
            cache_dir=args.cache_dir,
        )
        report, code = COMMANDS[args.command](args, cfg)
    except coloring.BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = json.dumps(report, sort_keys=True, indent=2, default=_json_default) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"{args.command}: {report.get('verdict', 'done')}", file=sys.stderr)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
