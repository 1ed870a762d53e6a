"""Command-line front door: solve, product, refute, audit, serve."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import harness
from .engine import (
    ALICE,
    BOB,
    SolverLimits,
    bob_number_exact,
    chi_g_exact,
    col_g_B_exact,
    col_g_exact,
    coloring_solve_record,
)
from .graph6 import write_graph6
from .graphs import GraphError, cartesian_product, graph_square, strong_product, union
from .gspec import GraphSpecError, parse_graph_spec
from .strategies import (
    coloring_strategy_from_name,
    exhaustive_bob_refute,
)

CLI_LIMITS = SolverLimits(
    coloring_vertices=12, coloring_shades=16, marking_vertices=18
)


def _cmd_solve(args) -> int:
    g = parse_graph_spec(args.graphspec)
    first = args.first
    if args.value == "chi_g":
        rep = chi_g_exact(g, first, CLI_LIMITS)
        value = rep.value
        stats = {"winners_by_s": rep.winners}
    elif args.value == "col_g":
        value = col_g_exact(g, CLI_LIMITS)
        stats = {}
    elif args.value == "col_g_B":
        value = col_g_B_exact(g, CLI_LIMITS)
        stats = {}
    else:
        value = bob_number_exact(g, CLI_LIMITS)
        stats = {}
    if args.json:
        doc = {
            "graph6": write_graph6(g.unlabeled()),
            "value": args.value,
            "first": first,
            "result": value,
        }
        doc.update(stats)
        if args.value == "chi_g":
            doc["solves"] = [
                coloring_solve_record(g.unlabeled(), s, first, CLI_LIMITS)
                for s in sorted(rep.winners)
            ]
        print(json.dumps(doc, sort_keys=True))
    else:
        print(value)
    return 0


def _cmd_product(args) -> int:
    kinds = {
        "cartesian": (2, cartesian_product),
        "strong": (2, strong_product),
        "union": (2, union),
        "square": (1, graph_square),
    }
    arity, fn = kinds[args.kind]
    specs = [args.spec1] + ([args.spec2] if args.spec2 else [])
    if len(specs) != arity:
        print(f"error: {args.kind} takes {arity} graph spec(s)", file=sys.stderr)
        return 2
    out = fn(*(parse_graph_spec(s) for s in specs))
    print(write_graph6(out.unlabeled()))
    return 0


def _cmd_refute(args) -> int:
    g = parse_graph_spec(args.graphspec)
    try:
        strategy = coloring_strategy_from_name(
            args.strategy, g, args.shades, args.first, CLI_LIMITS
        )
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = exhaustive_bob_refute(g, args.shades, strategy, args.first)
    if out.certified:
        print(
            json.dumps(
                {
                    "status": "certified",
                    "bob_moves_explored": out.bob_moves_explored,
                }
            )
        )
        return 0
    doc = {"status": out.status, "bob_moves_explored": out.bob_moves_explored}
    if out.certificate is not None:
        doc["certificate"] = out.certificate
    if out.detail:
        doc["detail"] = out.detail
    print(json.dumps(doc))
    return 1


def _cmd_audit(args) -> int:
    if args.claim == "all":
        ids = list(harness.AUDITS.keys())
    elif args.claim in harness.AUDITS:
        ids = [args.claim]
    else:
        known = ", ".join(sorted(harness.AUDITS))
        print(f"error: unknown claim id {args.claim!r}; known: {known}, all",
              file=sys.stderr)
        return 2
    cfg = harness.HarnessConfig(workers=args.workers)
    if args.nmax_graphs:
        cfg.nmax_graphs = args.nmax_graphs
    if args.nmax_forests:
        cfg.nmax_forests = args.nmax_forests
    if args.no_golden:
        cfg.check_golden = False
    results = harness.run_audits(ids, cfg)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / "report.json").write_bytes(harness.report_json_bytes(results))
    (outdir / "report.csv").write_bytes(harness.report_csv_bytes(results))
    if "bound-table" in ids:
        rows = harness.emit_bound_table()
        (outdir / "bound_table.csv").write_bytes(harness.bound_table_csv_bytes(rows))
        (outdir / "bound_table.json").write_bytes(
            (json.dumps(rows, indent=2, sort_keys=True) + "\n").encode()
        )
    failed = [r.claim_id for r in results if not r.passed]
    if failed:
        print(f"FAILED audits: {', '.join(failed)}", file=sys.stderr)
        return 1
    print(f"all {len(results)} audits passed; reports in {outdir}", file=sys.stderr)
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    serve(args.port, args.snapshot_dir)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gamecol",
        description="Solvers, strategies, and audits for the graph coloring "
        "and marking games.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="exact game values of a graph")
    solve.add_argument("graphspec")
    solve.add_argument(
        "--value",
        choices=["chi_g", "col_g", "col_g_B", "bob"],
        default="chi_g",
    )
    solve.add_argument("--first", choices=[ALICE, BOB], default=ALICE)
    solve.add_argument("--json", action="store_true")
    solve.set_defaults(fn=_cmd_solve)

    product = sub.add_parser("product", help="build a product graph, print graph6")
    product.add_argument("kind", choices=["cartesian", "strong", "square", "union"])
    product.add_argument("spec1")
    product.add_argument("spec2", nargs="?")
    product.set_defaults(fn=_cmd_product)

    refute = sub.add_parser(
        "refute", help="exhaust Bob's lines against a named Alice strategy"
    )
    refute.add_argument("graphspec")
    refute.add_argument("--shades", type=int, required=True)
    refute.add_argument("--strategy", default="naive-lowest")
    refute.add_argument("--first", choices=[ALICE, BOB], default=ALICE)
    refute.set_defaults(fn=_cmd_refute)

    audit = sub.add_parser("audit", help="run verification audits")
    audit.add_argument("claim", help="claim id or 'all'")
    audit.add_argument("--out", default="reports")
    audit.add_argument("--workers", type=int, default=1)
    audit.add_argument("--nmax-graphs", type=int, default=None)
    audit.add_argument("--nmax-forests", type=int, default=None)
    audit.add_argument("--no-golden", action="store_true")
    audit.set_defaults(fn=_cmd_audit)

    serve = sub.add_parser("serve", help="run the live-play JSON service")
    serve.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("GAMECOL_PORT", "8080")),
    )
    serve.add_argument("--snapshot-dir", default=None)
    serve.set_defaults(fn=_cmd_serve)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GraphSpecError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
