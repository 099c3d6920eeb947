"""genuslab command line.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .classes import (ClassSpec, GenusFunction, check_k5_chered, generate_block_path, generate_Zk, member,
                      minext)
from .config import BudgetExceeded, CeilingExceeded
from .graphs import complete_graph, cycle_rank
from .io import from_graph6, read_edge_list, write_edge_list

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load_graph(args):
    if args.graph and args.graph6:
        raise UsageError("give only one of --graph and --graph6")
    if args.graph:
        return read_edge_list(args.graph)
    if args.graph6:
        return from_graph6(args.graph6)
    raise UsageError("an input graph is required (--graph FILE or --graph6 STRING)")


def _add_graph_args(p):
    p.add_argument("--graph", help="edge-list file: first line 'n m', then 'u v' lines")
    p.add_argument("--graph6", help="graph6 string")
    p.add_argument("--budget", type=float, default=None, help="trace-state budget for searches")


def _budget(args):
    return None if args.budget is None else int(args.budget)


def cmd_genus(args, out):
    from .genus import max_orientable_euler_genus, min_euler_genus

    G = _load_graph(args)
    lo = min_euler_genus(G, args.mode, _budget(args))
    hi = max_orientable_euler_genus(G, _budget(args)) if args.mode == "orientable" else cycle_rank(G)
    print(f"min={lo} max={hi}", file=out)
    return EXIT_OK


def cmd_classes(args, out):
    G = _load_graph(args)
    spec = ClassSpec(args.family, args.closure, GenusFunction(args.g))
    print(f"member={'true' if member(G, spec, _budget(args)) else 'false'}", file=out)
    return EXIT_OK


def cmd_census(args, out):
    from .census import CensusConfig, run_census

    cfg = CensusConfig(nmax=args.nmax, out=Path(args.out), jobs=args.jobs, resume=args.resume,
                       budget=_budget(args))
    res = run_census(cfg)
    print(f"wrote {len(res.records)} records to {args.out}", file=out)
    return EXIT_OK


def cmd_verify(args, out):
    from .census import read_census, verify_inequalities, write_report

    res = read_census(args.census)
    report = verify_inequalities(res)
    path = Path(args.report) if args.report else Path(args.census) / "verification.json"
    write_report(report, path)
    for r in report:
        print(f"{r.claim}: {r.status} ({r.witness})", file=out)
    return EXIT_FAIL if any(r.status == "fails" for r in report) else EXIT_OK


def cmd_formulas(args, out):
    from .formulas import formula_sweep

    if not args.sweep:
        raise UsageError("formulas requires --sweep")
    rows = formula_sweep()
    fh = open(args.out, "w", newline="") if args.out else out
    try:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "args", "value", "flag"])
        w.writerows(rows)
    finally:
        if args.out:
            fh.close()
    return EXIT_OK


def cmd_k5(args, out):
    print(check_k5_chered().message, file=out)
    return EXIT_OK


def _int_list(text):
    return [int(x) for x in text.split(",") if x.strip()] if text else None


def cmd_generate(args, out):
    if args.kind == "zk":
        H = read_edge_list(args.cubic) if args.cubic else complete_graph(4)
        H = H.to_simple()
        order = _int_list(args.order) or list(range(1, args.n + 1))
        G = generate_Zk(args.n, H.n, H, order)
    else:
        if args.t is None:
            raise UsageError("blockpath needs --t")
        order = _int_list(args.order)
        if order is not None:
            order = [x - 1 for x in order]
        G = generate_block_path(args.n, args.t, None, order)
    write_edge_list(G, args.out)
    print(f"wrote {G.n} vertices, {G.m} edges to {args.out}", file=out)
    return EXIT_OK


def cmd_minext(args, out):
    print(minext(args.n, args.h, args.mode, _budget(args)).value, file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genuslab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("genus", help="min and max Euler genus of a graph")
    _add_graph_args(g)
    g.add_argument("--mode", choices=["orientable", "nonorientable", "any"], default="any")
    g.set_defaults(func=cmd_genus)

    c = sub.add_parser("classes", help="class membership of a graph")
    _add_graph_args(c)
    c.add_argument("--family", required=True, choices=["E", "OE", "NE", "OENE", "F", "XS"])
    c.add_argument("--closure", default="plain", choices=["plain", "Hered", "cHered", "Minor", "tMinor"])
    c.add_argument("--g", required=True, help="genus function, e.g. 'const 2' or 'table 0,0,0,0,2'")
    c.set_defaults(func=cmd_classes)

    s = sub.add_parser("census", help="exhaustive census; writes CSV files")
    s.add_argument("--nmax", type=int, default=5)
    s.add_argument("--out", required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--resume", action="store_true")
    s.add_argument("--budget", type=float, default=None)
    s.set_defaults(func=cmd_census)

    v = sub.add_parser("verify", help="check registered inequalities against a census")
    v.add_argument("--census", required=True)
    v.add_argument("--report", default=None, help="JSON path (default: CENSUS/verification.json)")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("formulas", help="formula/oracle comparison CSV")
    f.add_argument("--sweep", action="store_true")
    f.add_argument("--out", default=None)
    f.set_defaults(func=cmd_formulas)

    k = sub.add_parser("k5", help="exhaustive certifying-rotation scan of K5")
    k.set_defaults(func=cmd_k5)

    gen = sub.add_parser("generate", help="write a constructed graph as an edge list")
    gen.add_argument("kind", choices=["zk", "blockpath"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--t", type=int, default=None, help="block size (blockpath)")
    gen.add_argument("--cubic", default=None, help="cubic graph edge list (zk; default K4)")
    gen.add_argument("--order", default=None, help="comma-separated order")
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=cmd_generate)

    m = sub.add_parser("minext", help="minimum extension count")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--h", type=int, default=0)
    m.add_argument("--mode", choices=["orientable", "nonorientable", "any"], default="any")
    m.add_argument("--budget", type=float, default=None)
    m.set_defaults(func=cmd_minext)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BUDGET
    except (UsageError, CeilingExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
