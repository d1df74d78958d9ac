"""Command-line harness: generate, build, query, verify, bench, monge-fuzz.

Every command writes stable JSON (sorted keys) to ``--out`` or stdout.
Exit codes: 0 ok, 1 mismatch / bound exceeded, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys

from .engine.index import Index
from .generate import DEFAULT_BOUNDS, KINDS, generate
from .geometry import (
    ORACLE_CAP,
    GeometryError,
    PointSet,
    contains_point,
    best,
    enumerate_maximal_empty,
)
from .monge.fuzz import run_fuzz
from .pointfile import ParseError, format_points, parse_bounds, parse_pairs, read_pairs, read_points

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
BENCH_SIZES = (256, 512, 1024, 2048, 4096)


class UsageError(Exception):
    pass


def _bounds_arg(text: str):
    try:
        return parse_bounds(text, "--bounds")
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair_arg(text: str):
    try:
        return parse_pairs(text, "--at")[0]
    except (ParseError, IndexError):
        raise argparse.ArgumentTypeError(f"expected x,y, got {text!r}") from None


def _sizes_arg(text: str):
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(args) -> PointSet:
    if not args.points:
        raise UsageError("--points is required")
    return read_points(args.points, args.bounds)


def random_queries(ps: PointSet, count: int, seed: int) -> list[tuple[int, int]]:
    """Uniform integer queries in the closed box."""
    rng = random.Random(seed)
    b = ps.bounds
    return [(rng.randint(b.x_lo, b.x_hi), rng.randint(b.y_lo, b.y_hi)) for _ in range(count)]


def _queries(args, ps: PointSet) -> list[tuple[int, int]]:
    qs = list(args.at or [])
    if args.queries:
        qs.extend(read_pairs(args.queries))
    if not qs:
        qs = random_queries(ps, args.count, args.seed)
    return qs


def build_report(idx: Index) -> dict:
    s = idx.stats
    return {"stored_cells": s.stored_cells, "entry_evals": s.entry_evals, "nodes": s.subproblem_nodes}


def query_record(q, res) -> dict:
    r = res.rect
    return {
        "x": q[0],
        "y": q[1],
        "rect": [r.x_lo, r.y_lo, r.x_hi, r.y_hi],
        "area": r.area,
        "provenance": r.provenance,
        "work_units": res.work_units,
    }


# --- commands -------------------------------------------------------------


def cmd_generate(args) -> int:
    bounds = args.bounds or DEFAULT_BOUNDS
    ps = generate(args.kind, args.n, args.seed, bounds)
    _emit(args, format_points(ps))
    return EXIT_OK


def cmd_build(args) -> int:
    ps = _load(args)
    idx = Index(ps)
    _emit(args, {"n": len(ps), "build": build_report(idx)})
    return EXIT_OK


def cmd_query(args) -> int:
    ps = _load(args)
    qs = _queries(args, ps)
    idx = Index(ps)
    records = [query_record(q, idx.query(q)) for q in qs]
    _emit(args, {"n": len(ps), "build": build_report(idx), "queries": records})
    return EXIT_OK


def cmd_verify(args) -> int:
    ps = _load(args)
    if len(ps) > args.verify_cap:
        print(f"refusing to verify: n={len(ps)} exceeds --verify-cap {args.verify_cap}", file=sys.stderr)
        return EXIT_USAGE
    qs = _queries(args, ps)
    idx = Index(ps)
    oracle = enumerate_maximal_empty(ps, cap=args.verify_cap)
    mismatches = 0
    first = None
    for q in qs:
        got = idx.query(q).rect
        want = best(r for r in oracle if contains_point(r, q))
        if got.key != want.key:
            mismatches += 1
            if first is None:
                first = {
                    "x": q[0],
                    "y": q[1],
                    "got": [got.x_lo, got.y_lo, got.x_hi, got.y_hi, got.area, got.provenance],
                    "want": [want.x_lo, want.y_lo, want.x_hi, want.y_hi, want.area],
                }
    report = {"n": len(ps), "queries": len(qs), "oracle_rects": len(oracle), "mismatches": mismatches}
    if first is not None:
        report["first_counterexample"] = first
        print(f"mismatch at q=({first['x']},{first['y']}): got {first['got']} want {first['want']}", file=sys.stderr)
    _emit(args, report)
    return EXIT_MISMATCH if mismatches else EXIT_OK


def loglog_slope(xs, ys) -> float:
    """Least-squares slope of log(ys) against log(xs)."""
    lx = [math.log(x) for x in xs]
    ly = [math.log(max(y, 1)) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    den = sum((a - mx) ** 2 for a in lx)
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / den if den else 0.0


def bench_rows(kind: str, sizes, queries: int, seed: int, bounds=None) -> list[dict]:
    rows = []
    for n in sizes:
        side = max(4096, 4 * (n + 1))
        ps = generate(kind, n, seed, bounds or (0, 0, side, side))
        idx = Index(ps)
        work = [idx.query(q).work_units for q in random_queries(ps, queries, seed + n)]
        rows.append(
            {
                "n": n,
                "entry_evals": idx.stats.entry_evals,
                "stored_cells": idx.stats.stored_cells,
                "nodes": idx.stats.subproblem_nodes,
                "work_max": max(work) if work else 0,
                "work_mean": round(sum(work) / len(work), 2) if work else 0,
            }
        )
    return rows


def cmd_bench(args) -> int:
    sizes = args.sizes or BENCH_SIZES
    if len(sizes) < 2:
        raise UsageError("bench needs at least two sizes")
    rows = bench_rows(args.kind, sizes, args.count, args.seed, args.bounds)
    ns = [r["n"] for r in rows]
    slopes = {
        "entry_evals_vs_n": round(loglog_slope(ns, [r["entry_evals"] for r in rows]), 4),
        "stored_cells_vs_n": round(loglog_slope(ns, [r["stored_cells"] for r in rows]), 4),
        "work_max_vs_n": round(loglog_slope(ns, [r["work_max"] for r in rows]), 4),
        "work_max_vs_log_n": round(loglog_slope([math.log2(n) for n in ns], [r["work_max"] for r in rows]), 4),
    }
    ok = slopes["entry_evals_vs_n"] <= args.max_slope
    _emit(args, {"kind": args.kind, "rows": rows, "slopes": slopes, "max_slope": args.max_slope, "ok": ok})
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_monge_fuzz(args) -> int:
    report = run_fuzz(args.seed, args.count, args.max_rows, args.max_cols)
    _emit(args, report)
    return EXIT_OK if report["mismatches"] == 0 else EXIT_MISMATCH


# --- wiring ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="emptyrect", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, points=True):
        if points:
            sp.add_argument("--points", help="point file (header B:x_lo,y_lo,x_hi,y_hi, then x,y lines)")
        sp.add_argument("--bounds", type=_bounds_arg, help="x_lo,y_lo,x_hi,y_hi (overrides the file header)")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", help="write the report here instead of stdout")

    def query_opts(sp):
        sp.add_argument("--queries", help="file of x,y query lines")
        sp.add_argument("--at", type=_pair_arg, action="append", help="one query x,y (repeatable)")
        sp.add_argument("--count", type=int, default=100, help="random queries when none are given")

    sp = sub.add_parser("generate", help="write a deterministic point file")
    common(sp, points=False)
    sp.add_argument("--kind", choices=KINDS, default="uniform")
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("build", help="build the index and report its counters")
    common(sp)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("query", help="answer a batch of queries")
    common(sp)
    query_opts(sp)
    sp.set_defaults(func=cmd_query)

    sp = sub.add_parser("verify", help="compare answers against the brute-force oracle")
    common(sp)
    query_opts(sp)
    sp.add_argument("--verify-cap", type=int, default=ORACLE_CAP)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="counter growth over n and its log-log slopes")
    common(sp, points=False)
    sp.add_argument("--kind", choices=KINDS, default="staircase")
    sp.add_argument("--sizes", type=_sizes_arg, help=f"default {','.join(map(str, BENCH_SIZES))}")
    sp.add_argument("--count", type=int, default=50, help="queries per size")
    sp.add_argument("--max-slope", type=float, default=1.35)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("monge-fuzz", help="random checks of the Monge toolkit against brute force")
    common(sp, points=False)
    sp.add_argument("--count", type=int, default=200, help="random matrices")
    sp.add_argument("--max-rows", type=int, default=48)
    sp.add_argument("--max-cols", type=int, default=64)
    sp.set_defaults(func=cmd_monge_fuzz)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GeometryError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
