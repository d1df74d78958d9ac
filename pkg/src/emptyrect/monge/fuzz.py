"""Brute-force checkers for the Monge toolkit and a randomized fuzz driver."""

from __future__ import annotations

import random

from .envelope import EnvelopeTree
from .generate import random_double_staircase, random_inverse_monge, random_supermodular
from .klawe import klawe_staircase_row_maxima
from .matrix import MatrixOracle
from .smawk import brute_row_maxima, smawk_row_maxima
from .submatrix import CellMax, SubmatrixMaxStructure


def brute_max(m: MatrixOracle, r_lo: int, r_hi: int, c_lo: int, c_hi: int) -> CellMax | None:
    """Best cell of a contiguous submatrix by exhaustive scan (uncounted)."""
    best = None
    for r in range(max(r_lo, 0), min(r_hi, m.nrows - 1) + 1):
        for c in range(max(c_lo, 0), min(c_hi, m.ncols - 1) + 1):
            k = m.peek_key(r, c)
            if k is not None and (best is None or k > best.key):
                best = CellMax(k, r, c)
    return best


def brute_column_max(m: MatrixOracle, c: int) -> CellMax | None:
    return brute_max(m, 0, m.nrows - 1, c, c)


def monge_violations(m: MatrixOracle, quads) -> int:
    """Quadruples ``(i, j, k, l)`` with all four cells defined that break inverse Monge."""
    bad = 0
    for i, j, k, l in quads:
        a, b = m.peek_key(i, k), m.peek_key(j, l)
        c, d = m.peek_key(i, l), m.peek_key(j, k)
        if None in (a, b, c, d):
            continue
        if a[0] + b[0] < c[0] + d[0]:
            bad += 1
    return bad


def defined_quadruples(m: MatrixOracle, rng: random.Random, count: int, tries: int = 200):
    """Up to ``count`` random quadruples ``i < j, k < l`` with all four cells defined."""
    out = []
    attempts = 0
    while len(out) < count and attempts < count * tries:
        attempts += 1
        i, j = sorted(rng.sample(range(m.nrows), 2))
        si, sj = m.row_span(i), m.row_span(j)
        if si is None or sj is None:
            continue
        lo, hi = max(si[0], sj[0]), min(si[1], sj[1])
        if hi - lo < 1:
            continue
        k, l = sorted(rng.sample(range(lo, hi + 1), 2))
        out.append((i, j, k, l))
    return out


def dominance_switches(m: MatrixOracle, row_a: int, row_b: int) -> int:
    """How often "row_b beats row_a" changes along their common columns."""
    sa, sb = m.row_span(row_a), m.row_span(row_b)
    if sa is None or sb is None:
        return 0
    flags = [m.peek_key(row_b, c) > m.peek_key(row_a, c) for c in range(max(sa[0], sb[0]), min(sa[1], sb[1]) + 1)]
    return sum(1 for x, y in zip(flags, flags[1:]) if x != y)


def check_structure(m: MatrixOracle, rng: random.Random, probes: int) -> dict[str, int]:
    """Mismatch counts of every structure query against brute force."""
    tree = EnvelopeTree(m)
    s = SubmatrixMaxStructure(m)
    out = {"envelope": 0, "row_range_max": 0, "prefix_max": 0, "submatrix_max": 0}
    root = tree.root.envelope if tree.root else None
    for c in range(m.ncols):
        want = brute_column_max(m, c)
        got = None if root is None else root.row_at(c)
        if (want is None) != (got is None) or (want is not None and want.row != got):
            out["envelope"] += 1
    nr, nc = m.nrows, m.ncols
    for _ in range(probes):
        r = rng.randrange(nr)
        a, b = sorted((rng.randrange(nc), rng.randrange(nc)))
        if s.row_range_max(r, a, b) != brute_max(m, r, r, a, b):
            out["row_range_max"] += 1
        r, c = rng.randrange(nr), rng.randrange(nc)
        if s.prefix_max(r, c) != brute_max(m, 0, r, 0, c):
            out["prefix_max"] += 1
        r1, r2 = sorted((rng.randrange(nr), rng.randrange(nr)))
        c1, c2 = sorted((rng.randrange(nc), rng.randrange(nc)))
        if s.submatrix_max(r1, r2, c1, c2) != brute_max(m, r1, r2, c1, c2):
            out["submatrix_max"] += 1
    return out


def run_fuzz(seed: int, count: int, max_rows: int, max_cols: int) -> dict:
    """Random SMAWK, staircase and double-staircase checks; returns mismatch counts."""
    rng = random.Random(seed)
    tally = {
        "smawk": 0,
        "klawe": 0,
        "monge": 0,
        "single_cross": 0,
        "envelope": 0,
        "row_range_max": 0,
        "prefix_max": 0,
        "submatrix_max": 0,
    }
    for _ in range(count):
        m, n = rng.randint(1, max_rows), rng.randint(1, max_cols)
        full = MatrixOracle.from_rows(random_supermodular(rng, m, n))
        if smawk_row_maxima(full) != brute_row_maxima(full):
            tally["smawk"] += 1

        table = random_inverse_monge(rng, m, n)
        ends = sorted(rng.randint(-1, n - 1) for _ in range(m))
        stair = MatrixOracle(m, n, lambda r, c, t=table: t[r][c], [None if e < 0 else (0, e) for e in ends])
        if klawe_staircase_row_maxima(stair) != brute_row_maxima(stair):
            tally["klawe"] += 1

        ds = random_double_staircase(rng, m, n)
        if m >= 2:
            tally["monge"] += monge_violations(ds, defined_quadruples(ds, rng, 20))
            a, b = sorted(rng.sample(range(m), 2))
            if dominance_switches(ds, a, b) > 1:
                tally["single_cross"] += 1
        for k, v in check_structure(ds, rng, 10).items():
            tally[k] += v
    return {"seed": seed, "matrices": count, "failures": tally, "mismatches": sum(tally.values())}
