"""Random inverse-Monge test matrices.

Entries are sums of rank-one terms ``u(r) * v(c)`` with ``u`` and ``v``
non-decreasing and non-negative, which is inverse Monge, plus a per-row offset
(Monge-neutral). Choosing the offsets as tangents of a parabola makes many
rows appear on the upper envelope, so envelopes are not trivially one block.
"""

from __future__ import annotations

import random

from .matrix import MatrixOracle


def _sorted_vector(rng: random.Random, k: int, hi: int) -> list[int]:
    return sorted(rng.randint(0, hi) for _ in range(k))


def random_inverse_monge(
    rng: random.Random, m: int, n: int, terms: int = 3, magnitude: int = 1000
) -> list[list[int]]:
    """Fully defined m x n inverse-Monge table."""
    table = [[0] * n for _ in range(m)]
    slopes = _sorted_vector(rng, m, magnitude)
    xs = _sorted_vector(rng, n, magnitude)
    # rows are lines slope*x - slope^2/2: tangents of a parabola, so they all
    # take turns on the envelope
    for r in range(m):
        s = slopes[r]
        off = -(s * s) // 2 + rng.randint(0, magnitude)
        row = table[r]
        for c in range(n):
            row[c] = s * xs[c] + off
    for _ in range(terms):
        u = _sorted_vector(rng, m, magnitude)
        v = _sorted_vector(rng, n, magnitude // 10 + 1)
        for r in range(m):
            ur = u[r]
            row = table[r]
            for c in range(n):
                row[c] += ur * v[c]
    return table


def random_supermodular(rng: random.Random, m: int, n: int, terms: int = 3, magnitude: int = 50) -> list[list[int]]:
    """Sum of non-negative rank-one terms with monotone factors (small values, many ties)."""
    table = [[0] * n for _ in range(m)]
    for _ in range(terms):
        u = _sorted_vector(rng, m, magnitude)
        v = _sorted_vector(rng, n, magnitude)
        for r in range(m):
            for c in range(n):
                table[r][c] += u[r] * v[c]
    row_off = [rng.randint(-magnitude * magnitude, 0) for _ in range(m)]
    col_off = [rng.randint(-magnitude * magnitude, 0) for _ in range(n)]
    for r in range(m):
        for c in range(n):
            table[r][c] += row_off[r] + col_off[c]
    return table


def random_double_staircase_spans(
    rng: random.Random, m: int, n: int, decreasing: bool = False, min_width: int = 1
) -> list[tuple[int, int]]:
    """Row spans whose two endpoints move monotonically in the same direction."""
    a = sorted(rng.randint(0, n - 1) for _ in range(m))
    w = [rng.randint(min_width - 1, max(min_width - 1, n // 2)) for _ in range(m)]
    his = []
    run = -1
    for r in range(m):
        run = max(run, min(n - 1, a[r] + w[r]))
        his.append(run)
    spans = list(zip(a, his))
    if decreasing:
        spans.reverse()
    return spans


def random_double_staircase(
    rng: random.Random, m: int, n: int, decreasing: bool | None = None, **kw
) -> MatrixOracle:
    """Lazily evaluated double-staircase inverse-Monge oracle over a random table."""
    if decreasing is None:
        decreasing = rng.random() < 0.5
    table = random_inverse_monge(rng, m, n, **kw)
    spans = random_double_staircase_spans(rng, m, n, decreasing)
    return MatrixOracle(m, n, lambda r, c: table[r][c], spans)
