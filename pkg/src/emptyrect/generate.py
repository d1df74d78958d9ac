"""Deterministic point-set generators."""

from __future__ import annotations

import math
import random

from .geometry import PointSet, ValidationError, normalize_point_set

KINDS = ("uniform", "staircase", "grid-adversarial")
DEFAULT_BOUNDS = (0, 0, 4096, 4096)


def staircase_coords(n: int) -> list[tuple[int, int]]:
    """Two descending chains, one strictly below-left of the other.

    With ``k`` points per chain every consecutive pair of the lower chain
    combines with every consecutive pair of the upper chain, giving
    ``(k - 1) ** 2`` bounded maximal empty rectangles. Coordinates are
    ``1..n`` in both axes.
    """
    k_lo = (n + 1) // 2
    k_hi = n - k_lo
    lower = [(i, k_lo + 1 - i) for i in range(1, k_lo + 1)]
    upper = [(k_lo + i, n + 1 - i) for i in range(1, k_hi + 1)]
    return lower + upper


def _scale_into(coords, bounds, n) -> list[tuple[int, int]]:
    x_lo, y_lo, x_hi, y_hi = bounds
    span = min(x_hi - x_lo, y_hi - y_lo)
    step = span // (n + 1)
    if step < 1:
        raise ValidationError(f"n={n} does not fit into bounds {bounds}")
    return [(x_lo + x * step, y_lo + y * step) for x, y in coords]


def generate(kind: str, n: int, seed: int = 0, bounds=DEFAULT_BOUNDS) -> PointSet:
    """Point set of the given kind; identical for identical arguments."""
    if n < 0:
        raise ValidationError("n must be non-negative")
    x_lo, y_lo, x_hi, y_hi = bounds
    rng = random.Random(seed)
    if kind == "uniform":
        if n > min(x_hi - x_lo, y_hi - y_lo) - 1:
            raise ValidationError(f"n={n} does not fit into bounds {bounds}")
        xs = rng.sample(range(x_lo + 1, x_hi), n)
        ys = rng.sample(range(y_lo + 1, y_hi), n)
        coords = list(zip(xs, ys))
    elif kind == "staircase":
        coords = _scale_into(staircase_coords(n), bounds, n)
    elif kind == "grid-adversarial":
        # a sheared sqrt(n) x sqrt(n) grid: rows and columns nearly aligned,
        # which produces many long thin maximal rectangles
        side = max(1, math.isqrt(max(n - 1, 0)) + 1)
        cells = [(r, c) for r in range(side) for c in range(side)]
        rng.shuffle(cells)
        cells = sorted(cells[:n])
        raw = [(c * side + r + 1, r * side + c + 1) for r, c in cells]
        coords = _scale_into(raw, bounds, side * side)
    else:
        raise ValidationError(f"unknown kind {kind!r}; expected one of {KINDS}")
    return normalize_point_set(coords, bounds)
