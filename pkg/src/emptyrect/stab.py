"""Two-level segment tree answering "largest stored rectangle containing q".

The x-axis is cut into elementary units at the sorted distinct x-endpoints:
unit ``2i`` is the endpoint ``xs[i]`` itself and unit ``2i+1`` is the open gap
after it, so a closed interval ``[xs[i], xs[j]]`` covers units ``2i..2j``
and a closed stab is a single unit lookup. A rectangle is stored at the
canonical primary nodes of its x-range; each primary node builds the same
kind of tree over the y-ranges of its rectangles, and every secondary node
keeps only its largest rectangle.
"""

from __future__ import annotations

import bisect
from typing import Iterable

from ._util import WorkCounter
from .geometry import PointLike, Rect, xy


def _unit(coords: list[int], v: int) -> int | None:
    i = bisect.bisect_left(coords, v)
    if i < len(coords) and coords[i] == v:
        return 2 * i
    if i == 0 or i == len(coords):
        return None
    return 2 * i - 1


def _canonical(lo: int, hi: int, size: int) -> list[int]:
    """Heap indices of the canonical nodes covering units lo..hi."""
    out = []
    lo += size
    hi += size + 1
    while lo < hi:
        if lo & 1:
            out.append(lo)
            lo += 1
        if hi & 1:
            hi -= 1
            out.append(hi)
        lo >>= 1
        hi >>= 1
    return out


def _pow2(n: int) -> int:
    size = 1
    while size < n:
        size *= 2
    return size


class _Secondary:
    __slots__ = ("ys", "size", "slots")

    def __init__(self, rects: list[Rect]):
        # rects arrive sorted best-first, so the first writer of a slot wins
        self.ys = sorted({v for r in rects for v in (r.y_lo, r.y_hi)})
        self.size = _pow2(2 * len(self.ys) - 1)
        slots: dict[int, Rect] = {}
        ys = self.ys
        for r in rects:
            lo = 2 * bisect.bisect_left(ys, r.y_lo)
            hi = 2 * bisect.bisect_left(ys, r.y_hi)
            for node in _canonical(lo, hi, self.size):
                if node not in slots:
                    slots[node] = r
        self.slots = slots

    def stab(self, y: int, work: WorkCounter | None) -> Rect | None:
        u = _unit(self.ys, y)
        if work is not None:
            work.probe(len(self.ys))
        if u is None:
            return None
        node = u + self.size
        winner = None
        slots = self.slots
        while node:
            r = slots.get(node)
            if r is not None and (winner is None or r.key > winner.key):
                winner = r
            node >>= 1
        if work is not None:
            work.visit(self.size.bit_length())
        return winner


class StabIndex:
    def __init__(self, rects: Iterable[Rect]):
        rects = sorted(set(rects), key=lambda r: r.key, reverse=True)
        self.count = len(rects)
        self.xs = sorted({v for r in rects for v in (r.x_lo, r.x_hi)})
        self.size = _pow2(max(1, 2 * len(self.xs) - 1))
        buckets: dict[int, list[Rect]] = {}
        xs = self.xs
        for r in rects:
            lo = 2 * bisect.bisect_left(xs, r.x_lo)
            hi = 2 * bisect.bisect_left(xs, r.x_hi)
            for node in _canonical(lo, hi, self.size):
                buckets.setdefault(node, []).append(r)
        self.secondary = {node: _Secondary(rs) for node, rs in buckets.items()}

    @property
    def stored_cells(self) -> int:
        """Occupied secondary slots (one rectangle each)."""
        return sum(len(s.slots) for s in self.secondary.values())

    @property
    def nodes(self) -> int:
        return len(self.secondary)

    def stab_max_area(self, q: PointLike, work: WorkCounter | None = None) -> Rect | None:
        x, y = xy(q)
        u = _unit(self.xs, x)
        if u is None:
            return None
        node = u + self.size
        winner = None
        while node:
            sec = self.secondary.get(node)
            if work is not None:
                work.visit()
            if sec is not None:
                r = sec.stab(y, work)
                if r is not None and (winner is None or r.key > winner.key):
                    winner = r
            node >>= 1
        return winner


def build_stab_index(rects: Iterable[Rect]) -> StabIndex:
    return StabIndex(rects)


def stab_max_area(idx: StabIndex, q: PointLike, work: WorkCounter | None = None) -> Rect | None:
    return idx.stab_max_area(q, work)
