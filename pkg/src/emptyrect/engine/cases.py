"""The two "easy" subproblem families at a range-tree node.

Both work on the node's points in a local frame centred on its origin and
emit bounded maximal empty rectangles that contain the origin. There are
O(n_v) of each, so they go into the global stab index explicitly.
"""

from __future__ import annotations

import bisect

from .._util import MaxSegTree
from ..geometry import Point, Rect
from .frame import Frame, Local

# left, right, bottom, top halfplanes, each mapped onto "left of the y-axis"
HALFPLANE_FRAMES = {
    "left": dict(),
    "right": dict(sx=-1),
    "bottom": dict(swap=True),
    "top": dict(swap=True, sx=-1),
}

# the two cyclic orientations of one-point-per-quadrant rectangles
QUADRANT_FRAMES = {
    "ccw": dict(),
    "cw": dict(sx=-1),
}


class _Extreme:
    """Points sorted by one coordinate with a range-extremum on the other."""

    def __init__(self, pts: list[Local], sort_by: str, best: str, sign: int):
        pts = sorted(pts, key=lambda t: getattr(t, sort_by))
        self.coords = [getattr(t, sort_by) for t in pts]
        self.tree = MaxSegTree([(sign * getattr(t, best), t) for t in pts])

    def query(self, lo: int, hi: int) -> Local | None:
        """Extreme point with sort coordinate strictly between lo and hi."""
        i = bisect.bisect_right(self.coords, lo)
        j = bisect.bisect_left(self.coords, hi) - 1
        hit = self.tree.query(i, j)
        return None if hit is None else hit[1]


def _left_halfplane(pts: list[Local], frame: Frame, tag: str) -> list[Rect]:
    left = [t for t in pts if t.X < 0]
    right = [t for t in pts if t.X > 0]
    if len(left) < 3 or not right:
        return []
    leftmost_right = _Extreme(right, "Y", "X", -1)
    out = []
    seen: list[int] = []
    # sweep from the y-axis leftward
    for t in sorted(left, key=lambda t: -t.X):
        k = bisect.bisect_left(seen, t.Y)
        if 0 < k < len(seen):
            bottom, top = seen[k - 1], seen[k]
            if bottom < 0 < top:
                hit = leftmost_right.query(bottom, top)
                if hit is not None:
                    out.append(frame.rect(t.X, hit.X, bottom, top, tag))
        seen.insert(k, t.Y)
    return out


def collect_case_halfplane(points: list[Point], origin: tuple[int, int]) -> list[Rect]:
    """Rectangles around the origin with three defining points in one halfplane."""
    if len(points) < 4:
        return []
    # a rectangle with three defining points in each of two adjacent
    # halfplanes is found by both sweeps; keep the first
    out: dict[Rect, Rect] = {}
    for name, kw in HALFPLANE_FRAMES.items():
        frame = Frame(*origin, **kw)
        for r in _left_halfplane(frame.points(points), frame, f"halfplane:{name}"):
            out.setdefault(r, r)
    return list(out.values())


def _one_per_quadrant(pts: list[Local], frame: Frame, tag: str) -> list[Rect]:
    q1 = [t for t in pts if t.X > 0 and t.Y > 0]
    below = [t for t in pts if t.Y < 0]
    left = [t for t in pts if t.X < 0]
    above = [t for t in pts if t.Y > 0]
    right = [t for t in pts if t.X > 0]
    if not (q1 and below and left and above):
        return []
    sigma_b = _Extreme(below, "X", "Y", 1)  # topmost below the x-axis
    sigma_l = _Extreme(left, "Y", "X", 1)  # rightmost left of the y-axis
    sigma_t = _Extreme(above, "X", "Y", -1)  # lowest above the x-axis
    sigma_r = _Extreme(right, "Y", "X", -1)  # leftmost right of the y-axis
    out = []
    for pr in q1:
        pb = sigma_b.query(0, pr.X)
        if pb is None:
            continue
        pl = sigma_l.query(pb.Y, 0)
        if pl is None:
            continue
        pt = sigma_t.query(pl.X, 0)
        if pt is None:
            continue
        if sigma_r.query(0, pt.Y) is not pr:
            continue
        out.append(frame.rect(pl.X, pr.X, pb.Y, pt.Y, tag))
    return out


def collect_case_one_per_quadrant(points: list[Point], origin: tuple[int, int]) -> list[Rect]:
    """Rectangles around the origin with exactly one defining point per quadrant."""
    if len(points) < 4:
        return []
    out = []
    for name, kw in QUADRANT_FRAMES.items():
        frame = Frame(*origin, **kw)
        out.extend(_one_per_quadrant(frame.points(points), frame, f"quadrant:{name}"))
    return out
