"""Maximal empty rectangles with at least one side on the bounding box.

There are O(n) of them, in four classes by how many box sides they use:

* ``i``   three sides (one per triple of box sides),
* ``ii``  two adjacent sides; the other two sides pass through consecutive
  points of the staircase of maxima facing that corner,
* ``iii`` two opposite sides; the other two pass through points consecutive
  in the perpendicular order,
* ``iv``  one side; found by a sweep away from that side, keeping the points
  already passed in a sorted list whose neighbours bound the rectangle.

The four corners and four sides are handled by one routine each, applied to
reflected copies of the point set.
"""

from __future__ import annotations

import bisect

from .geometry import PointSet, Rect

# (sx, sy): reflect x by sx and y by sy; the routines below always work on
# the top-right corner / right side of the reflected box
_CORNERS = ((1, 1), (-1, 1), (1, -1), (-1, -1))


def _reflect(coords, bounds: Rect, sx: int, sy: int):
    xs = (bounds.x_lo * sx, bounds.x_hi * sx)
    ys = (bounds.y_lo * sy, bounds.y_hi * sy)
    box = (min(xs), max(xs), min(ys), max(ys))
    return [(x * sx, y * sy) for x, y in coords], box


def _unreflect(x_lo, x_hi, y_lo, y_hi, sx, sy, tag) -> Rect:
    xa, xb = sorted((x_lo * sx, x_hi * sx))
    ya, yb = sorted((y_lo * sy, y_hi * sy))
    return Rect(xa, xb, ya, yb, tag)


def _corner_class(coords, box):
    """Class (ii) for the top-right corner: consecutive maxima pairs."""
    x_lo, x_hi, y_lo, y_hi = box
    maxima = []
    top = None
    # right-to-left scan keeping the highest point seen so far
    for x, y in sorted(coords, reverse=True):
        if top is None or y > top:
            maxima.append((x, y))
            top = y
    maxima.reverse()  # left to right, descending in y
    out = []
    for (ax, ay), (bx, by) in zip(maxima, maxima[1:]):
        out.append((ax, x_hi, by, y_hi))
    return out


def _side_class(coords, box):
    """Class (iv) for the right side: sweep right to left over a sorted y-list."""
    x_lo, x_hi, y_lo, y_hi = box
    seen: list[int] = []
    out = []
    for x, y in sorted(coords, reverse=True):
        k = bisect.bisect_left(seen, y)
        if 0 < k < len(seen):
            out.append((x, x_hi, seen[k - 1], seen[k]))
        seen.insert(k, y)
    return out


def compute_anchored(ps: PointSet) -> list[Rect]:
    """All maximal empty rectangles touching the box boundary, tagged ``anchored:<class>``."""
    b = ps.bounds
    coords = [(p.x, p.y) for p in ps.points]
    found: dict[Rect, Rect] = {}

    def emit(r: Rect):
        if r not in found:
            found[r] = r

    xs = sorted(x for x, _ in coords)
    ys = sorted(y for _, y in coords)
    if coords:
        emit(Rect(b.x_lo, b.x_hi, ys[-1], b.y_hi, "anchored:i"))
        emit(Rect(b.x_lo, b.x_hi, b.y_lo, ys[0], "anchored:i"))
        emit(Rect(b.x_lo, xs[0], b.y_lo, b.y_hi, "anchored:i"))
        emit(Rect(xs[-1], b.x_hi, b.y_lo, b.y_hi, "anchored:i"))
    else:
        emit(Rect(b.x_lo, b.x_hi, b.y_lo, b.y_hi, "anchored:i"))

    for sx, sy in _CORNERS:
        pts, box = _reflect(coords, b, sx, sy)
        for r in _corner_class(pts, box):
            emit(_unreflect(*r, sx, sy, "anchored:ii"))

    for lo, hi in zip(ys, ys[1:]):
        emit(Rect(b.x_lo, b.x_hi, lo, hi, "anchored:iii"))
    for lo, hi in zip(xs, xs[1:]):
        emit(Rect(lo, hi, b.y_lo, b.y_hi, "anchored:iii"))

    # right and left sides by x-reflection; top and bottom by transposing
    for transpose in (False, True):
        base = [(y, x) for x, y in coords] if transpose else coords
        tb = Rect(b.y_lo, b.y_hi, b.x_lo, b.x_hi) if transpose else b
        for sx in (1, -1):
            pts, box = _reflect(base, tb, sx, 1)
            for x_lo, x_hi, y_lo, y_hi in _side_class(pts, box):
                r = _unreflect(x_lo, x_hi, y_lo, y_hi, sx, 1, "anchored:iv")
                if transpose:
                    r = Rect(r.y_lo, r.y_hi, r.x_lo, r.x_hi, "anchored:iv")
                emit(r)
    return list(found.values())
