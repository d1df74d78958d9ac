"""Exact planar primitives and the brute-force maximal-empty-rectangle oracle.

Everything here works on integer coordinates. Rectangles are closed for the
purpose of containing a query point and open for the purpose of emptiness:
a point of ``P`` lying on an edge does not make a rectangle non-empty.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

COORD_LIMIT = 1 << 20
ORACLE_CAP = 256


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class ValidationError(GeometryError):
    pass


class DomainError(GeometryError):
    """A query point outside the region it must lie in."""


class OracleSizeError(GeometryError):
    pass


@dataclass(frozen=True)
class Point:
    x: int
    y: int
    id: int = -1


@dataclass(frozen=True)
class Rect:
    x_lo: int
    x_hi: int
    y_lo: int
    y_hi: int
    provenance: str = field(default="", compare=False, hash=False)

    def __post_init__(self):
        if not (self.x_lo < self.x_hi and self.y_lo < self.y_hi):
            raise GeometryError(f"degenerate rectangle {self.as_tuple()}")

    @property
    def area(self) -> int:
        return (self.x_hi - self.x_lo) * (self.y_hi - self.y_lo)

    @property
    def key(self) -> tuple:
        """Total order used for every "largest rectangle" comparison."""
        return (self.area, self.x_lo, self.y_lo, self.x_hi, self.y_hi)

    def as_tuple(self) -> tuple[int, int, int, int]:
        """``(x_lo, y_lo, x_hi, y_hi)``, the order used in files and reports."""
        return (self.x_lo, self.y_lo, self.x_hi, self.y_hi)

    def tagged(self, provenance: str) -> "Rect":
        return Rect(self.x_lo, self.x_hi, self.y_lo, self.y_hi, provenance)

    def __repr__(self):
        tag = f", {self.provenance!r}" if self.provenance else ""
        return f"Rect([{self.x_lo},{self.x_hi}]x[{self.y_lo},{self.y_hi}]{tag})"


PointLike = Union[Point, Sequence[int]]


def xy(q: PointLike) -> tuple[int, int]:
    if isinstance(q, Point):
        return q.x, q.y
    x, y = q
    return x, y


def rect_from_key(key: tuple, provenance: str = "") -> Rect:
    _, x_lo, y_lo, x_hi, y_hi = key
    return Rect(x_lo, x_hi, y_lo, y_hi, provenance)


def best(rects: Iterable[Rect | None]) -> Rect | None:
    """Comparator maximum of the non-None rectangles, or None."""
    winner = None
    for r in rects:
        if r is not None and (winner is None or r.key > winner.key):
            winner = r
    return winner


@dataclass(frozen=True)
class PointSet:
    points: tuple[Point, ...]
    by_x: tuple[int, ...]
    by_y: tuple[int, ...]
    bounds: Rect

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def translated(self, dx: int, dy: int) -> "PointSet":
        b = self.bounds
        return normalize_point_set(
            [(p.x + dx, p.y + dy) for p in self.points],
            Rect(b.x_lo + dx, b.x_hi + dx, b.y_lo + dy, b.y_hi + dy),
        )


def area(r: Rect) -> int:
    return r.area


def contains_point(r: Rect, q: PointLike) -> bool:
    x, y = xy(q)
    return r.x_lo <= x <= r.x_hi and r.y_lo <= y <= r.y_hi


def interior_empty(r: Rect, ps: PointSet | Iterable[Point]) -> bool:
    for p in ps:
        if r.x_lo < p.x < r.x_hi and r.y_lo < p.y < r.y_hi:
            return False
    return True


def is_maximal_empty(r: Rect, ps: PointSet) -> bool:
    """True iff ``r`` is P-empty and no side can be pushed outward.

    A side is blocked when it lies on the matching side of the box or when a
    point sits in the relative interior of that side.
    """
    b = ps.bounds
    if not (b.x_lo <= r.x_lo and r.x_hi <= b.x_hi and b.y_lo <= r.y_lo and r.y_hi <= b.y_hi):
        return False
    if not interior_empty(r, ps):
        return False
    left = r.x_lo == b.x_lo
    right = r.x_hi == b.x_hi
    bottom = r.y_lo == b.y_lo
    top = r.y_hi == b.y_hi
    for p in ps.points:
        if r.y_lo < p.y < r.y_hi:
            left = left or p.x == r.x_lo
            right = right or p.x == r.x_hi
        if r.x_lo < p.x < r.x_hi:
            bottom = bottom or p.y == r.y_lo
            top = top or p.y == r.y_hi
    return left and right and bottom and top


def touches_boundary(r: Rect, bounds: Rect) -> bool:
    return (
        r.x_lo == bounds.x_lo
        or r.x_hi == bounds.x_hi
        or r.y_lo == bounds.y_lo
        or r.y_hi == bounds.y_hi
    )


def _as_bounds(bounds) -> Rect:
    if isinstance(bounds, Rect):
        return bounds
    x_lo, y_lo, x_hi, y_hi = bounds
    return Rect(x_lo, x_hi, y_lo, y_hi)


def normalize_point_set(raw: Iterable[PointLike], bounds) -> PointSet:
    """Validate raw coordinates against ``bounds`` and build a PointSet.

    ``bounds`` is a Rect or an ``(x_lo, y_lo, x_hi, y_hi)`` tuple. Duplicate
    coordinates are rejected rather than perturbed.
    """
    try:
        b = _as_bounds(bounds)
    except GeometryError as exc:
        raise ValidationError(str(exc)) from None
    for v in b.as_tuple():
        if abs(v) > COORD_LIMIT:
            raise ValidationError(f"bounds coordinate {v} exceeds 2^20")
    pts = []
    for i, q in enumerate(raw):
        x, y = xy(q)
        if not (isinstance(x, int) and isinstance(y, int)):
            raise ValidationError(f"point {i} has non-integer coordinates ({x!r}, {y!r})")
        if not (b.x_lo < x < b.x_hi and b.y_lo < y < b.y_hi):
            raise ValidationError(f"point {i} ({x},{y}) is not strictly inside the bounds")
        pts.append(Point(x, y, i))
    seen_x: dict[int, int] = {}
    seen_y: dict[int, int] = {}
    for p in pts:
        if p.x in seen_x:
            raise ValidationError(f"points {seen_x[p.x]} and {p.id} share x={p.x}")
        if p.y in seen_y:
            raise ValidationError(f"points {seen_y[p.y]} and {p.id} share y={p.y}")
        seen_x[p.x] = p.id
        seen_y[p.y] = p.id
    by_x = tuple(sorted(range(len(pts)), key=lambda i: pts[i].x))
    by_y = tuple(sorted(range(len(pts)), key=lambda i: pts[i].y))
    return PointSet(tuple(pts), by_x, by_y, b)


def enumerate_maximal_empty(ps: PointSet, cap: int = ORACLE_CAP) -> list[Rect]:
    """Every maximal P-empty rectangle of ``ps``, by exhaustive search.

    For each candidate pair of vertical edges (taken from point x's and the box
    sides) the points strictly between them cut the box's y-range into gaps;
    each gap is a candidate. Candidates are kept only if they pass
    :func:`is_maximal_empty`.
    """
    n = len(ps)
    if n > cap:
        raise OracleSizeError(f"oracle refuses n={n} > cap={cap}")
    b = ps.bounds
    pts = sorted(ps.points, key=lambda p: p.x)
    # (x, y of the point on that vertical line, or None for a box side)
    columns = [(b.x_lo, None)] + [(p.x, p.y) for p in pts] + [(b.x_hi, None)]
    found: set[Rect] = set()
    for i in range(len(columns) - 1):
        x_lo, left_y = columns[i]
        ys = [b.y_lo, b.y_hi]
        for j in range(i + 1, len(columns)):
            x_hi, right_y = columns[j]
            if left_y is not None:
                probes = [left_y]
            elif right_y is not None:
                probes = [right_y]
            else:
                probes = None
            if probes is None:
                gaps = range(len(ys) - 1)
            else:
                gaps = [bisect.bisect_left(ys, probes[0]) - 1]
            for g in gaps:
                y_lo, y_hi = ys[g], ys[g + 1]
                if left_y is not None and not (y_lo < left_y < y_hi):
                    continue
                if right_y is not None and not (y_lo < right_y < y_hi):
                    continue
                found.add(Rect(x_lo, x_hi, y_lo, y_hi))
            if right_y is not None:
                bisect.insort(ys, right_y)
    return sorted((r for r in found if is_maximal_empty(r, ps)), key=lambda r: r.key)


def oracle_largest_containing(ps: PointSet, q: PointLike, cap: int = ORACLE_CAP) -> Rect:
    if not contains_point(ps.bounds, q):
        raise DomainError(f"query {xy(q)} lies outside the bounds")
    return best(r for r in enumerate_maximal_empty(ps, cap) if contains_point(r, q))
