"""Two-level range tree that cuts the plane into subproblem boxes.

Primary nodes split their points by x, secondary nodes (one tree per primary
node) by y. Splitters sit half a unit above the last coordinate of the lower
half, so they are stored doubled (``split2 = 2 * coord + 1``) and can never
coincide with an integer point or query. A secondary node whose own tree and
primary node are both internal has an origin where the two splitters cross;
that is where its subproblem lives.
"""

from __future__ import annotations

from typing import Callable

from ..geometry import Point, PointSet


class SecondaryNode:
    __slots__ = ("split2", "box2", "origin", "n", "left", "right", "sub")

    def __init__(self, split2, box2, origin, n, left, right):
        self.split2 = split2
        # doubled (x_lo, x_hi, y_lo, y_hi); None for an unbounded side
        self.box2 = box2
        self.origin = origin
        self.n = n
        self.left = left
        self.right = right
        self.sub = None

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def contains(self, x: int, y: int) -> bool:
        x_lo, x_hi, y_lo, y_hi = self.box2
        X, Y = 2 * x, 2 * y
        return (
            (x_lo is None or x_lo <= X)
            and (x_hi is None or X <= x_hi)
            and (y_lo is None or y_lo <= Y)
            and (y_hi is None or Y <= y_hi)
        )


class PrimaryNode:
    __slots__ = ("split2", "strip2", "n", "left", "right", "secondary")

    def __init__(self, split2, strip2, n, left, right, secondary):
        self.split2 = split2
        self.strip2 = strip2
        self.n = n
        self.left = left
        self.right = right
        self.secondary = secondary

    @property
    def is_leaf(self) -> bool:
        return self.left is None


RangeTreeNode = PrimaryNode | SecondaryNode
Visitor = Callable[[SecondaryNode, list[Point]], None]


def _secondary(pts_by_y: list[Point], split_x2, strip2, y_lo2, y_hi2, visit: Visitor | None) -> SecondaryNode:
    n = len(pts_by_y)
    box2 = (strip2[0], strip2[1], y_lo2, y_hi2)
    if n == 1:
        return SecondaryNode(None, box2, None, 1, None, None)
    mid = (n - 1) // 2
    split2 = 2 * pts_by_y[mid].y + 1
    left = _secondary(pts_by_y[: mid + 1], split_x2, strip2, y_lo2, split2, visit)
    right = _secondary(pts_by_y[mid + 1:], split_x2, strip2, split2, y_hi2, visit)
    origin = None if split_x2 is None else (split_x2, split2)
    node = SecondaryNode(split2, box2, origin, n, left, right)
    if origin is not None and visit is not None:
        visit(node, pts_by_y)
    return node


def _primary(pts_by_x: list[Point], strip2, visit: Visitor | None) -> PrimaryNode:
    n = len(pts_by_x)
    by_y = sorted(pts_by_x, key=lambda p: p.y)
    if n == 1:
        sec = _secondary(by_y, None, strip2, None, None, visit)
        return PrimaryNode(None, strip2, 1, None, None, sec)
    mid = (n - 1) // 2
    split2 = 2 * pts_by_x[mid].x + 1
    left = _primary(pts_by_x[: mid + 1], (strip2[0], split2), visit)
    right = _primary(pts_by_x[mid + 1:], (split2, strip2[1]), visit)
    sec = _secondary(by_y, split2, strip2, None, None, visit)
    return PrimaryNode(split2, strip2, n, left, right, sec)


def build_range_tree(ps: PointSet, visit: Visitor | None = None) -> PrimaryNode | None:
    """Build the tree; ``visit(node, points)`` is called at every node with an origin."""
    if len(ps) == 0:
        return None
    pts = [ps.points[i] for i in ps.by_x]
    return _primary(pts, (None, None), visit)


def search_set(root: PrimaryNode | None, x: int, y: int) -> list[SecondaryNode]:
    """Secondary nodes with an origin on the search paths of ``(x, y)``."""
    out = []
    X, Y = 2 * x, 2 * y
    u = root
    while u is not None and not u.is_leaf:
        v = u.secondary
        while v is not None and not v.is_leaf:
            out.append(v)
            v = v.left if Y < v.split2 else v.right
        u = u.left if X < u.split2 else u.right
    return out


def iter_secondary(root: PrimaryNode | None):
    """Every secondary node, with its primary node."""
    stack = [root] if root is not None else []
    while stack:
        u = stack.pop()
        sec = [u.secondary]
        while sec:
            v = sec.pop()
            yield u, v
            if not v.is_leaf:
                sec.extend((v.left, v.right))
        if not u.is_leaf:
            stack.extend((u.left, u.right))
