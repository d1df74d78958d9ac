"""Local coordinate frames around a subproblem origin.

An origin sits on two splitter lines, which lie half-way between integer
coordinates, so it is stored doubled: ``(ox2, oy2)`` means
``(ox2 / 2, oy2 / 2)``. In a frame every point becomes ``(X, Y)`` with
``X = sx * (2x - ox2)`` (axes optionally swapped first). Doubled
coordinates of integer points are odd, so nothing ever lies on an axis, and
the reflections and transpositions reduce every symmetric case to one
canonical orientation.
"""

from __future__ import annotations

from typing import NamedTuple

from ..geometry import Point, Rect


class Local(NamedTuple):
    X: int
    Y: int
    p: Point


class Frame(NamedTuple):
    ox2: int
    oy2: int
    sx: int = 1
    sy: int = 1
    swap: bool = False

    def xy(self, x: int, y: int) -> tuple[int, int]:
        dx, dy = 2 * x - self.ox2, 2 * y - self.oy2
        if self.swap:
            dx, dy = dy, dx
        return self.sx * dx, self.sy * dy

    def points(self, pts) -> list[Local]:
        out = []
        for p in pts:
            X, Y = self.xy(p.x, p.y)
            out.append(Local(X, Y, p))
        return out

    def world(self, X: int, Y: int) -> tuple[int, int]:
        u, v = self.sx * X, self.sy * Y
        if self.swap:
            u, v = v, u
        return (u + self.ox2) // 2, (v + self.oy2) // 2

    def rect(self, X_lo: int, X_hi: int, Y_lo: int, Y_hi: int, tag: str) -> Rect:
        x1, y1 = self.world(X_lo, Y_lo)
        x2, y2 = self.world(X_hi, Y_hi)
        return Rect(min(x1, x2), max(x1, x2), min(y1, y2), max(y1, y2), tag)
