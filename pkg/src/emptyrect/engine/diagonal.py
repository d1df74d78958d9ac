"""Implicit handling of rectangles with two defining points in each of two opposite quadrants.

In the canonical frame (``Q1/Q3`` orientation) the left and bottom defining
points are consecutive points ``a, b`` of the staircase ``E`` of maximal
third-quadrant points, and the top and right ones are consecutive points
``w, z`` of the staircase ``F`` of minimal first-quadrant points. Row ``i``
of the area matrix is the pair ``E[i], E[i+1]``, column ``j`` the pair
``F[j], F[j+1]``, and the entry is the area of ``[a.x, z.x] x [b.y, w.y]``.
A pair ``(w, z)`` is admissible for ``(a, b)`` only if both lie below the
lowest second-quadrant point right of ``a`` and left of the leftmost
fourth-quadrant point above ``b``. This gives a contiguous interval of
``F`` per row, so the matrix is a double staircase and inverse Monge.

The ``Q2/Q4`` orientation is the same structure in the x-mirrored frame.
"""

from __future__ import annotations

import bisect

from .._util import MaxSegTree, WorkCounter
from ..geometry import Point, Rect, rect_from_key
from ..monge.envelope import ColumnMaxima
from ..monge.matrix import MatrixOracle
from ..monge.submatrix import CellMax, SubmatrixMaxStructure
from .frame import Frame, Local


def _maximal(pts: list[Local]) -> list[Local]:
    """Maximal points (nothing above-right), left to right."""
    out = []
    top = None
    for t in sorted(pts, key=lambda t: -t.X):
        if top is None or t.Y > top:
            out.append(t)
            top = t.Y
    out.reverse()
    return out


def _minimal(pts: list[Local]) -> list[Local]:
    """Minimal points (nothing below-left), left to right."""
    out = []
    low = None
    for t in sorted(pts, key=lambda t: t.X):
        if low is None or t.Y < low:
            out.append(t)
            low = t.Y
    return out


def _lower_right(pts: list[Local]) -> list[Local]:
    """Points with nothing both lower and to the right, left to right (y ascending)."""
    out = []
    low = None
    for t in sorted(pts, key=lambda t: -t.X):
        if low is None or t.Y < low:
            out.append(t)
            low = t.Y
    out.reverse()
    return out


def _upper_left(pts: list[Local]) -> list[Local]:
    """Points with nothing both higher and to the left, left to right (y ascending)."""
    out = []
    high = None
    for t in sorted(pts, key=lambda t: t.X):
        if high is None or t.Y > high:
            out.append(t)
            high = t.Y
    return out


class DiagonalStructure:
    """Area matrix of one orientation plus the structures answering queries on it."""

    def __init__(self, points: list[Point], origin: tuple[int, int], mirrored: bool = False):
        self.frame = Frame(*origin, sx=-1 if mirrored else 1)
        self.tag = "diagonal:24" if mirrored else "diagonal:13"
        pts = self.frame.points(points)
        self.E = _maximal([t for t in pts if t.X < 0 and t.Y < 0])
        self.F = _minimal([t for t in pts if t.X > 0 and t.Y > 0])
        self.nrows = max(0, len(self.E) - 1)
        self.ncols = max(0, len(self.F) - 1)
        self.empty = True
        self.matrix: MatrixOracle | None = None
        if self.nrows == 0 or self.ncols == 0:
            return

        q2 = _lower_right([t for t in pts if t.X < 0 and t.Y > 0])
        q4 = _upper_left([t for t in pts if t.X > 0 and t.Y < 0])
        q2_x = [t.X for t in q2]
        q4_y = [t.Y for t in q4]
        F = self.F
        f_negy = [-t.Y for t in F]
        f_x = [t.X for t in F]
        self.intervals: list[tuple[int, int]] = []
        spans = []
        for i in range(self.nrows):
            a, b = self.E[i], self.E[i + 1]
            k = bisect.bisect_right(q2_x, a.X)
            lo = 0 if k == len(q2) else bisect.bisect_right(f_negy, -q2[k].Y)
            k = bisect.bisect_right(q4_y, b.Y)
            hi = len(F) - 1 if k == len(q4) else bisect.bisect_left(f_x, q4[k].X) - 1
            self.intervals.append((lo, hi))
            spans.append((lo, hi - 1))

        # world coordinates of the sides each row / column pins down
        wa = [self.frame.world(self.E[i].X, self.E[i + 1].Y) for i in range(self.nrows)]
        wz = [self.frame.world(F[j + 1].X, F[j].Y) for j in range(self.ncols)]
        self._row_xy = wa
        self._col_xy = wz

        def key_of(r: int, c: int) -> tuple:
            ax, by = wa[r]
            zx, wy = wz[c]
            if ax < zx:
                return ((zx - ax) * (wy - by), ax, by, zx, wy)
            return ((ax - zx) * (wy - by), zx, by, ax, wy)

        self.matrix = MatrixOracle(
            self.nrows,
            self.ncols,
            lambda r, c: key_of(r, c)[0],
            spans,
            tiebreak=lambda r, c: key_of(r, c)[1:],
        )
        if all(s[0] > s[1] for s in spans):
            return
        self.empty = False
        self.sub = SubmatrixMaxStructure(self.matrix)
        col_max = ColumnMaxima(self.sub.row_tree).keys()
        row_max = ColumnMaxima(self.sub.col_tree).keys()
        self.col_max = MaxSegTree([None if m is None else CellMax(m[0], m[1], m[2]) for m in col_max])
        # transposed tree: its "rows" are columns of the area matrix
        self.row_max = MaxSegTree([None if m is None else CellMax(m[0], m[2], m[1]) for m in row_max])
        self.e_x = [t.X for t in self.E]
        self.e_negy = [-t.Y for t in self.E]
        self.f_x = f_x
        self.f_negy = f_negy

    @property
    def stored_cells(self) -> int:
        if self.empty:
            return 0
        return self.sub.stored_cells + len(self.col_max) + len(self.row_max)

    @property
    def entry_evals(self) -> int:
        return 0 if self.matrix is None else self.matrix.eval_counter

    def _from_key(self, key) -> Rect:
        area, corners = key
        return rect_from_key((area,) + tuple(corners), self.tag)

    def cell_rect(self, r: int, c: int) -> Rect | None:
        """Rectangle of a matrix cell, or None when the cell is undefined."""
        key = self.matrix.peek_key(r, c)
        return None if key is None else self._from_key(key)

    def _rect(self, cell: CellMax | None) -> Rect | None:
        return None if cell is None else self._from_key(cell.key)

    def query(self, x: int, y: int, work: WorkCounter | None = None) -> Rect | None:
        """Largest matrix rectangle containing ``(x, y)``, or None."""
        if self.empty:
            return None
        if work is None:
            work = WorkCounter()
        X, Y = self.frame.xy(x, y)
        nr, nc = self.nrows, self.ncols
        work.probe(len(self.e_x))
        work.probe(len(self.f_x))
        # columns with z.X >= X start here; columns with w.Y >= Y end here
        j_lo = max(0, bisect.bisect_left(self.f_x, X) - 1)
        j_hi = min(nc - 1, bisect.bisect_right(self.f_negy, -Y) - 1)
        # rows with a.X <= X end here; rows with b.Y <= Y start here
        i_hi = min(nr - 1, bisect.bisect_right(self.e_x, X) - 1)
        i_lo = max(0, bisect.bisect_left(self.e_negy, -Y) - 1)
        if X > 0 and Y > 0:
            cell = self.col_max.query(j_lo, j_hi, work)
        elif X < 0 and Y < 0:
            cell = self.row_max.query(i_lo, i_hi, work)
        elif X < 0:
            cell = None if i_hi < 0 or j_hi < 0 else self.sub.prefix_max(i_hi, j_hi, work)
        else:
            cell = None if i_lo >= nr or j_lo >= nc else self.sub.submatrix_max(i_lo, nr - 1, j_lo, nc - 1, work)
        return self._rect(cell)
