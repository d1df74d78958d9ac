"""Row maxima of staircase totally monotone matrices.

A staircase matrix has every row defined on a prefix ``[0, e_r]`` with
``e_r`` non-decreasing, or is such a matrix after reversing both the row
and the column order. The recursion splits at the middle row: that row and
every row below it are fully defined on ``[0, e_mid]`` (one SMAWK call),
the rows above form a smaller staircase on the same columns, and the rows
below continue as a staircase on the columns right of ``e_mid``. Column
ranges of the two recursive calls are disjoint, so the total cost is
``O((m + n) log m)`` entry evaluations.
"""

from __future__ import annotations

from .matrix import MatrixError, MatrixOracle
from .smawk import smawk_row_maxima


def _ends(m: MatrixOracle) -> list[int] | None:
    """Prefix ends ``e_r`` (-1 for an empty row) if ``m`` is a straight staircase."""
    ends = []
    for r in range(m.nrows):
        s = m.row_span(r)
        if s is None:
            ends.append(-1)
        elif s[0] != 0:
            return None
        else:
            ends.append(s[1])
    if any(a > b for a, b in zip(ends, ends[1:])):
        return None
    return ends


def _reversed(m: MatrixOracle) -> MatrixOracle:
    """Rows and columns reversed, with entries ``v * n + c``.

    The added column term keeps the matrix inverse Monge and makes every row
    maximum unique at the rightmost tie, i.e. the leftmost one of ``m``.
    """
    nr, nc = m.nrows, m.ncols
    spans = []
    for r in range(nr - 1, -1, -1):
        s = m.row_span(r)
        spans.append(None if s is None else (nc - 1 - s[1], nc - 1 - s[0]))
    return MatrixOracle(
        nr, nc, lambda r, c: m.peek_key(nr - 1 - r, nc - 1 - c)[0] * nc + c, spans, counter=m.counter
    )


def _straight(m: MatrixOracle, ends: list[int]) -> list[tuple[int, int] | None]:
    out: list[tuple[int, int] | None] = [None] * m.nrows

    def offer(r: int, c: int, v: int):
        cur = out[r]
        if cur is None or v > cur[1] or (v == cur[1] and c < cur[0]):
            out[r] = (c, v)

    def block(r0: int, r1: int, c0: int, c1: int):
        view = MatrixOracle(
            r1 - r0 + 1,
            c1 - c0 + 1,
            lambda r, c: m.peek_key(r0 + r, c0 + c)[0],
            counter=m.counter,
        )
        for i, (c, v) in enumerate(smawk_row_maxima(view)):
            offer(r0 + i, c0 + c, v)

    # explicit stack of (first row, last row, first column)
    stack = [(0, m.nrows - 1, 0)]
    while stack:
        lo, hi, c0 = stack.pop()
        while lo <= hi and ends[lo] < c0:
            lo += 1  # rows with nothing left in this column range
        if lo > hi:
            continue
        mid = (lo + hi) // 2
        block(mid, hi, c0, ends[mid])
        stack.append((lo, mid - 1, c0))
        if ends[hi] > ends[mid]:
            stack.append((mid + 1, hi, ends[mid] + 1))
    return out


def klawe_staircase_row_maxima(m: MatrixOracle) -> list[tuple[int, int] | None]:
    """Leftmost row maxima ``(col, value)`` of a staircase matrix; None for empty rows."""
    ends = _ends(m)
    if ends is not None:
        return _straight(m, ends)
    rev = _reversed(m)
    ends = _ends(rev)
    if ends is None:
        raise MatrixError("matrix is not a staircase in either orientation")
    nc = m.ncols
    out = [None if x is None else (nc - 1 - x[0], x[1] // nc) for x in _straight(rev, ends)]
    out.reverse()
    return out
