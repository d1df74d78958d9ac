"""Row maxima of totally monotone matrices (SMAWK)."""

from __future__ import annotations

from .matrix import MatrixError, MatrixOracle


def smawk_row_maxima(m: MatrixOracle) -> list[tuple[int, int]]:
    """``[(argmax_col, value), ...]`` per row, leftmost column on ties.

    Every entry must be defined. The result is exact for inverse-Monge input;
    for other input the columns are unspecified but the call still returns.
    """
    if m.nrows == 0 or m.ncols == 0:
        raise MatrixError("SMAWK needs a non-empty matrix")
    for r in range(m.nrows):
        if m.row_span(r) != (0, m.ncols - 1):
            raise MatrixError(f"row {r} is not fully defined")
    lookup = m.value
    result: dict[int, tuple[int, int]] = {}

    def solve(rows: list[int], cols: list[int]):
        if not rows:
            return
        # REDUCE: keep at most len(rows) candidate columns
        stack: list[int] = []
        for c in cols:
            while stack:
                r = rows[len(stack) - 1]
                if lookup(r, stack[-1]) >= lookup(r, c):
                    break
                stack.pop()
            if len(stack) < len(rows):
                stack.append(c)
        cols = stack
        solve(rows[1::2], cols)
        # INTERPOLATE: even rows search between their odd neighbours' answers
        j = 0
        for i in range(0, len(rows), 2):
            r = rows[i]
            stop = result[rows[i + 1]][0] if i + 1 < len(rows) else cols[-1]
            best_c = cols[j]
            best_v = lookup(r, best_c)
            while cols[j] != stop and j + 1 < len(cols):
                j += 1
                v = lookup(r, cols[j])
                if v > best_v:
                    best_c, best_v = cols[j], v
            result[r] = (best_c, best_v)

    solve(list(range(m.nrows)), list(range(m.ncols)))
    return [result[r] for r in range(m.nrows)]


def brute_row_maxima(m: MatrixOracle) -> list[tuple[int, int] | None]:
    """Leftmost maximum of each row by a full scan (None for an empty row)."""
    out = []
    for r in range(m.nrows):
        span = m.row_span(r)
        if span is None:
            out.append(None)
            continue
        best_c, best_v = span[0], m.value(r, span[0])
        for c in range(span[0] + 1, span[1] + 1):
            v = m.value(r, c)
            if v > best_v:
                best_c, best_v = c, v
        out.append((best_c, best_v))
    return out
