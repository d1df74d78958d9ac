"""Lazily evaluated partial matrices.

A :class:`MatrixOracle` never materialises its entries. Each row is defined
on one contiguous column interval (its *span*); everything outside is
undefined, and undefined is reported as ``None`` rather than as a sentinel
value.

Comparisons between cells go through :meth:`MatrixOracle.key`, which returns
``(value, tiebreak)``. The default tiebreak ``(-row, -col)`` makes the smaller
row (then the smaller column) win ties, so every maximum is unique.
"""

from __future__ import annotations

import bisect
from typing import Callable, Optional, Sequence

Span = Optional[tuple[int, int]]


class MatrixError(ValueError):
    pass


class EvalCounter:
    """Monotone count of entry evaluations, shared by an oracle and its transpose."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0


def _default_tiebreak(r: int, c: int):
    return (-r, -c)


def _normalise_spans(spans, ncols) -> list[Span]:
    out: list[Span] = []
    for s in spans:
        if s is None:
            out.append(None)
            continue
        lo, hi = s
        lo = max(lo, 0)
        hi = min(hi, ncols - 1)
        out.append((lo, hi) if lo <= hi else None)
    return out


def column_spans(raw_spans: Sequence[tuple[int, int]], ncols: int) -> list[Span] | None:
    """Column spans of a double-staircase matrix from its raw row spans.

    ``raw_spans[r] = (lo, hi)`` with ``lo > hi`` allowed for empty rows. Both
    endpoint sequences must be monotone in the same direction; otherwise the
    matrix is not double-staircase and None is returned.
    """
    los = [s[0] for s in raw_spans]
    his = [s[1] for s in raw_spans]

    def nondecreasing(seq):
        return all(a <= b for a, b in zip(seq, seq[1:]))

    def nonincreasing(seq):
        return all(a >= b for a, b in zip(seq, seq[1:]))

    out: list[Span] = []
    if nondecreasing(los) and nondecreasing(his):
        for c in range(ncols):
            first = bisect.bisect_left(his, c)  # rows with hi >= c form a suffix
            last = bisect.bisect_right(los, c) - 1  # rows with lo <= c form a prefix
            out.append((first, last) if first <= last else None)
        return out
    if nonincreasing(los) and nonincreasing(his):
        neg_lo = [-v for v in los]
        neg_hi = [-v for v in his]
        for c in range(ncols):
            first = bisect.bisect_left(neg_lo, -c)  # lo <= c is a suffix
            last = bisect.bisect_right(neg_hi, -c) - 1  # hi >= c is a prefix
            out.append((first, last) if first <= last else None)
        return out
    return None


class MatrixOracle:
    """A partial integer matrix given by an entry function and row spans.

    ``entry(r, c)`` is only ever called on defined cells. ``row_spans[r]`` is
    an inclusive ``(lo, hi)`` column interval, or None / ``lo > hi`` for an
    empty row. ``col_spans`` may be supplied; otherwise it is derived when the
    row spans form a double staircase.
    """

    def __init__(
        self,
        nrows: int,
        ncols: int,
        entry: Callable[[int, int], int],
        row_spans: Sequence[Span] | None = None,
        *,
        tiebreak: Callable[[int, int], object] | None = None,
        col_spans: Sequence[Span] | None = None,
        counter: EvalCounter | None = None,
    ):
        if nrows < 0 or ncols < 0:
            raise MatrixError("negative dimensions")
        self.nrows = nrows
        self.ncols = ncols
        self._entry = entry
        self._tiebreak = tiebreak or _default_tiebreak
        if row_spans is None:
            row_spans = [(0, ncols - 1)] * nrows
        if len(row_spans) != nrows:
            raise MatrixError("need one span per row")
        raw = [s if s is not None else (1, 0) for s in row_spans]
        self._row_spans = _normalise_spans(raw, ncols)
        if col_spans is None:
            derived = column_spans(raw, ncols)
            self._col_spans = derived
        else:
            self._col_spans = _normalise_spans(col_spans, nrows)
        self.counter = counter or EvalCounter()

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | None]], **kw) -> "MatrixOracle":
        """Oracle over an explicit table; ``None`` marks undefined cells."""
        nrows = len(rows)
        ncols = max((len(r) for r in rows), default=0)
        spans: list[Span] = []
        for i, row in enumerate(rows):
            idx = [c for c, v in enumerate(row) if v is not None]
            if not idx:
                spans.append(None)
                continue
            if idx[-1] - idx[0] + 1 != len(idx):
                raise MatrixError(f"row {i} is not contiguous")
            spans.append((idx[0], idx[-1]))
        table = [list(r) for r in rows]
        return cls(nrows, ncols, lambda r, c: table[r][c], spans, **kw)

    @property
    def eval_counter(self) -> int:
        return self.counter.count

    def row_span(self, r: int) -> Span:
        return self._row_spans[r]

    def col_span(self, c: int) -> Span:
        if self._col_spans is None:
            raise MatrixError("column spans are unavailable: not a double staircase")
        return self._col_spans[c]

    @property
    def is_double_staircase(self) -> bool:
        return self._col_spans is not None

    def defined(self, r: int, c: int) -> bool:
        s = self._row_spans[r]
        return s is not None and s[0] <= c <= s[1]

    def value(self, r: int, c: int) -> int | None:
        if not self.defined(r, c):
            return None
        self.counter.count += 1
        return self._entry(r, c)

    def key(self, r: int, c: int):
        """Counted ``(value, tiebreak)`` of a cell, or None when undefined."""
        if not self.defined(r, c):
            return None
        self.counter.count += 1
        return (self._entry(r, c), self._tiebreak(r, c))

    def peek_key(self, r: int, c: int):
        """Like :meth:`key` but not charged to the shared counter."""
        if not self.defined(r, c):
            return None
        return (self._entry(r, c), self._tiebreak(r, c))

    def transposed(self) -> "MatrixOracle":
        """View with rows and columns swapped; cell keys and the counter are shared."""
        if self._col_spans is None:
            raise MatrixError("only double-staircase matrices can be transposed")
        entry, tb = self._entry, self._tiebreak
        return MatrixOracle(
            self.ncols,
            self.nrows,
            lambda c, r: entry(r, c),
            self._col_spans,
            tiebreak=lambda c, r: tb(r, c),
            col_spans=self._row_spans,
            counter=self.counter,
        )

    def dense(self) -> list[list[int | None]]:
        """Every entry, uncounted. For tests and small matrices only."""
        return [
            [self._entry(r, c) if self.defined(r, c) else None for c in range(self.ncols)]
            for r in range(self.nrows)
        ]

    def __repr__(self):
        return f"MatrixOracle({self.nrows}x{self.ncols}, evals={self.counter.count})"
