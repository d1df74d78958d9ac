"""Row-interval, prefix and contiguous-submatrix maxima of a double-staircase matrix.

Two envelope trees are kept: one over the rows (blocks are column ranges)
and one over the columns of the transposed matrix (blocks are row ranges).
The transposed tree answers "max of row r over columns a..b": split a..b into
canonical column nodes and read each node's envelope at row r. The row tree
stores, per envelope block, the block maximum obtained from that routine,
plus cumulative prefix maxima, so prefix and submatrix queries touch only
O(log n) envelopes and at most two partial blocks per envelope.
"""

from __future__ import annotations

import bisect
from typing import NamedTuple

from .._util import MaxSegTree, WorkCounter
from .envelope import EnvelopeNode, EnvelopeTree
from .matrix import MatrixOracle


class CellMax(NamedTuple):
    key: tuple
    row: int
    col: int

    @property
    def value(self):
        return self.key[0]


def _better(a: CellMax | None, b: CellMax | None) -> CellMax | None:
    if a is None:
        return b
    if b is None or a.key >= b.key:
        return a
    return b


class _BlockTable:
    """Per-envelope block maxima with prefix maxima and a range-max tree."""

    __slots__ = ("starts", "ends", "maxima", "prefix", "tree")

    def __init__(self, node: EnvelopeNode, maxima: list[CellMax]):
        self.starts = [b.start for b in node.envelope.blocks]
        self.ends = [b.end for b in node.envelope.blocks]
        self.maxima = maxima
        prefix: list[CellMax] = []
        run = None
        for m in maxima:
            run = _better(run, m)
            prefix.append(run)
        self.prefix = prefix
        self.tree = MaxSegTree(maxima)

    def cells(self) -> int:
        return len(self.maxima) + len(self.prefix)


class SubmatrixMaxStructure:
    def __init__(self, oracle: MatrixOracle):
        self.oracle = oracle
        self.row_tree = EnvelopeTree(oracle)
        self.col_tree = EnvelopeTree(oracle.transposed())
        self.tables: dict[int, _BlockTable] = {}
        for node in self.row_tree.nodes:
            maxima = []
            for b in node.envelope.blocks:
                m = self._row_range(b.row, b.start, b.end, None)
                assert m is not None, "envelope block with no defined entry"
                maxima.append(m)
            self.tables[id(node)] = _BlockTable(node, maxima)

    @property
    def stored_cells(self) -> int:
        """Envelope blocks of both trees plus stored block and prefix maxima."""
        return (
            self.row_tree.breakpoints
            + self.col_tree.breakpoints
            + sum(t.cells() for t in self.tables.values())
        )

    def _key(self, r: int, c: int, work: WorkCounter | None):
        if work is None:
            return self.oracle.key(r, c)
        work.evaluate()
        return self.oracle.peek_key(r, c)

    def _row_range(self, rho: int, lo: int, hi: int, work: WorkCounter | None) -> CellMax | None:
        span = self.oracle.row_span(rho)
        if span is None:
            return None
        lo, hi = max(lo, span[0]), min(hi, span[1])
        if lo > hi:
            return None
        best = None
        for w in self.col_tree.canonical(lo, hi, work):
            i = w.envelope.locate(rho, work)
            if i is None:
                continue
            col = w.envelope.blocks[i].row
            best = _better(best, CellMax(self._key(rho, col, work), rho, col))
        return best

    def row_range_max(self, rho: int, lo: int, hi: int, work: WorkCounter | None = None) -> CellMax | None:
        """Maximum of row ``rho`` over columns ``lo..hi``; None if no entry is defined there."""
        if work is None:
            work = WorkCounter()
        return self._row_range(rho, lo, hi, work)

    def _node_interval(self, node: EnvelopeNode, lo: int, hi: int, work: WorkCounter) -> CellMax | None:
        table = self.tables[id(node)]
        blocks = node.envelope.blocks
        work.probe(len(blocks))
        first = bisect.bisect_left(table.ends, lo)  # first block ending at or after lo
        last = bisect.bisect_right(table.starts, hi) - 1  # last block starting at or before hi
        if first > last:
            return None
        best = None
        full_lo, full_hi = first, last
        b = blocks[first]
        if b.start < lo or b.end > hi:
            best = _better(best, self._row_range(b.row, max(b.start, lo), min(b.end, hi), work))
            full_lo = first + 1
        if last >= full_lo:
            b = blocks[last]
            if b.end > hi:
                best = _better(best, self._row_range(b.row, max(b.start, lo), hi, work))
                full_hi = last - 1
        if full_lo <= full_hi:
            if full_lo == 0:
                best = _better(best, table.prefix[full_hi])
            else:
                best = _better(best, table.tree.query(full_lo, full_hi, work))
        return best

    def prefix_max(self, rho_max: int, pi_max: int, work: WorkCounter | None = None) -> CellMax | None:
        """Maximum over rows ``0..rho_max`` and columns ``0..pi_max``."""
        if work is None:
            work = WorkCounter()
        best = None
        for node in self.row_tree.canonical(0, rho_max, work):
            table = self.tables[id(node)]
            work.probe(len(table.ends))
            k = bisect.bisect_right(table.ends, pi_max)  # blocks fully before pi_max
            if k:
                best = _better(best, table.prefix[k - 1])
            if k < len(table.starts) and table.starts[k] <= pi_max:
                row = node.envelope.blocks[k].row
                best = _better(best, self._row_range(row, table.starts[k], pi_max, work))
        return best

    def submatrix_max(
        self, r_lo: int, r_hi: int, c_lo: int, c_hi: int, work: WorkCounter | None = None
    ) -> CellMax | None:
        """Maximum over the contiguous submatrix ``r_lo..r_hi`` x ``c_lo..c_hi``."""
        if work is None:
            work = WorkCounter()
        c_lo = max(c_lo, 0)
        c_hi = min(c_hi, self.oracle.ncols - 1)
        if c_lo > c_hi:
            return None
        best = None
        for node in self.row_tree.canonical(r_lo, r_hi, work):
            best = _better(best, self._node_interval(node, c_lo, c_hi, work))
        return best


def build_submatrix_structure(oracle: MatrixOracle) -> SubmatrixMaxStructure:
    return SubmatrixMaxStructure(oracle)


def row_range_max(s: SubmatrixMaxStructure, rho: int, lo: int, hi: int, work=None):
    return s.row_range_max(rho, lo, hi, work)


def prefix_max(s: SubmatrixMaxStructure, rho_max: int, pi_max: int, work=None):
    return s.prefix_max(rho_max, pi_max, work)


def submatrix_max(s: SubmatrixMaxStructure, r_lo: int, r_hi: int, c_lo: int, c_hi: int, work=None):
    return s.submatrix_max(r_lo, r_hi, c_lo, c_hi, work)
