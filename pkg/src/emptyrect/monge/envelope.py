"""Compact upper envelopes of the rows of a partial inverse-Monge matrix.

Each row, viewed as a function of the column, is a pseudo-segment: two rows
switch dominance at most once on their common columns, and the later row wins
on the right. An envelope therefore only needs its breakpoints: a sorted list
of blocks ``(start, end, row)`` meaning "row attains the maximum on columns
start..end". Values are never filled in column by column.
"""

from __future__ import annotations

import bisect
from typing import Iterator, NamedTuple

from .._util import WorkCounter
from .matrix import MatrixOracle


class Block(NamedTuple):
    start: int
    end: int
    row: int


class Crossing(NamedTuple):
    column: int | None
    disjoint: bool = False


class Envelope:
    """Ordered, non-overlapping blocks; gaps are columns no row defines."""

    __slots__ = ("blocks", "_starts")

    def __init__(self, blocks: list[Block] | None = None):
        self.blocks = blocks or []
        self._starts = [b.start for b in self.blocks]

    def __len__(self):
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __eq__(self, other):
        return isinstance(other, Envelope) and self.blocks == other.blocks

    def __repr__(self):
        return f"Envelope({self.blocks})"

    def locate(self, col: int, work: WorkCounter | None = None) -> int | None:
        """Index of the block covering ``col``, or None."""
        if work is not None:
            work.probe(len(self._starts))
        i = bisect.bisect_right(self._starts, col) - 1
        if i >= 0 and self.blocks[i].end >= col:
            return i
        return None

    def row_at(self, col: int) -> int | None:
        i = self.locate(col)
        return None if i is None else self.blocks[i].row


def _first_win(oracle: MatrixOracle, row_a: int, row_b: int, lo: int, hi: int) -> int | None:
    """Smallest c in lo..hi where row_b's key beats row_a's, assuming monotone switch."""
    key = oracle.key
    if key(row_b, lo) > key(row_a, lo):
        return lo
    if not key(row_b, hi) > key(row_a, hi):
        return None
    # invariant: row_a wins at lo, row_b wins at hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if key(row_b, mid) > key(row_a, mid):
            hi = mid
        else:
            lo = mid
    return hi


def cross_column(
    oracle: MatrixOracle, row_a: int, row_b: int, overlap: tuple[int, int] | None = None
) -> Crossing:
    """Where ``row_b`` (the later row) starts to beat ``row_a``.

    ``overlap`` defaults to the intersection of the two rows' spans. Returns
    ``Crossing(None)`` when row_a dominates throughout and
    ``Crossing(None, disjoint=True)`` when there is nothing to compare.
    """
    if row_a > row_b:
        raise ValueError("row_a must precede row_b")
    sa, sb = oracle.row_span(row_a), oracle.row_span(row_b)
    if sa is None or sb is None:
        return Crossing(None, True)
    lo, hi = max(sa[0], sb[0]), min(sa[1], sb[1])
    if overlap is not None:
        lo, hi = max(lo, overlap[0]), min(hi, overlap[1])
    if lo > hi:
        return Crossing(None, True)
    return Crossing(_first_win(oracle, row_a, row_b, lo, hi))


def _push(out: list[Block], start: int, end: int, row: int):
    if out:
        last = out[-1]
        if last.row == row and last.end + 1 == start:
            out[-1] = Block(last.start, end, row)
            return
    out.append(Block(start, end, row))


def merge_envelopes(oracle: MatrixOracle, e1: Envelope, e2: Envelope) -> Envelope:
    """Upper envelope of two envelopes whose row sets are ordered (all of one before the other)."""
    if not e1.blocks:
        return Envelope(list(e2.blocks))
    if not e2.blocks:
        return Envelope(list(e1.blocks))
    if max(b.row for b in e1.blocks) > min(b.row for b in e2.blocks):
        e1, e2 = e2, e1
    b1, b2 = e1.blocks, e2.blocks
    cuts = sorted({b.start for b in b1} | {b.end + 1 for b in b1} | {b.start for b in b2} | {b.end + 1 for b in b2})
    out: list[Block] = []
    i = j = 0
    for k in range(len(cuts) - 1):
        s, e = cuts[k], cuts[k + 1] - 1
        while i < len(b1) and b1[i].end < s:
            i += 1
        while j < len(b2) and b2[j].end < s:
            j += 1
        r1 = b1[i].row if i < len(b1) and b1[i].start <= s else None
        r2 = b2[j].row if j < len(b2) and b2[j].start <= s else None
        if r1 is None and r2 is None:
            continue
        if r2 is None:
            _push(out, s, e, r1)
        elif r1 is None:
            _push(out, s, e, r2)
        else:
            c = _first_win(oracle, r1, r2, s, e)
            if c is None:
                _push(out, s, e, r1)
            else:
                if c > s:
                    _push(out, s, c - 1, r1)
                _push(out, c, e, r2)
    return Envelope(out)


class EnvelopeNode:
    __slots__ = ("lo", "hi", "left", "right", "envelope")

    def __init__(self, lo, hi, left, right, envelope):
        self.lo = lo
        self.hi = hi
        self.left = left
        self.right = right
        self.envelope = envelope

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    @property
    def is_leaf(self) -> bool:
        return self.left is None


class EnvelopeTree:
    """Balanced tree over the rows; every node keeps the envelope of its rows."""

    def __init__(self, oracle: MatrixOracle):
        self.oracle = oracle
        self.nodes: list[EnvelopeNode] = []
        self.root = self._build(0, oracle.nrows - 1) if oracle.nrows else None

    def _build(self, lo: int, hi: int) -> EnvelopeNode:
        if lo == hi:
            span = self.oracle.row_span(lo)
            env = Envelope([Block(span[0], span[1], lo)] if span else [])
            node = EnvelopeNode(lo, hi, None, None, env)
        else:
            mid = (lo + hi) // 2
            left = self._build(lo, mid)
            right = self._build(mid + 1, hi)
            env = merge_envelopes(self.oracle, left.envelope, right.envelope)
            node = EnvelopeNode(lo, hi, left, right, env)
        self.nodes.append(node)
        return node

    @property
    def breakpoints(self) -> int:
        return sum(len(n.envelope) for n in self.nodes)

    def canonical(self, lo: int, hi: int, work: WorkCounter | None = None) -> list[EnvelopeNode]:
        """Disjoint nodes whose row ranges union to ``lo..hi`` (clamped)."""
        out: list[EnvelopeNode] = []
        if self.root is None:
            return out
        lo = max(lo, 0)
        hi = min(hi, self.oracle.nrows - 1)
        if lo > hi:
            return out
        stack = [self.root]
        while stack:
            node = stack.pop()
            if work is not None:
                work.visit()
            if node.hi < lo or node.lo > hi:
                continue
            if lo <= node.lo and node.hi <= hi:
                out.append(node)
                continue
            stack.append(node.right)
            stack.append(node.left)
        return out


def build_envelope_tree(oracle: MatrixOracle) -> EnvelopeTree:
    return EnvelopeTree(oracle)


class ColumnMaxima:
    """Column maxima in block form; values are evaluated only when asked for."""

    def __init__(self, tree: EnvelopeTree):
        self.oracle = tree.oracle
        self.envelope = tree.root.envelope if tree.root else Envelope()

    @property
    def blocks(self) -> list[Block]:
        return self.envelope.blocks

    def at(self, col: int) -> tuple[int, int] | None:
        """``(row, value)`` attaining the maximum of column ``col``."""
        row = self.envelope.row_at(col)
        if row is None:
            return None
        return row, self.oracle.value(row, col)

    def keys(self) -> list:
        """Per-column ``(key, row, col)`` or None, one evaluation per defined column."""
        out: list = [None] * self.oracle.ncols
        for b in self.envelope.blocks:
            for c in range(b.start, b.end + 1):
                out[c] = (self.oracle.key(b.row, c), b.row, c)
        return out

    def __iter__(self):
        for b in self.envelope.blocks:
            for c in range(b.start, b.end + 1):
                yield c, b.row, self.oracle.value(b.row, c)


def column_maxima(tree: EnvelopeTree) -> ColumnMaxima:
    return ColumnMaxima(tree)
