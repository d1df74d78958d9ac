"""Small shared helpers: a max segment tree and a query-local work counter."""

from __future__ import annotations


class WorkCounter:
    """Query-local tally of elementary work (node visits, probes, evaluations)."""

    __slots__ = ("units", "evals", "nodes")

    def __init__(self):
        self.units = 0
        self.evals = 0
        self.nodes = 0

    def visit(self, k: int = 1):
        self.nodes += k
        self.units += k

    def probe(self, length: int):
        # cost of a binary search over `length` items
        self.units += max(1, length.bit_length())

    def evaluate(self, k: int = 1):
        self.evals += k
        self.units += k


class MaxSegTree:
    """Static range-maximum tree over comparable items; ``None`` is neutral."""

    __slots__ = ("size", "n", "tree")

    def __init__(self, items):
        items = list(items)
        self.n = len(items)
        size = 1
        while size < max(1, self.n):
            size *= 2
        self.size = size
        tree = [None] * (2 * size)
        tree[size:size + self.n] = items
        for i in range(size - 1, 0, -1):
            a, b = tree[2 * i], tree[2 * i + 1]
            if a is None:
                tree[i] = b
            elif b is None or a >= b:
                tree[i] = a
            else:
                tree[i] = b
        self.tree = tree

    def __len__(self):
        return self.n

    def query(self, lo: int, hi: int, work: WorkCounter | None = None):
        """Maximum over positions ``lo..hi`` inclusive (clamped); None if empty."""
        lo = max(lo, 0)
        hi = min(hi, self.n - 1)
        if lo > hi:
            return None
        res = None
        tree = self.tree
        lo += self.size
        hi += self.size + 1
        steps = 0
        while lo < hi:
            steps += 1
            if lo & 1:
                v = tree[lo]
                if v is not None and (res is None or v > res):
                    res = v
                lo += 1
            if hi & 1:
                hi -= 1
                v = tree[hi]
                if v is not None and (res is None or v > res):
                    res = v
            lo >>= 1
            hi >>= 1
        if work is not None:
            work.units += steps
        return res
