"""Top-level preprocessing and query API."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .._util import WorkCounter
from ..anchored import compute_anchored
from ..geometry import DomainError, Point, PointLike, PointSet, Rect, contains_point, xy
from ..stab import StabIndex
from .cases import collect_case_halfplane, collect_case_one_per_quadrant
from .diagonal import DiagonalStructure
from .rangetree import PrimaryNode, SecondaryNode, build_range_tree, search_set


@dataclass
class NodeData:
    """What a secondary node keeps for query time."""

    diagonals: tuple[DiagonalStructure, ...]
    explicit: int  # case (i) / (ii) rectangles it contributed


@dataclass
class BuildStats:
    n: int = 0
    anchored: int = 0
    halfplane: int = 0
    quadrant: int = 0
    subproblem_nodes: int = 0
    sum_nv: int = 0
    diagonal_structures: int = 0
    entry_evals: int = 0
    stab_cells: int = 0
    matrix_cells: int = 0
    seconds: float = 0.0

    @property
    def stored_cells(self) -> int:
        return self.stab_cells + self.matrix_cells

    def as_dict(self) -> dict:
        return {
            "anchored": self.anchored,
            "diagonal_structures": self.diagonal_structures,
            "entry_evals": self.entry_evals,
            "halfplane": self.halfplane,
            "nodes": self.subproblem_nodes,
            "quadrant": self.quadrant,
            "stored_cells": self.stored_cells,
            "sum_nv": self.sum_nv,
        }


@dataclass
class QueryResult:
    rect: Rect
    work: WorkCounter = field(repr=False)

    @property
    def area(self) -> int:
        return self.rect.area

    @property
    def provenance(self) -> str:
        return self.rect.provenance

    @property
    def work_units(self) -> int:
        return self.work.units


class Index:
    """Static index answering largest-empty-rectangle-containing-q queries."""

    def __init__(self, ps: PointSet):
        t0 = time.perf_counter()
        self.ps = ps
        self.stats = BuildStats(n=len(ps))
        explicit: list[Rect] = compute_anchored(ps)
        self.stats.anchored = len(explicit)

        def visit(node: SecondaryNode, pts: list[Point]):
            self.stats.subproblem_nodes += 1
            self.stats.sum_nv += len(pts)
            half = collect_case_halfplane(pts, node.origin)
            quad = collect_case_one_per_quadrant(pts, node.origin)
            self.stats.halfplane += len(half)
            self.stats.quadrant += len(quad)
            explicit.extend(half)
            explicit.extend(quad)
            diags = tuple(
                d
                for d in (DiagonalStructure(pts, node.origin), DiagonalStructure(pts, node.origin, mirrored=True))
                if not d.empty
            )
            for d in diags:
                self.stats.entry_evals += d.entry_evals
                self.stats.matrix_cells += d.stored_cells
            self.stats.diagonal_structures += len(diags)
            node.sub = NodeData(diags, len(half) + len(quad))

        self.root: PrimaryNode | None = build_range_tree(ps, visit)
        self.stab = StabIndex(explicit)
        self.stats.stab_cells = self.stab.stored_cells
        self.stats.seconds = time.perf_counter() - t0

    def query_node(self, v: SecondaryNode, q: PointLike, work: WorkCounter | None = None) -> Rect | None:
        x, y = xy(q)
        if not v.contains(x, y):
            raise DomainError(f"query {(x, y)} is outside the node's box")
        if v.sub is None:
            return None
        best = None
        for d in v.sub.diagonals:
            r = d.query(x, y, work)
            if r is not None and (best is None or r.key > best.key):
                best = r
        return best

    def query(self, q: PointLike) -> QueryResult:
        x, y = xy(q)
        if not contains_point(self.ps.bounds, (x, y)):
            raise DomainError(f"query {(x, y)} lies outside the bounds")
        work = WorkCounter()
        best = self.stab.stab_max_area((x, y), work)
        for v in search_set(self.root, x, y):
            work.visit()
            r = self.query_node(v, (x, y), work)
            if r is not None and (best is None or r.key > best.key):
                best = r
        # the anchored set always covers every point of the box
        assert best is not None
        return QueryResult(best, work)


def preprocess(ps: PointSet) -> Index:
    return Index(ps)


def query(idx: Index, q: PointLike) -> QueryResult:
    return idx.query(q)
