"""Range-tree decomposition, per-node subproblems and the query API."""

from .cases import collect_case_halfplane, collect_case_one_per_quadrant
from .diagonal import DiagonalStructure
from .index import BuildStats, Index, QueryResult, preprocess, query
from .rangetree import PrimaryNode, SecondaryNode, build_range_tree, search_set


def build_diagonal_structures(points, origin) -> tuple[DiagonalStructure, DiagonalStructure]:
    """Both orientations of the diagonal structure at one origin."""
    return DiagonalStructure(points, origin), DiagonalStructure(points, origin, mirrored=True)


__all__ = [
    "BuildStats",
    "DiagonalStructure",
    "Index",
    "PrimaryNode",
    "QueryResult",
    "SecondaryNode",
    "build_diagonal_structures",
    "build_range_tree",
    "collect_case_halfplane",
    "collect_case_one_per_quadrant",
    "preprocess",
    "query",
    "search_set",
]
