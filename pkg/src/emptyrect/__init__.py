"""Largest empty axis-parallel rectangle containing a query point."""

from .anchored import compute_anchored
from .engine import Index, QueryResult, preprocess, query
from .generate import generate
from .geometry import (
    DomainError,
    GeometryError,
    OracleSizeError,
    Point,
    PointSet,
    Rect,
    ValidationError,
    area,
    contains_point,
    enumerate_maximal_empty,
    interior_empty,
    is_maximal_empty,
    normalize_point_set,
    oracle_largest_containing,
)
from .pointfile import ParseError, read_points, write_points
from .stab import StabIndex, build_stab_index, stab_max_area

__all__ = [
    "DomainError",
    "GeometryError",
    "Index",
    "OracleSizeError",
    "ParseError",
    "Point",
    "PointSet",
    "QueryResult",
    "Rect",
    "StabIndex",
    "ValidationError",
    "area",
    "build_stab_index",
    "compute_anchored",
    "contains_point",
    "enumerate_maximal_empty",
    "generate",
    "interior_empty",
    "is_maximal_empty",
    "normalize_point_set",
    "oracle_largest_containing",
    "preprocess",
    "query",
    "read_points",
    "stab_max_area",
    "write_points",
]
