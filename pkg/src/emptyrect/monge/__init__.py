"""Row/column maxima and submatrix maxima of partial inverse-Monge matrices."""

from .envelope import (
    Block,
    ColumnMaxima,
    Crossing,
    Envelope,
    EnvelopeTree,
    build_envelope_tree,
    column_maxima,
    cross_column,
    merge_envelopes,
)
from .klawe import klawe_staircase_row_maxima
from .matrix import EvalCounter, MatrixError, MatrixOracle
from .smawk import brute_row_maxima, smawk_row_maxima
from .submatrix import (
    CellMax,
    SubmatrixMaxStructure,
    build_submatrix_structure,
    prefix_max,
    row_range_max,
    submatrix_max,
)

__all__ = [
    "Block",
    "CellMax",
    "ColumnMaxima",
    "Crossing",
    "Envelope",
    "EnvelopeTree",
    "EvalCounter",
    "MatrixError",
    "MatrixOracle",
    "SubmatrixMaxStructure",
    "brute_row_maxima",
    "build_envelope_tree",
    "build_submatrix_structure",
    "column_maxima",
    "cross_column",
    "klawe_staircase_row_maxima",
    "merge_envelopes",
    "prefix_max",
    "row_range_max",
    "smawk_row_maxima",
    "submatrix_max",
]
