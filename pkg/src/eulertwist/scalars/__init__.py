"""Exact scalars and matrices."""

from .fields import (QQ, ExtElement, Extension, Rationals, common_field,
                     field_arith, field_from_json, format_rational,
                     parse_rational, quadratic_field)
from .matrix import (Mat, block_matrix, det, mat_inverse, mat_nullspace,
                     mat_rank, mat_rref, mat_solve, row_echelon)
from .qpoly import QPoly, poly_gcdex
from .sparse import RankAccumulator, sparse_rank

__all__ = [
    "QQ", "Rationals", "Extension", "ExtElement", "QPoly", "poly_gcdex",
    "Mat", "block_matrix", "det", "mat_inverse", "mat_nullspace", "mat_rank",
    "mat_rref", "mat_solve", "row_echelon", "field_arith", "field_from_json",
    "format_rational", "parse_rational", "quadratic_field", "common_field",
    "RankAccumulator", "sparse_rank",
]
