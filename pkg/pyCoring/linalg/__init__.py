"""Exact linear algebra over ℚ and 𝔽_p."""


from .matrices import (DenseMatrix, AffineSolutionSet, dense, rows_of, rref,
    rank, mat_vec, solve_affine, quotient_basis)
from .systems import KeyedQuotient, LinearSystem, span_basis


__all__ = ["DenseMatrix", "AffineSolutionSet", "dense", "rows_of", "rref",
    "rank", "mat_vec", "solve_affine", "quotient_basis", "KeyedQuotient",
    "LinearSystem", "span_basis"]
