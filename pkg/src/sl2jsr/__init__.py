"""Exact optimal products and joint spectral radius for pairs of 2x2 unimodular matrices."""

from .characters import AlgebraicRadius, Matrices, Triple, char, radius, radius_cmp, word_cmp
from .classifier import Case, OptimalitySet, classify_pair, iv_branch
from .errors import InconsistencyError, InvalidMatrixError, OutOfScopeError, SL2JSRError
from .matrices import L, N, Mat2, MatrixPair, parse_matrix, word_eval
from .scalars import Poly, QuadExt, chebyshev, compare, parse_scalar

__all__ = [
    "AlgebraicRadius", "Matrices", "Triple", "char", "radius", "radius_cmp", "word_cmp",
    "Case", "OptimalitySet", "classify_pair", "iv_branch",
    "InconsistencyError", "InvalidMatrixError", "OutOfScopeError", "SL2JSRError",
    "L", "N", "Mat2", "MatrixPair", "parse_matrix", "word_eval",
    "Poly", "QuadExt", "chebyshev", "compare", "parse_scalar",
]
