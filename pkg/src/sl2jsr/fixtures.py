"""Named matrices used throughout the tests and served by ``sl2jsr fixtures``."""

from __future__ import annotations

from .matrices import L, N, Mat2, MatrixPair
from .scalars import QuadExt

_SQRT6 = QuadExt(0, 1, 1, 6)

C = Mat2(9, 8, 1, 1)
D = Mat2(5, -1, 1, 0)
E = Mat2(
    (17 - 2 * _SQRT6) / 10,
    (-12 + 2 * _SQRT6) / 10,
    (-3 - 2 * _SQRT6) / 10,
    (8 + 2 * _SQRT6) / 10,
)
G = Mat2(5, -4, 4, -3)

# unipotent generators with off-diagonal product 1/6 satisfy a^2 b^3 a^2 == b a^6 b,
# so this pair does not generate a free semigroup
SQRT6_PAIR = MatrixPair(Mat2(1, _SQRT6 / 6, 0, 1), Mat2(1, 0, _SQRT6 / 6, 1))
# same shape with off-diagonal sqrt6; here the two words differ
SQRT6_WIDE_PAIR = MatrixPair(Mat2(1, _SQRT6, 0, 1), Mat2(1, 0, _SQRT6, 1))

FIXTURES = {"C": C, "D": D, "E": E, "G": G, "L": L, "N": N}

# one integer pair for each of the three trace regimes of the unequal-trace case
SAMPLE_PAIRS = {
    "iv1": MatrixPair(L, L * N),
    "iv2": MatrixPair(L * N * L, N * L * N ** 3),
    "iv3a": MatrixPair(L ** 3 * N, N ** 2 * L * N ** 2),
    "iv3b": MatrixPair(L ** 11, L * N * L),
}


def parabolic_standard_pair(r) -> MatrixPair:
    """``([[1, 0], [r, 1]], [[1, r], [0, 1]])``: equal traces, well oriented for ``r > 0``."""
    return MatrixPair(Mat2(1, 0, r, 1), Mat2(1, r, 0, 1))


__all__ = ["C", "D", "E", "G", "L", "N", "FIXTURES", "SAMPLE_PAIRS", "SQRT6_PAIR", "SQRT6_WIDE_PAIR",
           "parabolic_standard_pair"]
