from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from sl2jsr.fixtures import SQRT6_PAIR
from sl2jsr.matrices import (
    IDENTITY, L, N, Mat2, MatrixPair, commute, find_matrices, normalize_sign, parse_matrix, word_eval,
)
from sl2jsr.scalars import QuadExt
from sl2jsr.words import expand


def ln_product(factors):
    M = IDENTITY
    for f in factors:
        M = M * (L if f == "L" else N)
    return M


ln_words = st.lists(st.sampled_from("LN"), max_size=10)


def test_product_and_invariants():
    LN = L * N
    assert LN == Mat2(1, 1, 1, 2)
    assert LN.det() == 1 and LN.tr() == 3


def test_word_eval():
    pair = MatrixPair(L, L * N)
    AB = word_eval("ab", pair)
    assert AB == Mat2(1, 1, 2, 3) and AB.tr() == 4
    assert word_eval("Aab", pair) == L * N


def test_word_eval_over_sqrt6():
    M = word_eval(expand("a^2b^3a^2"), SQRT6_PAIR)
    assert M == Mat2(2, QuadExt(0, 1, 1, 6), QuadExt(0, 1, 2, 6), 2)


@pytest.mark.parametrize("M, expected", [
    (Mat2(-1, 0, -1, -1), Mat2(1, 0, 1, 1)),
    (Mat2(3, 1, 2, 1), Mat2(3, 1, 2, 1)),
    (Mat2(-3, -1, -2, -1), Mat2(3, 1, 2, 1)),
])
def test_normalize_sign(M, expected):
    assert normalize_sign(M) == expected


@given(ln_words, ln_words)
def test_det_multiplicative(u, v):
    M, P = ln_product(u), ln_product(v)
    assert (M * P).det() == M.det() * P.det() == 1
    assert M * M.inv() == IDENTITY


def test_commute():
    assert commute(L, L * L)
    assert not commute(L, N)


def test_parse_matrix():
    assert parse_matrix("[[1, 0], [1, 1]]") == L
    assert parse_matrix("[[1/2,0],[0,2]]") == Mat2(F(1, 2), 0, 0, 2)
    assert parse_matrix("[[(1+sqrt(6))/2,1],[0,1]]").a == QuadExt(1, 1, 2, 6)
    with pytest.raises(ValueError):
        parse_matrix("[[1,2],[3]]")
    with pytest.raises(ValueError):
        parse_matrix("[[1,2")


@given(ln_words)
def test_print_parse_round_trip(u):
    M = ln_product(u)
    assert parse_matrix(str(M)) == M


def test_find_matrices():
    assert find_matrices("[[1,0],[1,1]] and [[1,1],[0,1]]") == [L, N]
