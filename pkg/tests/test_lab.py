from fractions import Fraction as F
import random

from sl2jsr.fixtures import SQRT6_WIDE_PAIR
from sl2jsr.lab import (
    IV2_COEFFS, NONFREE_VALUE, TRACE_A, TripleContext, certify_negative, iv1_counterexample,
    iv2_counterexample, iv3_counterexample, nonfree_demo, trace_poly,
)
from sl2jsr.matrices import word_eval
from sl2jsr.scalars import Poly, chebyshev
from sl2jsr.words import expand

x = Poly.x()


def test_trace_polys():
    ctx = TripleContext(TRACE_A, F(0))
    assert trace_poly("abb", ctx) == (x * x - 2) * x - F(101, 50)
    assert trace_poly("bbb", ctx) == chebyshev(3, x)
    assert trace_poly("a", ctx) == Poly.const(F(101, 50))


def test_degree_bounds_on_random_words():
    rng = random.Random(0)
    ctx = TripleContext(TRACE_A, F(1, 50))
    for _ in range(50):
        w = "".join(rng.choice("ab") for _ in range(rng.randint(1, 9)))
        assert trace_poly(w, ctx).degree <= len(w)
    for k in range(1, 8):
        assert trace_poly("b" * k, ctx).degree == k


def test_iv2_polynomial():
    r = iv2_counterexample()
    assert r.poly.coeffs == IV2_COEFFS and r.matches_reference
    assert r.poly.leading() == 1 and r.poly.coeffs[0] == F(2050401, 6250000)
    assert r.value < 0


def test_iv1_polynomial():
    r = iv1_counterexample()
    assert r.poly == F(49, 50) * x - F(101, 50)
    assert r.value == F(17, 125)
    assert r.poly(2) < 0
    assert r.verdict == 1


def test_iv3_certificates():
    r = iv3_counterexample()
    lo, hi = r.interval
    assert hi - lo <= F(1, 10 ** 14)
    assert r.crossing(lo) * r.crossing(hi) <= 0
    assert r.crossing == r.cube - r.square
    assert (r.ab_vs_mix.degree, r.ab2_vs_mix.degree) == (8, 13)
    assert r.ab_negative and r.ab2_negative


def test_certify_negative():
    assert certify_negative(-(x * x) - 1, -3, 3)
    assert not certify_negative(x * x - 1, -3, 3)


def test_nonfree_identity():
    r = nonfree_demo()
    assert r.ok and r.noncommutative
    assert r.left == r.right == NONFREE_VALUE
    assert NONFREE_VALUE.tr() == 4


def test_literal_sqrt6_generators_break_identity():
    left = word_eval(expand("a^2b^3a^2"), SQRT6_WIDE_PAIR)
    right = word_eval(expand("ba^6b"), SQRT6_WIDE_PAIR)
    assert left != right


def test_crossing_root_digits():
    # high-precision decimal expansion of the tie point, computed independently
    lo, hi = iv3_counterexample().interval
    assert lo <= F("2.02553647398997611554") <= hi
