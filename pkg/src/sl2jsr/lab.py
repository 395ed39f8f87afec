"""Exact counterexamples for real (non-integer) traces, and a non-free pair over Q(sqrt 6).

Traces are polynomials in ``x = [b]`` once ``[a]`` and the offset
``delta = [ab] - [b^2]`` are fixed, so ``[ab] = x^2 - 2 + delta``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import AlgebraicRadius, Triple, char, radius_cmp
from .matrices import Mat2, word_eval
from .scalars import Poly, QuadExt, isolate_root
from .fixtures import SQRT6_PAIR
from .words import expand

TRACE_A = Fraction(101, 50)


@dataclass(frozen=True)
class TripleContext:
    x_a: Fraction
    delta: Fraction

    def triple(self) -> Triple:
        x = Poly.x()
        return Triple(Poly.const(self.x_a), x, x * x - 2 + self.delta)


def trace_poly(w: str, ctx: TripleContext) -> Poly:
    """``[w]`` as a polynomial in ``x = [b]``; ``w`` may use the ``(ab^2)^3`` shorthand."""
    val = char(expand(w), ctx.triple())
    return val if isinstance(val, Poly) else Poly.const(val)


# ---------------------------------------------------------------------------

IV2_COEFFS = (  # lowest degree first
    Fraction(2050401, 6250000), Fraction(1618727, 31250), Fraction(105559, 1250),
    Fraction(-2080903, 125000), Fraction(-46103, 500), Fraction(-909, 50),
    Fraction(98103, 2500), Fraction(303, 25), Fraction(-9), Fraction(-101, 50), Fraction(1),
)


@dataclass(frozen=True)
class Iv2Result:
    poly: Poly
    witness: Fraction
    value: Fraction
    matches_reference: bool


def iv2_counterexample(witness: Fraction = Fraction(21, 10)) -> Iv2Result:
    """``[(ab^2)^4] - [(ab^3)^3]`` with ``[ab] = [b^2]``: negative somewhere in ``[101/50, 113/50]``."""
    ctx = TripleContext(TRACE_A, Fraction(0))
    if not Fraction(101, 50) <= witness <= Fraction(113, 50):
        raise ValueError("witness must lie in [101/50, 113/50]")
    p = trace_poly("(abb)^4", ctx) - trace_poly("(abbb)^3", ctx)
    return Iv2Result(p, witness, Fraction(p(witness)), p.coeffs == IV2_COEFFS)


@dataclass(frozen=True)
class Iv1Result:
    poly: Poly
    witness: Fraction
    value: Fraction
    verdict: int  # radius_cmp(ab^2, b) at the witness


def iv1_counterexample(witness: Fraction = Fraction(11, 5)) -> Iv1Result:
    """With ``[ab]`` just below ``[b^2]``, ``ab^2`` still beats ``b`` once ``[b]`` is large enough."""
    ctx = TripleContext(TRACE_A, Fraction(-1, 50))
    p = trace_poly("abb", ctx) - trace_poly("bbb", ctx)
    t_abb = trace_poly("abb", ctx)(witness)
    verdict = radius_cmp(AlgebraicRadius(t_abb, 3), AlgebraicRadius(witness, 1))
    return Iv1Result(p, witness, Fraction(p(witness)), verdict)


def certify_negative(p: Poly, lo: Fraction, hi: Fraction, max_depth: int = 40) -> bool:
    """Prove ``p < 0`` on ``[lo, hi]`` with interval Horner, bisecting where the bound is loose."""
    stack = [(Fraction(lo), Fraction(hi), 0)]
    while stack:
        a, b, depth = stack.pop()
        low, high = p.eval_range(a, b)
        if high < 0:
            continue
        if low > 0 or p(a) >= 0 or p(b) >= 0 or depth >= max_depth:
            return False
        mid = (a + b) / 2
        stack += [(a, mid, depth + 1), (mid, b, depth + 1)]
    return True


@dataclass(frozen=True)
class Iv3Result:
    crossing: Poly
    interval: tuple[Fraction, Fraction]
    ab_vs_mix: Poly
    ab2_vs_mix: Poly
    ab_negative: bool
    ab2_negative: bool
    cube: Poly
    square: Poly


def iv3_counterexample(width: Fraction = Fraction(1, 10 ** 14)) -> Iv3Result:
    """Near the point where ``ab`` and ``ab^2`` tie, ``abab^2`` strictly beats both."""
    ctx = TripleContext(TRACE_A, Fraction(1, 50))
    cube, square = trace_poly("(ab)^3", ctx), trace_poly("(abb)^2", ctx)
    crossing = cube - square
    lo, hi = isolate_root(crossing, Fraction(2), Fraction(21, 10), width)
    q1 = trace_poly("(ab)^5", ctx) - trace_poly("(ababb)^2", ctx)
    q2 = trace_poly("(abb)^5", ctx) - trace_poly("(ababb)^3", ctx)
    return Iv3Result(crossing, (Fraction(lo), Fraction(hi)), q1, q2,
                     certify_negative(q1, lo, hi), certify_negative(q2, lo, hi), cube, square)


# ---------------------------------------------------------------------------

NONFREE_VALUE = Mat2(2, QuadExt(0, 1, 1, 6), QuadExt(0, 1, 2, 6), 2)


@dataclass(frozen=True)
class NonfreeResult:
    left: Mat2
    right: Mat2
    ok: bool
    noncommutative: bool


def nonfree_demo() -> NonfreeResult:
    """``a^2 b^3 a^2 == b a^6 b == [[2, sqrt6], [sqrt6/2, 2]]`` for unipotents with off-diagonal ``sqrt6/6``.

    The identity needs the two off-diagonal entries to multiply to 1/6.
    """
    left = word_eval(expand("a^2b^3a^2"), SQRT6_PAIR)
    right = word_eval(expand("ba^6b"), SQRT6_PAIR)
    ab, ba = word_eval("ab", SQRT6_PAIR), word_eval("ba", SQRT6_PAIR)
    ok = left == right == NONFREE_VALUE
    return NonfreeResult(left, right, ok, ab != ba)
