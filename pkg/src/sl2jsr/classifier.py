"""Decide the optimal products and the joint spectral radius of a matrix pair.

The decision runs on exact data only, namely traces and the cyclic
order of fixed points on the boundary.  Words in the output are written in
the alphabet *after* the optional swap that puts the smaller trace first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .characters import AlgebraicRadius, Matrices, radius, radius_cmp
from .errors import InconsistencyError, InvalidMatrixError
from .geometry import (
    AxesRelation,
    ElementClass,
    axes_relation,
    classify_element,
    coherent_orientation,
    intersection_size,
    shared_fixed_point,
    well_oriented,
)
from .matrices import Mat2, MatrixPair, commute, normalize_sign
from .scalars import chebyshev, compare, is_integer


class Case(enum.Enum):
    COMMUTING = "Commuting"
    I_INTERSECTING = "I_Intersecting"
    II_PARALLEL_1 = "II_Parallel_1"
    II_PARALLEL_2 = "II_Parallel_2"
    II_PARALLEL_UNEQUAL = "II_ParallelUnequal"
    III_EQUAL_TRACE = "III_EqualTraceWellOriented"
    IV_1 = "IV_1"
    IV_2 = "IV_2"
    IV_3A = "IV_3a"
    IV_3B = "IV_3b"
    OUT_OF_SCOPE = "OutOfScope"

    def __str__(self):
        return self.value


ALL_NON_POWERS = "AllNonPowers"
FINITE = "Finite"


@dataclass(frozen=True)
class OptimalitySet:
    """Either a finite sorted list of Lyndon words, or every word that is not a proper power."""

    kind: str
    words: tuple[str, ...] = ()

    @classmethod
    def finite(cls, *words: str) -> "OptimalitySet":
        return cls(FINITE, tuple(sorted(set(words))))

    @classmethod
    def all_non_powers(cls) -> "OptimalitySet":
        return cls(ALL_NON_POWERS)

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    def representative(self) -> str:
        return self.words[0] if self.is_finite else "ab"

    def __str__(self):
        if not self.is_finite:
            return "all words that are not proper powers"
        return "{" + ", ".join(self.words) + "}"


@dataclass(frozen=True)
class PairClassification:
    case: Case
    swapped: bool = False
    reason: str | None = None

    @property
    def in_scope(self) -> bool:
        return self.case is not Case.OUT_OF_SCOPE

    def __str__(self):
        return f"OutOfScope({self.reason})" if self.reason else str(self.case)


@dataclass(frozen=True)
class JsrReport:
    optimal: OptimalitySet | None
    radius: AlgebraicRadius | None
    precision: int = 15
    float_approx: str | None = field(default=None)

    @classmethod
    def build(cls, optimal: OptimalitySet, pair: MatrixPair, precision: int) -> "JsrReport":
        r = radius(optimal.representative(), Matrices(pair))
        return cls(optimal, r, precision, r.approx_str(precision))


@dataclass(frozen=True)
class Classification:
    classification: PairClassification
    report: JsrReport
    pair: MatrixPair

    @property
    def case(self) -> Case:
        return self.classification.case

    @property
    def optimal(self) -> OptimalitySet | None:
        return self.report.optimal

    def __iter__(self):
        # allows ``cls, report = classify_pair(A, B)``
        return iter((self.classification, self.report))


def _out_of_scope(reason: str, pair: MatrixPair, swapped: bool = False) -> Classification:
    return Classification(
        PairClassification(Case.OUT_OF_SCOPE, swapped, reason), JsrReport(None, None), pair
    )


def _validate(M: Mat2, name: str) -> Mat2:
    if M.det() != 1:
        raise InvalidMatrixError(f"{name} has determinant {M.det()}, expected 1")
    kind = classify_element(M)
    if kind is ElementClass.ELLIPTIC:
        raise InvalidMatrixError(f"{name} is elliptic (|trace| < 2)")
    return normalize_sign(M)


def iv_branch(trA, trB, trAB) -> Case:
    """Case label for a well oriented integer pair with ``2 <= trA < trB``, from traces alone."""
    if not all(is_integer(t) for t in (trA, trB, trAB)):
        raise ValueError("iv_branch needs integer traces")
    if not 2 <= trA < trB:
        raise ValueError(f"iv_branch needs 2 <= tr A < tr B, got {trA}, {trB}")
    y2 = chebyshev(2, trB)
    if trAB < y2:
        return Case.IV_1
    if trAB == y2:
        return Case.IV_2
    cubed = chebyshev(3, trAB)
    squared = chebyshev(2, trAB * trB - trA)
    if abs(cubed - squared) < 2:
        raise InconsistencyError(
            f"tr((AB)^3) = {cubed} and tr((AB^2)^2) = {squared} differ by less than 2"
        )
    return Case.IV_3A if cubed > squared else Case.IV_3B


_IV_WORDS = {Case.IV_1: "b", Case.IV_2: "abb", Case.IV_3A: "ab", Case.IV_3B: "abb"}


def classify_pair(A: Mat2, B: Mat2, precision: int = 15) -> Classification:
    """Classify the pair and report its optimal words and joint spectral radius.

    Raises :class:`InvalidMatrixError` for det != 1 or elliptic input.  Pairs
    outside the decidable range come back with case ``OutOfScope`` and a reason.
    """
    A, B = _validate(A, "A"), _validate(B, "B")
    pair = MatrixPair(A, B)

    if commute(A, B):
        c = radius_cmp(radius("a", Matrices(pair)), radius("b", Matrices(pair)))
        words = ("a", "b") if c == 0 else (("a",) if c > 0 else ("b",))
        opt = OptimalitySet.finite(*words)
        return Classification(PairClassification(Case.COMMUTING), JsrReport.build(opt, pair, precision), pair)

    if coherent_orientation(A, B) is None:
        return _out_of_scope("not coherently oriented", pair)

    swapped = compare(A.tr(), B.tr()) > 0
    if swapped:
        A, B = B, A
        pair = MatrixPair(A, B)
    equal = compare(A.tr(), B.tr()) == 0
    hyperbolic = all(classify_element(M) is ElementClass.HYPERBOLIC for M in (A, B))

    def done(case: Case, opt: OptimalitySet) -> Classification:
        return Classification(PairClassification(case, swapped), JsrReport.build(opt, pair, precision), pair)

    relation = axes_relation(A, B) if hyperbolic else None
    if relation is AxesRelation.INTERSECTING:
        return done(Case.I_INTERSECTING, OptimalitySet.finite("a", "b") if equal else OptimalitySet.finite("b"))

    parallel = relation is AxesRelation.ASYMPTOTICALLY_PARALLEL or (
        not hyperbolic and shared_fixed_point(A, B)
    )
    if parallel:
        if not equal:
            return done(Case.II_PARALLEL_UNEQUAL, OptimalitySet.finite("b"))
        plus, minus = coherent_orientation(A, B)
        size = intersection_size(plus, minus)
        if size == 1:
            return done(Case.II_PARALLEL_1, OptimalitySet.finite("a", "b"))
        if size == 0:
            return done(Case.II_PARALLEL_2, OptimalitySet.all_non_powers())
        return _out_of_scope("parallel axes with overlapping invariant arcs", pair, swapped)

    if not well_oriented(A, B):
        return _out_of_scope("coherently but not well oriented, axes disjoint", pair, swapped)

    if equal:
        return done(Case.III_EQUAL_TRACE, OptimalitySet.finite("ab"))

    if not (A.is_integral() and B.is_integral()):
        return _out_of_scope("real-entry unequal-trace case: counterexamples exist", pair, swapped)
    case = iv_branch(A.tr(), B.tr(), (A * B).tr())
    return done(case, OptimalitySet.finite(_IV_WORDS[case]))
