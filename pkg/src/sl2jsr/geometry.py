"""Boundary dynamics on the projective line with exact quadratic-irrational points.

Counterclockwise on the boundary circle means increasing real coordinate,
wrapping from ``+inf`` through ``inf`` to ``-inf``.  All tests are exact; the
only floating-point step is the strict part of :func:`trichotomy_check`,
which uses rigorous interval enclosures.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import mpmath

from .errors import InvalidMatrixError, OutOfScopeError
from .matrices import Mat2, commute, normalize_sign
from .scalars import compare, div, format_scalar, sign, sqrt, to_interval


class ElementClass(enum.Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


class AxesRelation(enum.Enum):
    INTERSECTING = "intersecting"
    ASYMPTOTICALLY_PARALLEL = "asymptotically parallel"
    ULTRAPARALLEL = "ultraparallel"


@dataclass(frozen=True, eq=False)
class BoundaryPoint:
    """A point of the projective line: a finite exact scalar, or ``inf`` when ``value is None``."""

    value: object = None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if not isinstance(other, BoundaryPoint):
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        return compare(self.value, other.value) == 0

    def __hash__(self):
        return hash(None if self.is_infinite else float(self.value))

    def __str__(self):
        return "inf" if self.is_infinite else format_scalar(self.value)

    __repr__ = __str__


INF = BoundaryPoint(None)


def point(x) -> BoundaryPoint:
    return BoundaryPoint(x)


def _linear_lt(p: BoundaryPoint, q: BoundaryPoint) -> bool:
    # cut the circle at inf, which becomes the largest element
    if p.is_infinite:
        return False
    if q.is_infinite:
        return True
    return compare(p.value, q.value) < 0


def betweenness(alpha: BoundaryPoint, beta: BoundaryPoint, gamma: BoundaryPoint) -> bool:
    """True iff travelling counterclockwise from ``alpha`` to ``gamma`` meets ``beta``."""
    if alpha == beta or beta == gamma or alpha == gamma:
        raise ValueError("betweenness needs three distinct points")
    lt = _linear_lt
    return (
        (lt(alpha, beta) and lt(beta, gamma))
        or (lt(beta, gamma) and lt(gamma, alpha))
        or (lt(gamma, alpha) and lt(alpha, beta))
    )


@dataclass(frozen=True)
class BoundaryInterval:
    """Closed counterclockwise arc from ``start`` to ``end``; a singleton when they coincide."""

    start: BoundaryPoint
    end: BoundaryPoint

    @property
    def is_singleton(self) -> bool:
        return self.start == self.end

    def in_interior(self, x: BoundaryPoint) -> bool:
        if self.is_singleton or x == self.start or x == self.end:
            return False
        return betweenness(self.start, x, self.end)

    def __contains__(self, x: BoundaryPoint) -> bool:
        return x == self.start or x == self.end or self.in_interior(x)

    def precedes(self, x: BoundaryPoint, y: BoundaryPoint) -> bool:
        """For ``x, y`` in the arc: ``x`` is met no later than ``y`` walking from ``start``."""
        if x == y or x == self.start or y == self.end:
            return True
        if y == self.start or x == self.end:
            return False
        return betweenness(self.start, x, y)

    def __str__(self):
        if self.is_singleton:
            return f"{{{self.start}}}"
        return f"[{self.start},{self.end}]"


def intersection_size(I: BoundaryInterval, J: BoundaryInterval) -> float:
    """Cardinality of ``I`` intersected with ``J``: 0, 1, 2 or ``math.inf``."""
    if not I.is_singleton and not J.is_singleton and I.start == J.start and I.end == J.end:
        return math.inf
    for p in (I.start, I.end):
        if J.in_interior(p):
            return math.inf
    for p in (J.start, J.end):
        if I.in_interior(p):
            return math.inf
    common = []
    for p in (I.start, I.end, J.start, J.end):
        if p in I and p in J and p not in common:
            common.append(p)
    return len(common)


# ---------------------------------------------------------------------------

def classify_element(M: Mat2) -> ElementClass:
    if M.det() != 1:
        raise InvalidMatrixError("classify_element needs det == 1")
    if M.is_scalar_identity():
        return ElementClass.IDENTITY
    c = compare(abs_scalar(M.tr()), 2)
    if c < 0:
        return ElementClass.ELLIPTIC
    if c == 0:
        return ElementClass.PARABOLIC
    return ElementClass.HYPERBOLIC


def abs_scalar(x):
    return -x if sign(x) < 0 else x


def mobius(M: Mat2, p: BoundaryPoint) -> BoundaryPoint:
    a, b, c, d = M.entries()
    if p.is_infinite:
        return INF if c == 0 else BoundaryPoint(div(a, c))
    den = c * p.value + d
    if den == 0:
        return INF
    return BoundaryPoint(div(a * p.value + b, den))


def fixed_points(M: Mat2) -> tuple[BoundaryPoint, BoundaryPoint]:
    """``(attracting, repelling)``; both equal the unique fixed point for parabolic ``M``."""
    kind = classify_element(M)
    if kind in (ElementClass.ELLIPTIC, ElementClass.IDENTITY):
        raise InvalidMatrixError(f"fixed points requested for {kind.value} matrix")
    M = normalize_sign(M)
    a, b, c, d = M.entries()
    if kind is ElementClass.PARABOLIC:
        p = INF if c == 0 else BoundaryPoint(div(a - d, 2 * c))
        return p, p
    t = M.tr()
    try:
        s = sqrt(t * t - 4)
        if c == 0:
            finite = BoundaryPoint(div(b, d - a))
            return (INF, finite) if compare(a, d) > 0 else (finite, INF)
        return BoundaryPoint(div(a - d + s, 2 * c)), BoundaryPoint(div(a - d - s, 2 * c))
    except ValueError as exc:
        raise OutOfScopeError(f"fixed points of {M} leave the quadratic field: {exc}") from exc


def parabolic_direction(M: Mat2) -> int:
    """+1 if the parabolic ``M`` pushes points counterclockwise, -1 if clockwise.

    ``M = I + N`` with ``N = s * w w^T J``; ``s`` is a conjugation invariant and
    equals ``sign(M[0][1] - M[1][0])``.
    """
    M = normalize_sign(M)
    return sign(M.b - M.c)


def maps_into(M: Mat2, arc: BoundaryInterval) -> bool:
    """Whether ``M`` maps ``arc`` into itself, from endpoint images and order preservation."""
    s, e = mobius(M, arc.start), mobius(M, arc.end)
    if arc.is_singleton:
        return s == arc.start
    return s in arc and e in arc and arc.precedes(s, e)


def _preserves(M: Mat2, fps: tuple[BoundaryPoint, BoundaryPoint], arc: BoundaryInterval) -> bool:
    # M fixes its attracting point fps[0], which is an endpoint of arc
    plus, minus = fps
    if plus == minus:
        direction = parabolic_direction(M)
        return direction < 0 if plus == arc.start else direction > 0
    return not arc.in_interior(minus)


def _invariant_arc(A: Mat2, B: Mat2) -> BoundaryInterval | None:
    fa, fb = fixed_points(A), fixed_points(B)
    alpha, beta = fa[0], fb[0]
    if alpha == beta:
        return BoundaryInterval(alpha, alpha)
    for arc in (BoundaryInterval(alpha, beta), BoundaryInterval(beta, alpha)):
        if _preserves(A, fa, arc) and _preserves(B, fb, arc):
            return arc
    return None


def _check_pair(A: Mat2, B: Mat2) -> tuple[Mat2, Mat2]:
    A, B = normalize_sign(A), normalize_sign(B)
    for M in (A, B):
        if classify_element(M) in (ElementClass.ELLIPTIC, ElementClass.IDENTITY):
            raise InvalidMatrixError(f"{M} is not a nonidentity nonelliptic matrix")
    if commute(A, B):
        raise InvalidMatrixError("the pair commutes")
    return A, B


def coherent_orientation(A: Mat2, B: Mat2) -> tuple[BoundaryInterval, BoundaryInterval] | None:
    """The arcs ``(I+, I-)`` invariant under ``A, B`` and under ``A^-1, B^-1``, or ``None``.

    ``I+`` has the attracting fixed points as endpoints (or is the singleton
    when they coincide); ``I-`` is built the same way from the inverses.
    """
    A, B = _check_pair(A, B)
    plus = _invariant_arc(A, B)
    if plus is None:
        return None
    minus = _invariant_arc(A.inv(), B.inv())
    if minus is None:
        return None
    return plus, minus


def well_oriented(A: Mat2, B: Mat2) -> bool:
    return coherent_orientation(A, B) is not None and coherent_orientation(A, B.inv()) is None


def shared_fixed_point(A: Mat2, B: Mat2) -> bool:
    fa, fb = set_of(fixed_points(A)), set_of(fixed_points(B))
    return any(p == q for p in fa for q in fb)


def set_of(fps):
    return [fps[0]] if fps[0] == fps[1] else list(fps)


def axes_relation(A: Mat2, B: Mat2) -> AxesRelation:
    A, B = _check_pair(A, B)
    for M in (A, B):
        if classify_element(M) is not ElementClass.HYPERBOLIC:
            raise InvalidMatrixError("axes_relation needs two hyperbolic matrices")
    (ap, am), (bp, bm) = fixed_points(A), fixed_points(B)
    if shared_fixed_point(A, B):
        return AxesRelation.ASYMPTOTICALLY_PARALLEL
    if betweenness(ap, bp, am) != betweenness(ap, bm, am):
        return AxesRelation.INTERSECTING
    return AxesRelation.ULTRAPARALLEL


def _rho_interval(t):
    iv = mpmath.iv
    t = to_interval(t)
    return (t + iv.sqrt(t * t - 4)) / 2


def trichotomy_check(A: Mat2, B: Mat2, max_prec: int = 1 << 14) -> int:
    """Sign of ``rho(AB) - rho(A) rho(B)``, i.e. of ``l(AB) - l(A) - l(B)``.

    Equality is decided exactly (shared fixed point); strict cases by interval
    evaluation at doubling precision until the enclosures separate.
    """
    A, B = _check_pair(A, B)
    for M in (A, B):
        if classify_element(M) is not ElementClass.HYPERBOLIC:
            raise InvalidMatrixError("trichotomy_check needs two hyperbolic matrices")
    arcs = coherent_orientation(A, B)
    if arcs is None:
        raise InvalidMatrixError("trichotomy_check needs a coherently oriented pair")
    if intersection_size(*arcs) != 0:
        raise InvalidMatrixError("trichotomy_check needs disjoint I+ and I-")
    if shared_fixed_point(A, B):
        return 0
    tab, ta, tb = (A * B).tr(), A.tr(), B.tr()
    saved, prec = mpmath.iv.prec, 64
    try:
        while prec <= max_prec:
            mpmath.iv.prec = prec
            diff = _rho_interval(tab) - _rho_interval(ta) * _rho_interval(tb)
            if diff.a > 0:
                return 1
            if diff.b < 0:
                return -1
            prec *= 2
    finally:
        mpmath.iv.prec = saved
    raise ArithmeticError("interval refinement did not separate a strict inequality")
