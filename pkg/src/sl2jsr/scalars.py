"""Exact scalar kernel.

Rationals are :class:`fractions.Fraction` (plain ``int`` is accepted everywhere
a rational is).  Real quadratic irrationals are :class:`QuadExt`, dense
univariate polynomials with rational coefficients are :class:`Poly`.

Arithmetic that lands back in the rationals collapses: a ``QuadExt`` result
with zero irrational part comes back as an ``int`` or ``Fraction``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

import mpmath

Rational = Union[int, Fraction]


def simplify(x):
    """Collapse ``Fraction(n, 1)`` to ``n``; leave everything else alone."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def is_rational(x) -> bool:
    return isinstance(x, (int, Fraction))


def is_integer(x) -> bool:
    return isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return ``(s, D)`` with ``n == s*s*D`` and ``D`` square-free, for ``n > 0``.

    Trial division stops at the cube root; whatever cofactor survives has at
    most two prime factors, so it is either a perfect square or square-free.
    """
    if n <= 0:
        raise ValueError("squarefree_decompose needs a positive integer")
    s, d = 1, 1
    m = n
    p = 2
    while p * p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    r = math.isqrt(m)
    if r * r == m:
        s *= r
    else:
        d *= m
    return s, d


def rational_sqrt(x: Rational):
    """Exact square root of a nonnegative rational: rational or ``QuadExt``."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("square root of a negative rational")
    if x == 0:
        return 0
    # sqrt(n/d) = sqrt(n*d)/d
    s, D = squarefree_decompose(x.numerator * x.denominator)
    if D == 1:
        return simplify(Fraction(s, x.denominator))
    return QuadExt(0, s, x.denominator, D)


@total_ordering
class QuadExt:
    """The real number ``(p + q*sqrt(D)) / r`` with integers p, q, r and square-free D > 1.

    Stored in lowest terms (``r > 0``, ``gcd(p, q, r) == 1``).  Ring operations
    require a common ``D``; ordering works across different ``D`` as well.
    """

    __slots__ = ("p", "q", "r", "D")

    def __init__(self, p: int, q: int, r: int, D: int):
        if r == 0:
            raise ZeroDivisionError("QuadExt with zero denominator")
        if D <= 1 or squarefree_decompose(D)[0] != 1:
            raise ValueError(f"D must be a square-free integer > 1, got {D}")
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(p, q), r)
        self.p, self.q, self.r, self.D = p // g, q // g, r // g, D

    @classmethod
    def make(cls, a: Rational, b: Rational, D: int):
        """Build ``a + b*sqrt(D)`` from rational parts, collapsing to a rational when ``b == 0``."""
        a, b = Fraction(a), Fraction(b)
        if b == 0:
            return simplify(a)
        r = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        return cls(int(a * r), int(b * r), r, D)

    @property
    def rational_part(self) -> Fraction:
        return Fraction(self.p, self.r)

    @property
    def irrational_part(self) -> Fraction:
        return Fraction(self.q, self.r)

    def parts(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.p, self.r), Fraction(self.q, self.r)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.D != self.D:
                raise ValueError(f"cannot mix QuadExt with D={self.D} and D={other.D}")
            return other.parts()
        if is_rational(other):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.parts()
        return QuadExt.make(a + o[0], b + o[1], self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.p, -self.q, self.r, self.D)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.parts()
        return QuadExt.make(a - o[0], b - o[1], self.D)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.parts()
        return QuadExt.make(o[0] - a, o[1] - b, self.D)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.parts()
        c, d = o
        return QuadExt.make(a * c + b * d * self.D, a * d + b * c, self.D)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.p, -self.q, self.r, self.D)

    def norm(self) -> Fraction:
        a, b = self.parts()
        return simplify(a * a - b * b * self.D)

    def reciprocal(self):
        # nonzero because q != 0 and D is not a square
        n = Fraction(self.norm())
        a, b = self.parts()
        return QuadExt.make(a / n, -b / n, self.D)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            return self * other.reciprocal()
        if is_rational(other):
            if other == 0:
                raise ZeroDivisionError("QuadExt division by zero")
            a, b = self.parts()
            return QuadExt.make(a / other, b / other, self.D)
        return NotImplemented

    def __rtruediv__(self, other):
        if is_rational(other):
            return self.reciprocal() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.reciprocal() ** (-n)
        result, base = 1, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sign(self) -> int:
        p, q = self.p, self.q
        if p >= 0 and q >= 0:
            return 1 if (p or q) else 0
        if p <= 0 and q <= 0:
            return -1
        # opposite signs: compare p^2 with q^2 D
        diff = p * p - q * q * self.D
        s = (diff > 0) - (diff < 0)
        return s if p > 0 else -s

    def sqrt(self):
        """Exact square root inside ``Q(sqrt(D))`` when one exists, else ``None``."""
        if self.sign() < 0:
            return None
        a, b = self.parts()
        n = Fraction(self.norm())
        if n < 0:
            return None
        rn = _rational_sqrt_or_none(n)
        if rn is None:
            return None
        for u2 in ((a + rn) / 2, (a - rn) / 2):
            u = _rational_sqrt_or_none(u2)
            if u is None or u == 0:
                continue
            v = b / (2 * u)
            cand = QuadExt.make(u, v, self.D)
            if sign(cand) < 0:
                cand = -cand
            if cand * cand == self:
                return cand
        return None

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.p, self.q, self.r, self.D) == (other.p, other.q, other.r, other.D)
        if is_rational(other):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.q, self.r, self.D))

    def __lt__(self, other):
        if not isinstance(other, (QuadExt, int, Fraction)):
            return NotImplemented
        return compare(self, other) < 0

    def __float__(self):
        return float(to_mpf(self))

    def __repr__(self):
        return f"QuadExt({self.p}, {self.q}, {self.r}, {self.D})"

    def __str__(self):
        q = self.q
        if q == 1:
            irr = f"sqrt({self.D})"
        elif q == -1:
            irr = f"-sqrt({self.D})"
        else:
            irr = f"{q}*sqrt({self.D})"
        if self.p == 0:
            body = irr if self.r == 1 else f"({irr})"
        else:
            sep = "" if irr.startswith("-") else "+"
            body = f"({self.p}{sep}{irr})"
        return body if self.r == 1 else f"{body}/{self.r}"


def _rational_sqrt_or_none(x: Fraction):
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt(x):
    """Exact square root of a nonnegative scalar, or raise ``ValueError`` if it leaves the field."""
    if is_rational(x):
        return rational_sqrt(x)
    if isinstance(x, QuadExt):
        r = x.sqrt()
        if r is None:
            raise ValueError(f"sqrt({x}) does not lie in Q(sqrt({x.D}))")
        return r
    raise TypeError(f"no exact sqrt for {type(x).__name__}")


def sign(x) -> int:
    if isinstance(x, QuadExt):
        return x.sign()
    if is_rational(x):
        return (x > 0) - (x < 0)
    raise TypeError(f"sign undefined for {type(x).__name__}")


def div(x, y):
    """Exact quotient; rational operands never fall back to ``float``."""
    if is_rational(x) and is_rational(y):
        if y == 0:
            raise ZeroDivisionError("division by zero")
        return simplify(Fraction(x) / Fraction(y))
    return x / y


def compare(x, y) -> int:
    """Exact three-way comparison of rationals and quadratic irrationals.

    Values from different quadratic fields are compared by isolating one
    surd on each side and squaring with sign bookkeeping.
    """
    if is_rational(x) and is_rational(y):
        return (x > y) - (x < y)
    if isinstance(x, QuadExt) and isinstance(y, QuadExt) and x.D != y.D:
        p1, q1 = x.parts()
        p2, q2 = y.parts()
        left = QuadExt.make(p1 - p2, q1, x.D)  # compare left with q2*sqrt(D2)
        sl, sr = sign(left), sign(q2)
        if sl != sr:
            return (sl > sr) - (sl < sr)
        # same nonzero sign
        c = compare(left * left, q2 * q2 * y.D)
        return c if sl > 0 else -c
    return sign(x - y)


def scalar_key(x):
    """Hashable, exact identity for a scalar (``int`` and ``Fraction`` normalized)."""
    return simplify(x) if is_rational(x) else x


# ---------------------------------------------------------------------------
# text formats

_INT = r"[+-]?\d+"
_RAT_RE = re.compile(rf"^\s*({_INT})\s*(?:/\s*(\d+))?\s*$")
_QUAD_RE = re.compile(
    r"""^\s*
    (?:\(\s*)?
    (?:(?P<p>[+-]?\d+(?:/\d+)?)\s*(?=[+-]))?          # optional rational part
    (?P<qs>[+-])?\s*(?P<q>\d+(?:/\d+)?)?\s*\*?\s*sqrt\(\s*(?P<D>\d+)\s*\)
    \s*(?:\)\s*)?
    (?:/\s*(?P<r>\d+))?\s*$""",
    re.VERBOSE,
)


def parse_scalar(text: str):
    """Parse ``"p"``, ``"p/q"`` or ``"(p+q*sqrt(D))/r"`` into an exact scalar."""
    m = _RAT_RE.match(text)
    if m:
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return simplify(Fraction(num, den))
    m = _QUAD_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse scalar {text!r}")
    p = Fraction(m.group("p")) if m.group("p") else Fraction(0)
    q = Fraction(m.group("q")) if m.group("q") else Fraction(1)
    if m.group("qs") == "-":
        q = -q
    r = int(m.group("r")) if m.group("r") else 1
    if r == 0:
        raise ValueError(f"zero denominator in {text!r}")
    s, D = squarefree_decompose(int(m.group("D")))
    if D == 1:
        return simplify((p + q * s) / r)
    return QuadExt.make(p / r, q * s / r, D)


def format_scalar(x) -> str:
    x = simplify(x) if is_rational(x) else x
    return str(x)


# ---------------------------------------------------------------------------
# numerics (never used for verdicts except through interval enclosures)

def to_mpf(x):
    if isinstance(x, int):
        return mpmath.mpf(x)
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, QuadExt):
        return (x.p + x.q * mpmath.sqrt(x.D)) / x.r
    raise TypeError(f"cannot convert {type(x).__name__} to mpf")


def to_interval(x):
    """Rigorous ``mpmath.iv`` enclosure of an exact scalar at the current ``iv`` precision."""
    iv = mpmath.iv
    if isinstance(x, int):
        return iv.mpf(x)
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / x.denominator
    if isinstance(x, QuadExt):
        return (iv.mpf(x.p) + iv.mpf(x.q) * iv.sqrt(iv.mpf(x.D))) / x.r
    raise TypeError(f"cannot enclose {type(x).__name__}")


# ---------------------------------------------------------------------------
# polynomials

class Poly:
    """Dense polynomial in one variable with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, c: Rational) -> "Poly":
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    @staticmethod
    def _lift(other):
        if isinstance(other, Poly):
            return other
        if is_rational(other):
            return Poly([other])
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        """Horner evaluation at any scalar supporting ``+`` and ``*``."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return simplify(acc) if is_rational(acc) else acc

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def eval_range(self, lo: Rational, hi: Rational) -> tuple[Fraction, Fraction]:
        """Exact rational enclosure of ``{p(x) : lo <= x <= hi}`` by interval Horner."""
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("empty range")
        acc_lo = acc_hi = Fraction(0)
        for c in reversed(self.coeffs):
            prods = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
            acc_lo, acc_hi = min(prods) + c, max(prods) + c
        return acc_lo, acc_hi

    def __repr__(self):
        return f"Poly({[format_scalar(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = format_scalar(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{format_scalar(mag)}*{mono}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(terms)


# ---------------------------------------------------------------------------

def chebyshev(k: int, t):
    """``T_k(t)`` with ``T_0 = 2``, ``T_1 = t``, ``T_k = t T_{k-1} - T_{k-2}``.

    Satisfies ``T_k(tr M) == tr(M^k)`` for ``det M == 1``.  Uses the doubling
    identities ``T_{2j} = T_j^2 - 2`` and ``T_{2j+1} = T_j T_{j+1} - t``.
    """
    if k < 0:
        raise ValueError("chebyshev index must be nonnegative")
    if k == 0:
        return 2
    # invariant: (lo, hi) == (T_j, T_{j+1})
    lo, hi = 2, t
    for bit in bin(k)[2:]:
        if bit == "1":
            lo, hi = lo * hi - t, hi * hi - 2
        else:
            lo, hi = lo * lo - 2, lo * hi - t
    return simplify(lo) if is_rational(lo) else lo


def isolate_root(p: Poly, lo: Rational, hi: Rational, width: Rational) -> tuple[Rational, Rational]:
    """Bisect ``[lo, hi]`` down to ``width`` around a sign change of ``p``.

    Returns ``(r, r)`` when an exact rational root is hit.
    """
    lo, hi, width = Fraction(lo), Fraction(hi), Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if lo > hi:
        raise ValueError("lo must not exceed hi")
    slo, shi = sign(p(lo)), sign(p(hi))
    if slo == 0:
        return simplify(lo), simplify(lo)
    if shi == 0:
        return simplify(hi), simplify(hi)
    if slo == shi:
        raise ValueError("polynomial has the same sign at both endpoints")
    while hi - lo > width:
        mid = (lo + hi) / 2
        sm = sign(p(mid))
        if sm == 0:
            return simplify(mid), simplify(mid)
        if sm == slo:
            lo = mid
        else:
            hi = mid
    return simplify(lo), simplify(hi)
