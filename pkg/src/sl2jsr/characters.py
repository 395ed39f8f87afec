"""Trace characters ``[w] = tr phi(w)`` and exact comparison of spectral radii.

A character can be read off explicit matrices (:class:`Matrices`) or computed
from the three traces ``x = [a]``, ``y = [b]``, ``z = [ab]`` alone
(:class:`Triple`) via the identities

    [w][u] = [wu] + [wu^-1]          [w c^e] = [w c^(e-1)][c] - [w c^(e-2)]

and invariance under rotation, reversal and inversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath

from .errors import OutOfScopeError
from .matrices import MatrixPair, word_eval
from .scalars import chebyshev, compare, is_rational, simplify, to_mpf
from .words import free_reduce


@dataclass(frozen=True)
class Matrices:
    pair: MatrixPair


@dataclass(eq=False)
class Triple:
    """Character context given by ``([a], [b], [ab])``; memoizes on canonical cyclic words."""

    x: object
    y: object
    z: object
    _memo: dict = field(default_factory=dict, repr=False)

    def trace(self, w: str):
        return self._eval(_cyclic_syllables(free_reduce(w)))

    def _letter(self, c: str):
        return self.x if c == "a" else self.y

    def _eval(self, s: tuple):
        if not s:
            return 2
        if len(s) == 1:
            c, e = s[0]
            return chebyshev(abs(e), self._letter(c))
        key = _canonical(s)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        val = self._reduce(s)
        if is_rational(val):
            val = simplify(val)
        self._memo[key] = val
        return val

    def _reduce(self, s: tuple):
        n = len(s)
        if all(e == 1 for _, e in s):
            return chebyshev(n // 2, self.z)
        for p in range(2, n // 2 + 1, 2):
            if n % p == 0 and s[:p] * (n // p) == s:
                return chebyshev(n // p, self._eval(s[:p]))
        i = max(range(n), key=lambda j: abs(s[j][1]))
        c, e = s[i]
        t = self._letter(c)
        if e >= 2:
            return self._eval(_with_exp(s, i, e - 1)) * t - self._eval(_with_exp(s, i, e - 2))
        if e <= -2:
            return self._eval(_with_exp(s, i, e + 1)) * t - self._eval(_with_exp(s, i, e + 2))
        # every exponent is +-1 and some is -1:  [X c^-1] = [X][c] - [X c]
        i = next(j for j in range(n) if s[j][1] == -1)
        c = s[i][0]
        return self._eval(_with_exp(s, i, 0)) * self._letter(c) - self._eval(_with_exp(s, i, 1))


def _with_exp(s: tuple, i: int, e: int) -> tuple:
    return _cyclic_reduce(s[:i] + ((s[i][0], e),) + s[i + 1:])


def _cyclic_reduce(s) -> tuple:
    out = list(s)
    while True:
        merged: list = []
        for c, e in out:
            if e == 0:
                continue
            if merged and merged[-1][0] == c:
                e += merged[-1][1]
                merged.pop()
                if e:
                    merged.append((c, e))
            else:
                merged.append((c, e))
        if len(merged) > 1 and merged[0][0] == merged[-1][0]:
            c, e = merged[0][0], merged[0][1] + merged[-1][1]
            merged = merged[1:-1]
            if e:
                merged.insert(0, (c, e))
            out = merged
            continue
        if len(merged) == len(out):
            return tuple(merged)
        out = merged


def _cyclic_syllables(w: str) -> tuple:
    s = []
    for ch in w:
        c, e = ch.lower(), (1 if ch.islower() else -1)
        if s and s[-1][0] == c:
            s[-1] = (c, s[-1][1] + e)
        else:
            s.append((c, e))
    return _cyclic_reduce(s)


def _canonical(s: tuple) -> tuple:
    variants = (s, s[::-1], tuple((c, -e) for c, e in s), tuple((c, -e) for c, e in reversed(s)))
    return min(v[i:] + v[:i] for v in variants for i in range(len(v)))


def char(w: str, ctx):
    """``[w]`` for a (group) word ``w`` in the given context."""
    if isinstance(ctx, Matrices):
        return word_eval(w, ctx.pair).tr()
    if isinstance(ctx, Triple):
        return ctx.trace(w)
    raise TypeError(f"unknown character context {type(ctx).__name__}")


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraicRadius:
    """``rho^(1/n)`` where ``rho = t/2 + sqrt((t/2)^2 - 1)`` is the spectral radius for trace ``t``."""

    t: object
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("radius root index must be positive")
        if compare(self.t, 2) < 0:
            raise OutOfScopeError(f"trace {self.t} < 2: elliptic product")

    def approx(self, digits: int = 15):
        with mpmath.workdps(digits + 20):
            t = to_mpf(self.t)
            rho = (t + mpmath.sqrt(t * t - 4)) / 2
            return mpmath.root(rho, self.n)

    def approx_str(self, digits: int = 15) -> str:
        """Decimal expansion truncated to ``digits`` places after the point."""
        with mpmath.workdps(digits + 20):
            v = self.approx(digits)
            scaled = int(mpmath.floor(v * mpmath.mpf(10) ** digits))
        whole, frac = divmod(scaled, 10 ** digits)
        return f"{whole}.{frac:0{digits}d}" if digits > 0 else str(whole)


def radius(w: str, ctx) -> AlgebraicRadius:
    return AlgebraicRadius(char(w, ctx), len(w))


def radius_cmp(r1: AlgebraicRadius, r2: AlgebraicRadius) -> int:
    """Exact comparison of ``rho1^(1/n1)`` with ``rho2^(1/n2)``: compare ``T_{m/n1}(t1)`` with ``T_{m/n2}(t2)``."""
    m = r1.n * r2.n // math.gcd(r1.n, r2.n)
    return compare(chebyshev(m // r1.n, r1.t), chebyshev(m // r2.n, r2.t))


def word_cmp(w: str, u: str, ctx) -> int:
    """Word preorder: sign of ``[w^|u|] - [u^|w|]`` computed through radii."""
    return radius_cmp(radius(w, ctx), radius(u, ctx))
