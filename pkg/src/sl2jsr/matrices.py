"""2x2 matrices over exact scalars and the evaluation map from words to matrices."""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import scalars
from .scalars import format_scalar, is_integer, parse_scalar, simplify, sign


def _s(x):
    return simplify(x) if scalars.is_rational(x) else x


@dataclass(frozen=True)
class Mat2:
    """The matrix ``[[a, b], [c, d]]``."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _s(getattr(self, name)))

    def __mul__(self, o: "Mat2") -> "Mat2":
        if not isinstance(o, Mat2):
            return Mat2(self.a * o, self.b * o, self.c * o, self.d * o)
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def __rmul__(self, k):
        return Mat2(k * self.a, k * self.b, k * self.c, k * self.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inv() ** (-n)
        result, base = IDENTITY, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def det(self):
        return _s(self.a * self.d - self.b * self.c)

    def tr(self):
        return _s(self.a + self.d)

    def inv(self) -> "Mat2":
        """Adjugate inverse; only defined for ``det == +-1``."""
        det = self.det()
        if det == 1:
            return Mat2(self.d, -self.b, -self.c, self.a)
        if det == -1:
            return Mat2(-self.d, self.b, self.c, -self.a)
        raise ValueError(f"inverse requested for non-unimodular matrix (det = {format_scalar(det)})")

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def is_integral(self) -> bool:
        return all(is_integer(x) for x in self.entries())

    def is_nonnegative(self) -> bool:
        return all(sign(x) >= 0 for x in self.entries())

    def is_scalar_identity(self) -> bool:
        """``M == I`` or ``M == -I``."""
        return self.b == 0 and self.c == 0 and self.a == self.d and self.a in (1, -1)

    def __str__(self) -> str:
        f = format_scalar
        return f"[[{f(self.a)},{f(self.b)}],[{f(self.c)},{f(self.d)}]]"


IDENTITY = Mat2(1, 0, 0, 1)
L = Mat2(1, 0, 1, 1)
N = Mat2(1, 1, 0, 1)


@dataclass(frozen=True)
class MatrixPair:
    A: Mat2
    B: Mat2

    def swapped(self) -> "MatrixPair":
        return MatrixPair(self.B, self.A)

    def __iter__(self):
        return iter((self.A, self.B))

    def generator(self, letter: str) -> Mat2:
        if letter == "a":
            return self.A
        if letter == "b":
            return self.B
        if letter == "A":
            return self.A.inv()
        if letter == "B":
            return self.B.inv()
        raise ValueError(f"unknown letter {letter!r}")


def word_eval(w: str, pair: MatrixPair) -> Mat2:
    """Image of a (group) word, multiplying left to right: ``phi(wu) = phi(w) phi(u)``."""
    gens = {c: pair.generator(c) for c in set(w)}
    M = IDENTITY
    for c in w:
        M = M * gens[c]
    return M


def normalize_sign(M: Mat2) -> Mat2:
    return -M if sign(M.tr()) < 0 else M


def commute(A: Mat2, B: Mat2) -> bool:
    return A * B == B * A


# ---------------------------------------------------------------------------
# text format

_MATRIX_RE = re.compile(r"^\s*\[\s*\[(.*)\]\s*,\s*\[(.*)\]\s*\]\s*$", re.S)


def _split_row(row: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in row:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_matrix(text: str) -> Mat2:
    """Parse ``"[[a11,a12],[a21,a22]]"`` (whitespace-tolerant) with exact scalar entries."""
    m = _MATRIX_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse matrix {text!r}")
    r1, r2 = _split_row(m.group(1)), _split_row(m.group(2))
    if len(r1) != 2 or len(r2) != 2:
        raise ValueError(f"matrix must be 2x2: {text!r}")
    return Mat2(*(parse_scalar(x) for x in r1 + r2))


_FIND_RE = re.compile(r"\[\s*\[[^\[\]]*\]\s*,\s*\[[^\[\]]*\]\s*\]")


def find_matrices(text: str) -> list[Mat2]:
    """All matrices written in ``text``, in order (used for batch input lines)."""
    return [parse_matrix(m.group(0)) for m in _FIND_RE.finditer(text)]

