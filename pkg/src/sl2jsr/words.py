"""Words over ``{a, b}`` and group words over ``{a, b, A, B}`` (``A`` is ``a^-1``).

Words are plain strings.  The alphabet order is ``a < b``.
"""

from __future__ import annotations

import re
from typing import Iterator

POSITIVE = frozenset("ab")
GROUP = frozenset("abAB")
_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}


def check_word(w: str) -> str:
    if not w or not set(w) <= POSITIVE:
        raise ValueError(f"not a nonempty word over {{a, b}}: {w!r}")
    return w


def check_group_word(w: str) -> str:
    if not set(w) <= GROUP:
        raise ValueError(f"not a group word over {{a, b, A, B}}: {w!r}")
    return free_reduce(w)


_POWER_RE = re.compile(r"\(([abAB]+)\)\^(\d+)|([abAB])\^(\d+)")


def expand(text: str) -> str:
    """Expand the shorthand ``a^2`` / ``(ab^2)^3`` into a plain letter string."""
    prev = None
    text = text.replace(" ", "")
    while prev != text:
        prev = text
        text = _POWER_RE.sub(lambda m: (m.group(1) or m.group(3)) * int(m.group(2) or m.group(4)), text)
    return text


def free_reduce(w: str) -> str:
    out: list[str] = []
    for c in w:
        if out and out[-1] == _INVERSE[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def inverse(w: str) -> str:
    return "".join(_INVERSE[c] for c in reversed(w))


def lyndon_words(max_len: int) -> Iterator[str]:
    """All Lyndon words of length ``<= max_len`` in lexicographic order (Duval's successor)."""
    if max_len < 1:
        raise ValueError("max_len must be positive")
    w = [-1]
    while w:
        w[-1] += 1
        yield "".join("ab"[i] for i in w)
        m = len(w)
        while len(w) < max_len:
            w.append(w[-m])
        while w and w[-1] == 1:
            w.pop()


def is_lyndon(w: str) -> bool:
    return all(w < w[i:] + w[:i] for i in range(1, len(w)))


def rotations(w: str) -> list[str]:
    return [w[i:] + w[:i] for i in range(len(w))]


def reverse(w: str) -> str:
    return w[::-1]


def primitive_root(w: str) -> tuple[str, int]:
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    return w, 1  # empty word


def lyndon_rep(w: str) -> str:
    """Least rotation of the primitive root of ``w``."""
    root, _ = primitive_root(w)
    return min(rotations(root))


def syllabic_decomposition(w: str) -> list[int] | None:
    """Exponents ``k_i`` with ``w`` a rotation of ``a b^k1 a b^k2 ...``, or ``None``.

    Among rotations starting with ``a`` the lexicographically least one is
    split.  ``None`` when ``w`` has a cyclic ``aa`` or lacks either letter.
    """
    check_word(w)
    if "a" not in w or "b" not in w or "aa" in w + w[:1]:
        return None
    best = min(r for r in rotations(w) if r[0] == "a")
    return [len(block) for block in best.split("a")[1:]]


def is_subword(u: str, w: str) -> bool:
    """Whether ``u`` embeds in ``w`` as a scattered subsequence."""
    it = iter(w)
    return all(c in it for c in u)


def count_letters(w: str) -> tuple[int, int]:
    return w.count("a"), w.count("b")
