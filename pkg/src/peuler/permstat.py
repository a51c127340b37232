"""Permutation statistics.

Descent/ascent bottoms and the peak-valley set read a permutation with
infinite sentinels at both ends; ``descent_count`` and ``peak_set`` look only
at internal positions. Sets come back as sorted tuples.
"""
from __future__ import annotations

from typing import Sequence

from .errors import InvalidPermutation
from .polyring import VarId, z

Permutation = tuple[int, ...]


def as_permutation(word: Sequence[int] | str) -> Permutation:
    """Validate and normalize a permutation in one-line notation.

    Strings are read digit by digit (``"1324"``) unless they contain commas
    or spaces, in which case they are split (``"10,2,1,..."``).
    """
    if isinstance(word, str):
        text = word.strip()
        if text in ("", "e", "()"):
            return ()
        if "," in text or " " in text:
            parts = [t for t in text.replace(",", " ").split()]
        else:
            parts = list(text)
        try:
            word = [int(t) for t in parts]
        except ValueError as exc:
            raise InvalidPermutation(f"not a permutation: {text!r}") from exc
    perm = tuple(int(v) for v in word)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise InvalidPermutation(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


def format_permutation(p: Sequence[int]) -> str:
    if not p:
        return "e"
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def descent_count(p: Sequence[int]) -> int:
    return sum(1 for i in range(len(p) - 1) if p[i] > p[i + 1])


def _neighbors(p):
    inf = len(p) + 1
    for i, v in enumerate(p):
        left = p[i - 1] if i > 0 else inf
        right = p[i + 1] if i + 1 < len(p) else inf
        yield left, v, right


def descent_bottoms(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(v for left, v, _ in _neighbors(p) if left > v))


def ascent_bottoms(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(v for _, v, right in _neighbors(p) if v < right))


def bottom_set(p: Sequence[int]) -> tuple[VarId, ...]:
    """Descent bottoms as unprimed variables plus primed copies of ascent bottoms."""
    found = [z(e) for e in descent_bottoms(p)] + [z(e, True) for e in ascent_bottoms(p)]
    return tuple(sorted(found))


def peak_set(p: Sequence[int]) -> tuple[int, ...]:
    """Internal indices ``i`` (1-based) with ``p[i-1] < p[i] > p[i+1]``."""
    return tuple(
        i + 1 for i in range(1, len(p) - 1) if p[i - 1] < p[i] > p[i + 1]
    )


def peak_valley_set(p: Sequence[int]) -> tuple[int, ...]:
    return tuple(
        sorted(
            v
            for left, v, right in _neighbors(p)
            if (left < v > right) or (left > v < right)
        )
    )
