"""The Dyck-path algebra: coded u/d words, letter flips, the bullet product,
and the map Theta from DAB monomials to codes.

A Dyck path ``w_1 ... w_2n`` is coded as ``u w_1 ... w_{2n-1}`` (prepend an
up step, drop the final down step). Words are bit vectors with ``u = 1`` and
position ``i`` (1-based) at bit ``i - 1``; in this layout a code's bits are
exactly the W1 census mask of the monomial it comes from.
"""
from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

from . import kernels
from .errors import NotInDAB, ParseError
from .polyring import KIND_Z, MultiAffinePoly, VarId


class DyckWord:
    """A word over ``{u, d}``; not necessarily a valid code (see :meth:`is_valid`)."""

    __slots__ = ("bits", "length")

    def __init__(self, letters: str | Iterable[str] = "", *, bits: int | None = None, length: int | None = None):
        if bits is not None:
            self.bits = int(bits)
            self.length = int(length)
            return
        text = "".join(letters)
        b = 0
        for i, ch in enumerate(text):
            if ch == "u":
                b |= 1 << i
            elif ch != "d":
                raise ParseError(f"letters must be u or d, got {ch!r}")
        self.bits = b
        self.length = len(text)

    @property
    def letters(self) -> str:
        return "".join("u" if (self.bits >> i) & 1 else "d" for i in range(self.length))

    @property
    def semilength(self) -> int:
        return self.length // 2

    def __getitem__(self, i: int) -> str:
        """1-based letter access."""
        if not 1 <= i <= self.length:
            raise IndexError(i)
        return "u" if (self.bits >> (i - 1)) & 1 else "d"

    def __add__(self, other: "DyckWord") -> "DyckWord":
        return DyckWord(bits=self.bits | (other.bits << self.length), length=self.length + other.length)

    def __eq__(self, other):
        if isinstance(other, str):
            return self.letters == other
        if not isinstance(other, DyckWord):
            return NotImplemented
        return self.bits == other.bits and self.length == other.length

    def __lt__(self, other: "DyckWord"):
        return (self.length, self.letters) < (other.length, other.letters)

    def __hash__(self):
        return hash((self.bits, self.length))

    def __len__(self):
        return self.length

    def __str__(self):
        return self.letters

    def __repr__(self):
        return f"DyckWord({self.letters!r})"

    def is_valid(self) -> bool:
        return is_valid_code(self)


def _word(w) -> DyckWord:
    return w if isinstance(w, DyckWord) else DyckWord(w)


def is_valid_code(w) -> bool:
    """Drop the first letter, append ``d``: must be a Dyck path; first two letters ``uu``.

    The empty word is the unit and counts as valid.
    """
    w = _word(w)
    if w.length == 0:
        return True
    if w.length % 2 or w.length < 2 or w.bits & 3 != 3:
        return False
    h = 0
    for i in range(1, w.length):
        h += 1 if (w.bits >> i) & 1 else -1
        if h < 0:
            return False
    return h - 1 == 0


def flip_down(i: int, w) -> DyckWord | None:
    """``u -> d`` at position ``i``; ``None`` (the zero word) otherwise."""
    w = _word(w)
    if not 1 <= i <= w.length or not (w.bits >> (i - 1)) & 1:
        return None
    return DyckWord(bits=w.bits & ~(1 << (i - 1)), length=w.length)


def flip_up(i: int, w) -> DyckWord | None:
    """``d -> u`` at position ``i``; ``None`` otherwise."""
    w = _word(w)
    if not 1 <= i <= w.length or (w.bits >> (i - 1)) & 1:
        return None
    return DyckWord(bits=w.bits | (1 << (i - 1)), length=w.length)


# ---------------------------------------------------------------------------
# the bullet product


def bullet(w, v) -> dict[DyckWord, int]:
    """Sum over T (flips d->u in ``w``) and S (flips u->d in ``v``), |S| = |T| + 1,
    of the concatenated words; the empty word is a two-sided unit."""
    w, v = _word(w), _word(v)
    if w.length == 0:
        return {v: 1}
    if v.length == 0:
        return {w: 1}
    raw = kernels.bullet_words(w.bits, w.length, v.bits, v.length)
    total = w.length + v.length
    return {DyckWord(bits=b, length=total): c for b, c in raw.items()}


def bullet_sum(a: Mapping, b: Mapping) -> dict[DyckWord, int]:
    """Bilinear extension of :func:`bullet` to formal sums."""
    out: dict[DyckWord, int] = {}
    for w, x in a.items():
        for v, y in b.items():
            for u, c in bullet(w, v).items():
                t = out.get(u, 0) + x * y * c
                if t:
                    out[u] = t
                else:
                    out.pop(u)
    return out


def bullet_power(w, n: int) -> dict[DyckWord, int]:
    out: dict = {DyckWord(""): 1}
    for _ in range(n):
        out = bullet_sum(out, {_word(w): 1})
    return out


def format_sum(s: Mapping) -> str:
    if not s:
        return "0"
    parts = []
    for w in sorted(s):
        c = s[w]
        parts.append(str(w) if c == 1 else f"{c}*{w}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Theta


def theta(m, n: int | None = None) -> DyckWord:
    """Code of a w1-monomial: position ``2i-1`` is ``u`` iff ``z_i`` occurs,
    position ``2i`` iff ``z_i'`` occurs. ``n`` defaults to ``deg(m) - 1``."""
    if isinstance(m, MultiAffinePoly):
        if len(m) != 1:
            raise NotInDAB("theta takes a single monomial; use theta_linear for sums")
        (m,) = m.monomials()
    m = frozenset(m)
    if n is None:
        n = len(m) - 1
    bits = 0
    for v in m:
        if v.kind != KIND_Z or not 1 <= v.index <= n:
            raise NotInDAB(f"variable {v.name} outside [{n}] u [{n}]'")
        bits |= 1 << (2 * (v.index - 1) + int(v.primed))
    word = DyckWord(bits=bits, length=2 * n)
    if len(m) != n + 1 or not is_valid_code(word):
        raise NotInDAB(f"{word} is not a Dyck code")
    return word


def theta_inverse(w) -> frozenset[VarId]:
    w = _word(w)
    if not is_valid_code(w):
        raise NotInDAB(f"{w} is not a Dyck code")
    return frozenset(
        VarId(KIND_Z, i // 2 + 1, bool(i & 1)) for i in range(w.length) if (w.bits >> i) & 1
    )


def theta_linear(f: MultiAffinePoly) -> dict[DyckWord, int]:
    out: dict = {}
    for m, c in f.items():
        word = theta(m)
        out[word] = out.get(word, 0) + c
    return out


# ---------------------------------------------------------------------------
# enumeration and the surjectivity construction


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def enumerate_dyck(n: int) -> list[DyckWord]:
    """All codes of semilength ``n``, lexicographic with ``d < u``."""
    if n == 0:
        return [DyckWord("")]
    out: list[str] = []

    def walk(prefix: list[str], h: int, ups: int):
        # prefix of the underlying path; its last step is fixed to d
        if len(prefix) == 2 * n - 1:
            if h == 1:
                out.append("u" + "".join(prefix))
            return
        if h > 0:
            prefix.append("d")
            walk(prefix, h - 1, ups)
            prefix.pop()
        if ups < n:
            prefix.append("u")
            walk(prefix, h + 1, ups + 1)
            prefix.pop()

    walk([], 0, 0)
    return [DyckWord(s) for s in sorted(out)]


def predecessor(v) -> tuple[DyckWord, int]:
    """Turn the first ``d`` (position ``j``) into ``u`` and drop two letters.

    Returns ``(w, j)`` with ``v = uu + flip_down(j - 2, w)``, so ``v`` lies in
    the support of ``uu . w``.
    """
    v = _word(v)
    if v.semilength < 2:
        raise ValueError("predecessor needs semilength at least 2")
    j = next(i for i in range(1, v.length + 1) if v[i] == "d")
    raised = flip_up(j, v)
    w = DyckWord(bits=raised.bits >> 2, length=v.length - 2)
    return w, j
