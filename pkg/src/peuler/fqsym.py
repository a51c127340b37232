"""Free quasi-symmetric functions: the shuffle algebra on permutations,
linear weights, and the DAB product on w1-images."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .dyck import theta
from .errors import InvalidGrade
from .eulerian import WeightKind, weight
from .permstat import Permutation, as_permutation, format_permutation
from .polyring import KIND_Z, ExponentPoly, MultiAffinePoly, doubled, gamma_shift, phi


class FQSymElement:
    """Integer combination of permutations of one common size ``n``."""

    __slots__ = ("n", "_terms")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable = (), n: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Permutation, int] = {}
        for p, c in items:
            p = as_permutation(p)
            if n is None:
                n = len(p)
            elif len(p) != n:
                raise InvalidGrade(f"mixed grades {n} and {len(p)} in one component")
            t = clean.get(p, 0) + int(c)
            if t:
                clean[p] = t
            else:
                clean.pop(p, None)
        self.n = 0 if n is None else n
        self._terms = clean

    @classmethod
    def basis(cls, p: Sequence[int]) -> "FQSymElement":
        p = as_permutation(p)
        return cls({p: 1})

    @classmethod
    def _raw(cls, n: int, terms: dict):
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        return obj

    @property
    def terms(self) -> dict[Permutation, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FQSymElement):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.n == other.n and self._terms == other._terms

    def __add__(self, other: "FQSymElement") -> "FQSymElement":
        if not other:
            return self
        if not self:
            return other
        if self.n != other.n:
            raise InvalidGrade("cannot add components of different grade")
        out = dict(self._terms)
        for p, c in other._terms.items():
            t = out.get(p, 0) + c
            if t:
                out[p] = t
            else:
                out.pop(p)
        return FQSymElement._raw(self.n, out)

    def scale(self, c: int) -> "FQSymElement":
        if not c:
            return FQSymElement._raw(self.n, {})
        return FQSymElement._raw(self.n, {p: v * c for p, v in self._terms.items()})

    def __mul__(self, other: "FQSymElement") -> "FQSymElement":
        return product(self, other)

    def __str__(self):
        if not self._terms:
            return "0"
        out = ""
        for p in sorted(self._terms):
            c = self._terms[p]
            word = format_permutation(p)
            body = word if abs(c) == 1 else f"{abs(c)}*{word}"
            if not out:
                out = body if c > 0 else "-" + body
            else:
                out += (" + " if c > 0 else " - ") + body
        return out

    def __repr__(self):
        return f"FQSymElement({str(self)!r})"


def shuffle(p: Sequence[int], q: Sequence[int]) -> FQSymElement:
    """Interleavings of ``p`` with ``q`` shifted up by ``len(p)``.

    Enumerated by the position set of ``p`` inside the result, in
    lexicographic order of those positions.
    """
    p, q = as_permutation(p), as_permutation(q)
    n, m = len(p), len(q)
    qhat = [v + n for v in q]
    out: dict[Permutation, int] = {}
    for pos in combinations(range(n + m), n):
        word = [0] * (n + m)
        chosen = set(pos)
        it_p, it_q = iter(p), iter(qhat)
        for i in range(n + m):
            word[i] = next(it_p) if i in chosen else next(it_q)
        t = tuple(word)
        out[t] = out.get(t, 0) + 1
    return FQSymElement._raw(n + m, out)


def product(f: FQSymElement, g: FQSymElement) -> FQSymElement:
    """Bilinear extension of :func:`shuffle`."""
    if not f or not g:
        return FQSymElement._raw(f.n + g.n, {})
    out: dict[Permutation, int] = {}
    for p, a in f.items():
        for q, b in g.items():
            for t, c in shuffle(p, q).items():
                v = out.get(t, 0) + a * b * c
                if v:
                    out[t] = v
                else:
                    out.pop(t)
    return FQSymElement._raw(f.n + g.n, out)


def one_shuffle_power(n: int) -> FQSymElement:
    """``1 * 1 * ... * 1`` (n factors)."""
    out = FQSymElement.basis(())
    one = FQSymElement.basis((1,))
    for _ in range(n):
        out = product(out, one)
    return out


def weight_of_element(kind: WeightKind, f: FQSymElement):
    """Linear extension of ``weight``."""
    acc: dict = {}
    for p, c in f.items():
        for mono, v in weight(kind, p).items():
            acc[mono] = acc.get(mono, 0) + c * v
    return MultiAffinePoly(acc) if kind is WeightKind.W1 else ExponentPoly(acc)


# ---------------------------------------------------------------------------
# DAB product


def dab_grade(f: MultiAffinePoly) -> int:
    """Grade ``n`` of a homogeneous DAB element (degree ``n + 1``); 0 for constants.

    Raises :class:`InvalidGrade` when ``f`` is not homogeneous or uses a
    variable outside ``[n] u [n]'``.
    """
    if not f:
        raise InvalidGrade("zero has no grade")
    degrees = {len(m) for m in f.monomials()}
    if len(degrees) != 1:
        raise InvalidGrade("DAB element is not homogeneous")
    d = degrees.pop()
    if d == 0:
        return 0
    n = d - 1
    for v in f.variables():
        if v.kind != KIND_Z or v.index > n:
            raise InvalidGrade(f"variable {v.name} outside grade {n}")
    return n


def dab_product(a: MultiAffinePoly, b: MultiAffinePoly) -> MultiAffinePoly:
    """``Phi(a * shift_n(b))`` with the grade-0 unit law.

    Inputs must be spans of w1-monomials; each monomial is checked against
    the Dyck-code criterion through Theta.
    """
    n, m = dab_grade(a), dab_grade(b)
    for f in (a, b):
        for mono in f.monomials():
            if mono:
                theta(mono)
    if n == 0:
        return b.scale(a.constant_term())
    if m == 0:
        return a.scale(b.constant_term())
    shifted = gamma_shift(n, b)
    return phi(a * shifted, doubled(range(1, n + 1)), doubled(range(n + 1, n + m + 1)))
