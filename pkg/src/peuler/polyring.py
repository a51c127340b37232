"""Exact polynomial arithmetic over the doubled variable set.

Two representations are kept side by side:

* :class:`MultiAffinePoly` -- monomials are frozensets of :class:`VarId`
  (every variable to the first power). This is the native home of the
  multivariate P-Eulerian polynomials and of the operators eta, partial, Phi.
* :class:`ExponentPoly` -- monomials are sorted ``((VarId, exponent), ...)``
  tuples; used for substitutions, weights carrying powers of ``x``/``y`` and
  the mod-2 reduction ``psi``.

Coefficients are Python ints whenever integral and :class:`fractions.Fraction`
otherwise, so integer data never pays for rational arithmetic.
"""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial
from numbers import Rational
from typing import Callable, Iterable, Mapping, NamedTuple

from .errors import ParseError, UnboundVariable

# ---------------------------------------------------------------------------
# variables

KIND_X, KIND_Y, KIND_Z, KIND_W = 0, 1, 2, 3


class VarId(NamedTuple):
    """A variable; tuple order gives x < y < z1 < z1' < z2 < ... < shadows."""

    kind: int
    index: int = 0
    primed: bool = False

    @property
    def name(self) -> str:
        if self.kind == KIND_X:
            return "x"
        if self.kind == KIND_Y:
            return "y"
        stem = "z" if self.kind == KIND_Z else "w"
        return f"{stem}{self.index}{'p' if self.primed else ''}"

    def __repr__(self) -> str:
        return self.name

    __str__ = __repr__


X = VarId(KIND_X)
Y = VarId(KIND_Y)


def z(index: int, primed: bool = False) -> VarId:
    if index < 1:
        raise ValueError("z-variables are indexed from 1")
    return VarId(KIND_Z, index, bool(primed))


def shadow(v: VarId) -> VarId:
    """Fresh variable paired with ``v`` in operator symbols."""
    if v.kind != KIND_Z:
        raise ValueError("only z-variables have shadows")
    return VarId(KIND_W, v.index, v.primed)


def block(indices: Iterable[int], primed: bool = False) -> frozenset[VarId]:
    return frozenset(z(i, primed) for i in indices)


def doubled(indices: Iterable[int]) -> frozenset[VarId]:
    """``{z_i, z_i'}`` for every index given."""
    idx = list(indices)
    return block(idx) | block(idx, True)


_VAR_RE = re.compile(r"^(?:(x)|(y)|([zw])(\d+)(p|')?)$")


def parse_var(name: str) -> VarId:
    m = _VAR_RE.match(name.strip())
    if not m:
        raise ParseError(f"unknown variable {name!r}")
    if m.group(1):
        return X
    if m.group(2):
        return Y
    kind = KIND_Z if m.group(3) == "z" else KIND_W
    index = int(m.group(4))
    if index < 1:
        raise ParseError(f"variable index must be positive: {name!r}")
    return VarId(kind, index, bool(m.group(5)))


def _display_key(v: VarId):
    # display order inside a monomial: x, y, unprimed block, primed block
    return (v.kind, v.primed, v.index)


# ---------------------------------------------------------------------------
# coefficients


def _coeff(c):
    if isinstance(c, bool):
        raise TypeError("boolean is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _coeff(Fraction(c.numerator, c.denominator))
    if isinstance(c, str):
        return _coeff(Fraction(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def _fmt_coeff(c) -> str:
    return str(c)


# ---------------------------------------------------------------------------
# shared behaviour


class _Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for mono, c in items:
                c = _coeff(c)
                if not c:
                    continue
                key = self._key(mono)
                total = clean.get(key, 0) + c
                if total:
                    clean[key] = _coeff(total)
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        # trusted constructor: keys canonical, coefficients nonzero and normalized
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- container protocol
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono):
        return self._terms.get(self._key(mono), 0)

    def constant_term(self):
        return self._terms.get(self._key(()), 0)

    # -- arithmetic shared by both types
    def scale(self, c):
        c = _coeff(c)
        if not c:
            return type(self)._raw({})
        return type(self)._raw({m: _coeff(v * c) for m, v in self._terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def _lift(self, other):
        if isinstance(other, _Poly):
            return other
        return type(self).constant(other)

    def __add__(self, other):
        if not isinstance(other, (_Poly, int, Fraction)):
            return NotImplemented
        other = self._lift(other)
        a, b = self, other
        if type(a) is not type(b):
            a, b = a.to_exponent(), b.to_exponent()
        out = dict(a._terms)
        for m, c in b._terms.items():
            t = out.get(m, 0) + c
            if t:
                out[m] = _coeff(t)
            else:
                out.pop(m, None)
        return type(a)._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (_Poly, int, Fraction)):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).constant(other)
        if not isinstance(other, _Poly):
            return NotImplemented
        if type(self) is not type(other):
            return self.to_exponent()._terms == other.to_exponent()._terms
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.to_exponent()._terms.items()))
        return self._hash

    # -- inspection
    def total_degree(self) -> int:
        """Largest monomial degree; -1 for the zero polynomial."""
        return max((self._mono_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({self._mono_degree(m) for m in self._terms}) <= 1

    def sorted_items(self):
        """Terms in canonical order: by degree, then reverse display order."""
        def key(item):
            seq = self._expanded(item[0])
            return (len(seq), tuple(_neg_key(v) for v in seq))

        return sorted(self._terms.items(), key=key)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.sorted_items():
            body = self._mono_text(mono)
            if not body:
                text = _fmt_coeff(c)
            elif c == 1:
                text = body
            elif c == -1:
                text = "-" + body
            else:
                text = f"{_fmt_coeff(c)}*{body}"
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"monomial": [v.name for v in self._expanded(m)], "coeff": str(c)}
                for m, c in self.sorted_items()
            ]
        }

    def _mono_text(self, mono) -> str:
        raise NotImplementedError


def _neg_key(v: VarId):
    k = _display_key(v)
    return (-k[0], -int(k[1]), -k[2])


# ---------------------------------------------------------------------------
# multiaffine polynomials


class MultiAffinePoly(_Poly):
    """Exact polynomial of degree at most one in every variable."""

    __slots__ = ()

    @staticmethod
    def _key(mono) -> frozenset:
        if isinstance(mono, frozenset):
            return mono
        mono = tuple(mono)
        fs = frozenset(mono)
        if len(fs) != len(mono):
            raise ValueError("repeated variable in a multiaffine monomial")
        return fs

    @staticmethod
    def _mono_degree(m) -> int:
        return len(m)

    @staticmethod
    def _expanded(m):
        return sorted(m, key=_display_key)

    def _mono_text(self, mono) -> str:
        return "*".join(v.name for v in sorted(mono, key=_display_key))

    @classmethod
    def constant(cls, c=1):
        c = _coeff(c)
        return cls._raw({frozenset(): c} if c else {})

    @classmethod
    def var(cls, v: VarId):
        return cls._raw({frozenset([v]): 1})

    @classmethod
    def monomial(cls, variables: Iterable[VarId], coeff=1):
        return cls({cls._key(variables): coeff})

    def variables(self) -> frozenset[VarId]:
        out = set()
        for m in self._terms:
            out |= m
        return frozenset(out)

    def monomials(self) -> list[frozenset]:
        return [m for m, _ in self.sorted_items()]

    def to_exponent(self) -> "ExponentPoly":
        return ExponentPoly._raw(
            {tuple((v, 1) for v in sorted(m)): c for m, c in self._terms.items()}
        )

    def to_multiaffine(self) -> "MultiAffinePoly":
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, ExponentPoly):
            return self.to_exponent() * other
        if not isinstance(other, MultiAffinePoly):
            return NotImplemented
        if self.variables() & other.variables():
            return self.to_exponent() * other.to_exponent()
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 | m2
                t = out.get(m, 0) + c1 * c2
                if t:
                    out[m] = _coeff(t)
                else:
                    out.pop(m, None)
        return MultiAffinePoly._raw(out)


# ---------------------------------------------------------------------------
# general polynomials


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class ExponentPoly(_Poly):
    """Exact polynomial with arbitrary nonnegative exponents."""

    __slots__ = ()

    @staticmethod
    def _key(mono) -> tuple:
        if isinstance(mono, frozenset):
            return tuple((v, 1) for v in sorted(mono))
        d = {}
        for item in mono:
            if isinstance(item, VarId):
                v, e = item, 1
            else:
                v, e = item
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                d[v] = d.get(v, 0) + e
        return tuple(sorted(d.items()))

    @staticmethod
    def _mono_degree(m) -> int:
        return sum(e for _, e in m)

    @staticmethod
    def _expanded(m):
        out = []
        for v, e in sorted(m, key=lambda ve: _display_key(ve[0])):
            out.extend([v] * e)
        return out

    def _mono_text(self, mono) -> str:
        parts = []
        for v, e in sorted(mono, key=lambda ve: _display_key(ve[0])):
            parts.append(v.name if e == 1 else f"{v.name}^{e}")
        return "*".join(parts)

    @classmethod
    def constant(cls, c=1):
        c = _coeff(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, v: VarId, power: int = 1):
        return cls._raw({((v, power),): 1} if power else {(): 1})

    def variables(self) -> frozenset[VarId]:
        return frozenset(v for m in self._terms for v, _ in m)

    def degree_in(self, v: VarId) -> int:
        return max((e for m in self._terms for w, e in m if w == v), default=0)

    def is_multiaffine(self) -> bool:
        return all(e == 1 for m in self._terms for _, e in m)

    def to_exponent(self) -> "ExponentPoly":
        return self

    def to_multiaffine(self) -> MultiAffinePoly:
        if not self.is_multiaffine():
            raise ValueError("polynomial is not multiaffine")
        return MultiAffinePoly._raw(
            {frozenset(v for v, _ in m): c for m, c in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, MultiAffinePoly):
            other = other.to_exponent()
        if not isinstance(other, ExponentPoly):
            return NotImplemented
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                t = out.get(m, 0) + c1 * c2
                if t:
                    out[m] = _coeff(t)
                else:
                    out.pop(m, None)
        return ExponentPoly._raw(out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = ExponentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


Poly = MultiAffinePoly | ExponentPoly


def simplify(f: Poly) -> Poly:
    """Return the multiaffine form when every exponent is at most one."""
    if isinstance(f, ExponentPoly) and f.is_multiaffine():
        return f.to_multiaffine()
    return f


# ---------------------------------------------------------------------------
# creation / annihilation / shift operators


def _as_multiaffine(f) -> MultiAffinePoly:
    if isinstance(f, MultiAffinePoly):
        return f
    if isinstance(f, ExponentPoly):
        return f.to_multiaffine()
    return MultiAffinePoly.constant(f)


def eta(e: VarId, f) -> MultiAffinePoly:
    """Set ``z_e = 0`` and multiply by ``z_e``."""
    f = _as_multiaffine(f)
    return MultiAffinePoly._raw(
        {m | {e}: c for m, c in f.items() if e not in m}
    )


def partial(e: VarId, f) -> MultiAffinePoly:
    f = _as_multiaffine(f)
    return MultiAffinePoly._raw({m - {e}: c for m, c in f.items() if e in m})


def eta_set(T: Iterable[VarId], f) -> MultiAffinePoly:
    T = frozenset(T)
    f = _as_multiaffine(f)
    return MultiAffinePoly._raw({m | T: c for m, c in f.items() if not (m & T)})


def partial_set(S: Iterable[VarId], f) -> MultiAffinePoly:
    S = frozenset(S)
    f = _as_multiaffine(f)
    return MultiAffinePoly._raw({m - S: c for m, c in f.items() if S <= m})


def map_variables(f: Poly, mapping: Callable[[VarId], VarId] | Mapping[VarId, VarId]) -> Poly:
    """Rename variables; the renaming must be injective on the support of ``f``."""
    fn = mapping if callable(mapping) else (lambda v: mapping.get(v, v))
    if isinstance(f, MultiAffinePoly):
        out = {}
        for m, c in f.items():
            key = frozenset(fn(v) for v in m)
            if len(key) != len(m):
                raise ValueError("variable renaming is not injective")
            out[key] = out.get(key, 0) + c
        return MultiAffinePoly(out)
    return ExponentPoly([(tuple((fn(v), e) for v, e in m), c) for m, c in f.items()])


def gamma_shift(k: int, f: Poly) -> Poly:
    """Shift every z-index by ``k``; x and y are untouched."""
    if k == 0:
        return f
    return map_variables(
        f, lambda v: VarId(v.kind, v.index + k, v.primed) if v.kind == KIND_Z else v
    )


def rename_indices(f: Poly, sigma: Mapping[int, int]) -> Poly:
    """Apply an index permutation to z-variables, primed and unprimed alike."""
    return map_variables(
        f,
        lambda v: VarId(v.kind, sigma.get(v.index, v.index), v.primed)
        if v.kind == KIND_Z
        else v,
    )


def swap_primes(f: Poly) -> Poly:
    return map_variables(
        f, lambda v: VarId(v.kind, v.index, not v.primed) if v.kind == KIND_Z else v
    )


def phi(f, F: Iterable[VarId], G: Iterable[VarId]) -> MultiAffinePoly:
    """Sum of eta^T partial^S f over T in F, S in G with |S| = |T| + 1.

    Only S inside the monomial and T outside it contribute, so each monomial
    is expanded over those subsets alone.
    """
    F = frozenset(F)
    G = frozenset(G)
    if F & G:
        raise ValueError("Phi needs disjoint variable blocks")
    f = _as_multiaffine(f)
    out: dict = {}
    for m, c in f.items():
        present = sorted(m & G)
        absent = sorted(F - m)
        for k in range(min(len(absent), len(present) - 1) + 1):
            for S in combinations(present, k + 1):
                base = m.difference(S)
                for T in combinations(absent, k):
                    key = base.union(T)
                    t = out.get(key, 0) + c
                    if t:
                        out[key] = _coeff(t)
                    else:
                        del out[key]
    return MultiAffinePoly._raw(out)


# ---------------------------------------------------------------------------
# symmetrization and mod-2 reduction


def _elementary(A: list[VarId], k: int) -> list[frozenset]:
    return [frozenset(s) for s in combinations(A, k)]


def symmetrize(A: Iterable[VarId], f: Poly) -> Poly:
    """Average of ``f`` over all permutations of the variables in ``A``."""
    A = sorted(frozenset(A))
    if len(A) <= 1:
        return f
    if isinstance(f, MultiAffinePoly):
        Aset = frozenset(A)
        out: dict = {}
        for m, c in f.items():
            inside = m & Aset
            k = len(inside)
            rest = m - Aset
            share = Fraction(c, comb(len(A), k))
            for sub in _elementary(A, k):
                key = rest | sub
                out[key] = out.get(key, 0) + share
        return MultiAffinePoly(out)
    return symmetrize_bruteforce(A, f)


def symmetrize_bruteforce(A: Iterable[VarId], f: Poly) -> Poly:
    """Literal group average; the reference route for :func:`symmetrize`."""
    A = sorted(frozenset(A))
    total = type(f).constant(0)
    for perm in permutations(A):
        total = total + map_variables(f, dict(zip(A, perm)))
    return total.scale(Fraction(1, factorial(len(A))))


def is_symmetric_in(f: Poly, A: Iterable[VarId]) -> bool:
    """Invariance under the adjacent transpositions generating Sym(A)."""
    A = sorted(frozenset(A))
    for a, b in zip(A, A[1:]):
        if map_variables(f, {a: b, b: a}) != f:
            return False
    return True


def psi(f: Poly) -> ExponentPoly:
    """Reduce every exponent mod 2, merging coefficients of equal images."""
    f = f.to_exponent()
    return ExponentPoly([(tuple((v, e % 2) for v, e in m), c) for m, c in f.items()])


# ---------------------------------------------------------------------------
# substitution and evaluation


def _as_poly(value) -> ExponentPoly:
    if isinstance(value, _Poly):
        return value.to_exponent()
    if isinstance(value, VarId):
        return ExponentPoly.var(value)
    return ExponentPoly.constant(value)


def substitute(f: Poly, mapping: Mapping[VarId, object]) -> ExponentPoly:
    """Simultaneous substitution; unmapped variables stay as they are."""
    images = {v: _as_poly(t) for v, t in mapping.items()}
    cache: dict = {}

    def power(v, e):
        key = (v, e)
        if key not in cache:
            cache[key] = images[v] ** e
        return cache[key]

    acc: dict = {}
    for m, c in f.to_exponent().items():
        kept = []
        term = ExponentPoly.constant(c)
        for v, e in m:
            if v in images:
                term = term * power(v, e)
            else:
                kept.append((v, e))
        if kept:
            term = term * ExponentPoly._raw({tuple(kept): 1})
        for mm, cc in term.items():
            acc[mm] = acc.get(mm, 0) + cc
    return ExponentPoly(acc)


def evaluate(f: Poly, point: Mapping):
    """Evaluate at a point given as ``{VarId or name: value}``.

    Works for any values supporting ``+``, ``*`` and integer powers: exact for
    ints/Fractions, double precision for complex, intervals for mpmath ``iv``.
    """
    pt = {}
    for k, v in point.items():
        pt[parse_var(k) if isinstance(k, str) else k] = v
    needed = f.variables()
    missing = [v for v in needed if v not in pt]
    if missing:
        raise UnboundVariable(
            "no value for " + ", ".join(v.name for v in sorted(missing))
        )
    total = 0
    for m, c in f.to_exponent().items():
        term = c
        for v, e in m:
            term = term * (pt[v] if e == 1 else pt[v] ** e)
        total = total + term
    return total


# ---------------------------------------------------------------------------
# operator symbols


def operator_symbol(T: Callable[[MultiAffinePoly], Poly], ground: Iterable[VarId]) -> MultiAffinePoly:
    """``T[(z_1 + w_1) ... (z_n + w_n)]`` expanded as sum_S T(z^S) w^(V\\S)."""
    V = sorted(frozenset(ground))
    out: dict = {}
    for r in range(len(V) + 1):
        for S in combinations(V, r):
            Sset = frozenset(S)
            image = _as_multiaffine(T(MultiAffinePoly._raw({Sset: 1})))
            if not image:
                continue
            ws = frozenset(shadow(v) for v in V if v not in Sset)
            for m, c in image.items():
                key = m | ws
                out[key] = out.get(key, 0) + c
    return MultiAffinePoly(out)


# ---------------------------------------------------------------------------
# text and JSON forms

_TERM_SPLIT = re.compile(r"([+-])")


def parse_poly(text: str) -> Poly:
    """Parse the canonical text form, e.g. ``"z1*z1p*z2p - 1/2*x^2*y + 3"``."""
    s = text.replace(" ", "").replace("**", "^").replace("\n", "")
    if not s:
        raise ParseError("empty polynomial")
    tokens = _TERM_SPLIT.split(s)
    terms = []
    sign = 1
    pending = False
    for tok in tokens:
        if tok == "+":
            pending = True
            continue
        if tok == "-":
            sign = -sign
            pending = True
            continue
        if not tok:
            continue
        terms.append((sign, tok))
        sign = 1
        pending = False
    if pending:
        raise ParseError(f"dangling operator in {text!r}")
    acc: list = []
    for sgn, body in terms:
        coeff = Fraction(sgn)
        mono: list = []
        for factor in body.split("*"):
            if not factor:
                raise ParseError(f"empty factor in {body!r}")
            if "^" in factor:
                base, _, exp = factor.partition("^")
                try:
                    e = int(exp)
                except ValueError as exc:
                    raise ParseError(f"bad exponent in {factor!r}") from exc
            else:
                base, e = factor, 1
            if re.fullmatch(r"\d+(/\d+)?", base):
                coeff *= Fraction(base) ** e
            else:
                mono.append((parse_var(base), e))
        acc.append((mono, coeff))
    return simplify(ExponentPoly(acc))


def poly_from_json(obj) -> Poly:
    try:
        raw = obj["terms"]
        acc = []
        for t in raw:
            coeff = Fraction(str(t["coeff"]))
            acc.append(([parse_var(n) for n in t["monomial"]], coeff))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed polynomial JSON: {exc}") from exc
    return simplify(ExponentPoly(acc))
