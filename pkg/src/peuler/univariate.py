"""Dense univariate polynomials over Q with exact Sturm root counting."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .polyring import ExponentPoly, VarId, X, _coeff


class UnivariatePoly:
    """Exact rational coefficients, constant term first; trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def from_roots(cls, roots: Sequence, lead=1) -> "UnivariatePoly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-Fraction(r), 1])
        return p

    @classmethod
    def from_poly(cls, f, var: VarId = X) -> "UnivariatePoly":
        """Read a polynomial in the single variable ``var``."""
        coeffs: dict[int, object] = {}
        for mono, c in f.to_exponent().items():
            e = 0
            for v, k in mono:
                if v != var:
                    raise ValueError(f"polynomial involves {v.name}, not only {var.name}")
                e = k
            coeffs[e] = coeffs.get(e, 0) + c
        top = max(coeffs, default=-1)
        return cls([coeffs.get(i, 0) for i in range(top + 1)])

    def to_poly(self, var: VarId = X) -> ExponentPoly:
        return ExponentPoly([(((var, i),) if i else (), c) for i, c in enumerate(self.coeffs)])

    # -- basic data
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UnivariatePoly([other])
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariatePoly({str(self)!r})"

    def __str__(self):
        return str(self.to_poly(X))

    # -- arithmetic
    def __add__(self, other):
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if self.is_zero or other.is_zero:
            return UnivariatePoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePoly(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "UnivariatePoly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        dq = other.degree
        lead = Fraction(other.leading)
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return UnivariatePoly(quot), UnivariatePoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UnivariatePoly":
        return UnivariatePoly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "UnivariatePoly":
        if self.is_zero:
            return self
        lead = Fraction(self.leading)
        return UnivariatePoly(Fraction(c) / lead for c in self.coeffs)

    def compose_power(self, k: int) -> "UnivariatePoly":
        """``p(x^k)``."""
        out = [0] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return UnivariatePoly(out)

    def shift_down(self, k: int = 1) -> "UnivariatePoly":
        """Divide by ``x^k``; the low coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValueError(f"not divisible by x^{k}")
        return UnivariatePoly(self.coeffs[k:])

    def roots(self):
        """Floating-point roots (numpy); for evidence and witnesses only."""
        import numpy as np

        if self.degree < 1:
            return np.array([], dtype=complex)
        return np.roots([float(c) for c in reversed(self.coeffs)])


def _lift(p) -> UnivariatePoly:
    if isinstance(p, UnivariatePoly):
        return p
    return UnivariatePoly([p])


def poly_gcd(a: UnivariatePoly, b: UnivariatePoly) -> UnivariatePoly:
    """Monic gcd by the Euclidean algorithm over Q."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def squarefree_part(p: UnivariatePoly) -> UnivariatePoly:
    """``p / gcd(p, p')``: same roots, all simple."""
    if p.degree < 1:
        return p
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


# ---------------------------------------------------------------------------
# Sturm sequences


def sturm_chain(p: UnivariatePoly) -> list[UnivariatePoly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _sign(c) -> int:
    return (c > 0) - (c < 0)


def _variations(signs: Iterable[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _signs_at(chain, x) -> list[int]:
    if x == "+inf":
        return [_sign(q.leading) for q in chain]
    if x == "-inf":
        return [_sign(q.leading) * (-1) ** q.degree for q in chain]
    return [_sign(q(x)) for q in chain]


def count_real_roots(p: UnivariatePoly, lo="-inf", hi="+inf") -> int:
    """Distinct real roots of ``p`` in ``(lo, hi]`` (ends may be infinite).

    Finite ends must not be roots of ``p``'s square-free part except ``hi``.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has infinitely many roots")
    q = squarefree_part(p)
    if q.degree < 1:
        return 0
    chain = sturm_chain(q)
    if lo not in ("-inf",) and q(lo) == 0:
        raise ValueError("lower end is a root")
    return _variations(_signs_at(chain, lo)) - _variations(_signs_at(chain, hi))
