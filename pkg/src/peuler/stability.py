"""Real-rootedness and Hurwitz decisions for univariate polynomials, block
collapses, Malo products, and a semi-decision for multivariate stability.

Univariate questions are decided exactly (Sturm chains, Routh arrays).
Multivariate stability is only semi-decided: a :class:`StabilityVerdict`
is ``Certified`` only when exact reductions leave at most two variables,
``Refuted`` only with a witness point whose value is confirmed exactly (in
``Q(i)``) or by interval evaluation, and ``Inconclusive`` otherwise.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

import numpy as np

from .errors import InvalidParameter, NotHomogeneous, NotSymmetric, ZeroPolynomial
from .polyring import (
    KIND_W,
    KIND_Z,
    ExponentPoly,
    MultiAffinePoly,
    VarId,
    X,
    Y,
    _display_key,
    doubled,
    evaluate,
    is_symmetric_in,
    operator_symbol,
    phi,
    shadow,
    substitute,
)
from .univariate import UnivariatePoly, count_real_roots, squarefree_part

UPPER = "upper"
RIGHT = "right"
REGIONS = (UPPER, RIGHT)

# |f| threshold for sampled candidates, relative to sum |c_m z^m|
ZERO_TOL = 1e-9


# ---------------------------------------------------------------------------
# Gaussian rationals


class QI:
    """Exact element of ``Q(i)``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def of(cls, v) -> "QI":
        if isinstance(v, QI):
            return v
        if isinstance(v, complex):
            return cls(Fraction.from_float(v.real), Fraction.from_float(v.imag))
        if isinstance(v, float):
            return cls(Fraction.from_float(v))
        return cls(v)

    def __add__(self, o):
        o = QI.of(o)
        return QI(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __sub__(self, o):
        return self + (-QI.of(o))

    def __rsub__(self, o):
        return QI.of(o) - self

    def __mul__(self, o):
        o = QI.of(o)
        return QI(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = QI(1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, o):
        o = QI.of(o)
        den = o.re * o.re + o.im * o.im
        if not den:
            raise ZeroDivisionError("division by zero in Q(i)")
        return QI((self.re * o.re + self.im * o.im) / den, (self.im * o.re - self.re * o.im) / den)

    def __eq__(self, o):
        try:
            o = QI.of(o)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"QI({self.re}, {self.im})"


# ---------------------------------------------------------------------------
# univariate decisions


def is_real_rooted(p: UnivariatePoly) -> bool:
    """All complex roots real; constants count as real-rooted."""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no root set")
    q = squarefree_part(p)
    return q.degree < 1 or count_real_roots(q) == q.degree


def is_real_rooted_negative(p: UnivariatePoly) -> bool:
    """Real-rooted with every root strictly negative."""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no root set")
    if p[0] == 0:
        return False
    q = squarefree_part(p)
    return q.degree < 1 or count_real_roots(q, "-inf", 0) == q.degree


def malo_star(f: UnivariatePoly, g: UnivariatePoly) -> UnivariatePoly:
    """Coefficientwise product."""
    return UnivariatePoly(a * b for a, b in zip(f.coeffs, g.coeffs))


def malo_binom_poly(n: int, m: int) -> UnivariatePoly:
    """``sum_k C(n,k) C(m,k+1) x^k``."""
    if n < 1 or m < 2:
        raise InvalidParameter(f"need n >= 1 and m >= 2, got n={n}, m={m}")
    return UnivariatePoly(comb(n, k) * comb(m, k + 1) for k in range(n + 1))


def routh_first_column(p: UnivariatePoly) -> list | None:
    """First column of the Routh array, or ``None`` if a pivot or a whole row vanishes.

    A vanishing pivot or row means a root with nonnegative real part, so
    callers that only need the strict Hurwitz yes/no can stop there.
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no root set")
    c = [Fraction(v) for v in reversed(p.coeffs)]  # leading coefficient first
    rows = [c[0::2], c[1::2]]
    width = len(rows[0])
    rows[1] = rows[1] + [Fraction(0)] * (width - len(rows[1]))
    col = [rows[0][0]]
    for _ in range(p.degree):
        top, bot = rows[-2], rows[-1]
        if not any(bot) or bot[0] == 0:
            return None
        col.append(bot[0])
        nxt = [
            (bot[0] * top[k + 1] - top[0] * bot[k + 1]) / bot[0] if k + 1 < width else Fraction(0)
            for k in range(width)
        ]
        rows.append(nxt)
    return col


def is_hurwitz_univariate(p: UnivariatePoly) -> bool:
    """No root with real part >= 0 (Routh: all pivots nonzero, one sign)."""
    col = routh_first_column(p)
    if col is None:
        return False
    return all(v > 0 for v in col) or all(v < 0 for v in col)


# ---------------------------------------------------------------------------
# block collapse and bivariate forms


def gws_collapse(f, block: Iterable[VarId], target: VarId | None = None) -> ExponentPoly:
    """Identify every variable of ``block`` with ``target`` (default: the first).

    ``f`` must be multiaffine and symmetric in the block.
    """
    block = sorted(frozenset(block), key=_display_key)
    if not block:
        return f.to_exponent()
    g = f.to_exponent()
    if any(g.degree_in(v) > 1 for v in block):
        raise NotSymmetric("collapse needs a polynomial of degree at most one in each block variable")
    if not is_symmetric_in(g, block):
        raise NotSymmetric("polynomial is not symmetric in " + ", ".join(v.name for v in block))
    target = block[0] if target is None else target
    return substitute(g, {v: target for v in block})


def _pair_variables(h) -> tuple[VarId, VarId]:
    vs = sorted(h.variables(), key=_display_key)
    if len(vs) > 2:
        raise ValueError("more than two variables")
    if len(vs) == 2:
        return vs[0], vs[1]
    if len(vs) == 1:
        return vs[0], (Y if vs[0] != Y else X)
    return X, Y


def _dehomogenize(h, a: VarId, b: VarId) -> UnivariatePoly:
    """``h(t, 1)`` with ``t`` standing for ``a``."""
    coeffs: dict[int, object] = {}
    for m, c in h.to_exponent().items():
        e = dict(m).get(a, 0)
        coeffs[e] = coeffs.get(e, 0) + c
    return UnivariatePoly([coeffs.get(i, 0) for i in range(max(coeffs) + 1)])


def homogeneous_bivariate_stable(h) -> bool:
    """Stability of a homogeneous form in at most two variables.

    Decided as: ``h(t, 1)`` is real-rooted with no positive root. Lost degree
    under dehomogenization is a root at infinity, which is allowed.
    """
    h = h.to_exponent()
    if not h:
        raise ZeroPolynomial("the zero polynomial is not stable")
    if not h.is_homogeneous():
        raise NotHomogeneous("form is not homogeneous")
    a, b = _pair_variables(h)
    q = _dehomogenize(h, a, b)
    if not is_real_rooted(q):
        return False
    q = squarefree_part(q)
    return q.degree < 1 or count_real_roots(q, "-inf", 0) == q.degree


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class Witness:
    """A point of the tested region where the polynomial vanishes."""

    point: dict  # variable name -> complex
    abs_value: float
    exact: bool  # True when the value is exactly zero in Q(i)
    method: str

    def to_json(self) -> dict:
        return {
            "point": {k: [v.real, v.imag] for k, v in self.point.items()},
            "abs_value": self.abs_value,
            "exact": self.exact,
            "method": self.method,
        }


@dataclass(frozen=True)
class StabilityVerdict:
    status: str  # "Certified" | "Refuted" | "Inconclusive"
    region: str
    method: str
    witness: Witness | None = None
    samples: int = 0
    min_abs: float | None = None
    notes: tuple = field(default=())

    @property
    def refuted(self) -> bool:
        return self.status == "Refuted"

    @property
    def certified(self) -> bool:
        return self.status == "Certified"

    def to_json(self) -> dict:
        out = {"status": self.status, "region": self.region, "method": self.method}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        if self.status == "Inconclusive":
            out["samples"] = self.samples
            out["min_abs"] = self.min_abs
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _in_region(v: complex | QI, region: str, strict_margin: float = 0.0) -> bool:
    if isinstance(v, QI):
        return v.im > 0 if region == UPPER else v.re >= 0
    if region == UPPER:
        return v.imag > strict_margin * max(abs(v), 1.0)
    return v.real >= 0


def _interval_abs(f, point: Mapping[VarId, complex]) -> float:
    """Upper bound on ``|f(point)|`` from interval evaluation at 50 digits."""
    from mpmath import iv

    old = iv.dps
    iv.dps = 50
    try:
        pt = {v: iv.mpc(z.real, z.imag) for v, z in point.items()}
        val = evaluate(f, pt)
        if not isinstance(val, iv.mpc):
            val = iv.mpc(val)
        re = max(abs(float(val.real.a)), abs(float(val.real.b)))
        im = max(abs(float(val.imag.a)), abs(float(val.imag.b)))
        return math.hypot(re, im)
    finally:
        iv.dps = old


def _scale_at(f, point: Mapping[VarId, complex]) -> float:
    total = 0.0
    for m, c in f.to_exponent().items():
        t = abs(float(c))
        for v, e in m:
            t *= abs(point[v]) ** e
        total += t
    return total


def _exact_abs_is_zero(f, point: Mapping[VarId, QI]) -> bool:
    return not evaluate(f, point)


def _refuted(f, region, point, method, exact=False) -> StabilityVerdict | None:
    """Confirm a candidate zero and wrap it; ``None`` if confirmation fails."""
    if exact:
        if not all(_in_region(v, region) for v in point.values()):
            return None
        if not _exact_abs_is_zero(f, point):
            return None
        cpoint = {v.name: complex(q) for v, q in point.items()}
        return StabilityVerdict(
            "Refuted", region, method, Witness(cpoint, 0.0, True, method + " (exact in Q(i))")
        )
    point = {v: complex(z) for v, z in point.items()}
    if not all(_in_region(v, region) for v in point.values()):
        return None
    bound = _interval_abs(f, point)
    scale = max(_scale_at(f, point), 1.0)
    if bound > ZERO_TOL * scale:
        return None
    cpoint = {v.name: z for v, z in point.items()}
    return StabilityVerdict(
        "Refuted", region, method, Witness(cpoint, bound, False, method + " (interval-confirmed)")
    )


def _region_unit(region: str) -> QI:
    return QI(0, 1) if region == UPPER else QI(1)


def _refine_roots(q: UnivariatePoly) -> list[complex]:
    """High-precision roots of the square-free part (mpmath)."""
    import mpmath

    q = squarefree_part(q)
    if q.degree < 1:
        return []
    with mpmath.workdps(60):
        coeffs = [mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator for c in reversed(q.coeffs)]
        roots = mpmath.polyroots(coeffs, maxsteps=400, extraprec=200)
    return [complex(r) for r in roots]


# ---------------------------------------------------------------------------
# check_stable pipeline


def _collapse_blocks(g: ExponentPoly):
    """Collapse every symmetric multiaffine family (z, z', w, w').

    Returns the collapsed polynomial and a map original variable -> representative.
    """
    families: dict = {}
    for v in g.variables():
        if v.kind in (KIND_Z, KIND_W):
            families.setdefault((v.kind, v.primed), []).append(v)
    rep = {v: v for v in g.variables()}
    for members in families.values():
        if len(members) < 2:
            continue
        try:
            collapsed = gws_collapse(g, members)
        except NotSymmetric:
            continue
        target = sorted(members, key=_display_key)[0]
        for v in members:
            rep[v] = target
        g = collapsed
    return g, rep


def _lift(rep: Mapping[VarId, VarId], values: Mapping[VarId, object], default) -> dict:
    return {v: values.get(r, default) for v, r in rep.items()}


def _univariate_witness(q: UnivariatePoly, region: str) -> complex | None:
    roots = _refine_roots(q)
    if region == UPPER:
        cands = [r for r in roots if r.imag > 0]
        return max(cands, key=lambda r: r.imag) if cands else None
    if not roots:
        return None
    r = max(roots, key=lambda r: r.real)
    if r.real < -1e-12 * max(abs(r), 1.0):
        return None
    return complex(max(r.real, 0.0), r.imag)


def _bivariate_witness(q: UnivariatePoly) -> tuple[complex, complex] | None:
    """(x, y) in the open upper half-plane squared with ``x = r y`` for a bad root ``r``."""
    for r in _refine_roots(q):
        if abs(r.imag) <= 1e-30 * max(abs(r), 1.0) and r.real <= 0:
            continue
            theta = (math.pi - cmath.phase(r)) / 2
            y = cmath.exp(1j * theta)
            return r * y, y
    return None


def _exact_decision(f, g, rep, region) -> StabilityVerdict | None:
    vs = sorted(g.variables(), key=_display_key)
    if len(vs) == 1:
        (v,) = vs
        q = UnivariatePoly.from_poly(g, v)
        ok = is_real_rooted(q) if region == UPPER else is_hurwitz_univariate(q)
        if ok:
            return StabilityVerdict("Certified", region, "exact univariate decision after collapse")
        r = _univariate_witness(q, region)
        if r is not None:
            ver = _refuted(f, region, _lift(rep, {v: r}, r), "univariate root after collapse")
            if ver is not None:
                return ver
        return None
    if len(vs) == 2 and region == UPPER and g.is_homogeneous():
        if homogeneous_bivariate_stable(g):
            return StabilityVerdict("Certified", region, "exact bivariate homogeneous decision after collapse")
        a, b = vs
        w = _bivariate_witness(_dehomogenize(g, a, b))
        if w is not None:
            ver = _refuted(f, region, _lift(rep, {a: w[0], b: w[1]}, w[1]), "bivariate root after collapse")
            if ver is not None:
                return ver
    return None


def _diagonal_tests(f, g, rep, region) -> StabilityVerdict | None:
    vs = sorted(g.variables(), key=_display_key)
    # all variables -> x
    diag = substitute(g, {v: X for v in vs})
    if not diag:
        unit = _region_unit(region)
        t = _refuted(f, region, {v: unit for v in rep}, "vanishing diagonal", exact=True)
        if t is not None:
            return t
    else:
        q = UnivariatePoly.from_poly(diag, X)
        ok = is_real_rooted(q) if region == UPPER else is_hurwitz_univariate(q)
        if not ok:
            r = _univariate_witness(q, region)
            if r is not None:
                ver = _refuted(f, region, {v: r for v in rep}, "diagonal restriction")
                if ver is not None:
                    return ver
    # unprimed -> x, primed -> y
    if region == UPPER and all(v.kind == KIND_Z for v in vs) and any(v.primed for v in vs) and not all(
        v.primed for v in vs
    ):
        h = substitute(g, {v: (Y if v.primed else X) for v in vs})
        if h and h.is_homogeneous() and not homogeneous_bivariate_stable(h):
            w = _bivariate_witness(_dehomogenize(h, X, Y))
            if w is not None:
                vals = {v: (w[1] if v.primed else w[0]) for v in vs}
                ver = _refuted(f, region, _lift(rep, vals, w[1]), "primed/unprimed restriction")
                if ver is not None:
                    return ver
    return None


class _TermTable:
    """Dense exponent matrix and coefficient vector of a polynomial."""

    def __init__(self, g: ExponentPoly):
        self.vars = sorted(g.variables(), key=_display_key)
        idx = {v: k for k, v in enumerate(self.vars)}
        items = list(g.items())
        self.E = np.zeros((len(items), len(self.vars)), dtype=np.int64)
        self.coeffs = [c for _, c in items]
        for t, (m, _) in enumerate(items):
            for v, e in m:
                self.E[t, idx[v]] = e
        self.c = np.array([float(c) for c in self.coeffs])
        self.degree = int(self.E.sum(axis=1).max()) if items else 0


def _branden(f, g: ExponentPoly, rep, budget: int, rng) -> tuple[StabilityVerdict | None, int]:
    """Exact sign of ``d_i g d_j g - g d_ij g`` at random rational points.

    Returns a refutation (with an exact witness) if a negative value is
    found, plus the number of points checked.
    """
    tab = _TermTable(g)
    nv = len(tab.vars)
    pairs = list(combinations(range(nv), 2))
    if not pairs or budget <= 0:
        return None, 0
    M = tab.E.astype(bool)
    D = tab.degree
    R = Q = 60
    coeff_int = all(Fraction(c).denominator == 1 for c in tab.coeffs)
    csum = sum(abs(int(c)) for c in tab.coeffs) if coeff_int else None
    small = coeff_int and (max(R, Q) ** D) * csum < 2**62
    cvec = np.array([int(c) for c in tab.coeffs], dtype=np.int64 if small else object) if coeff_int else None
    deg = M.sum(axis=1)
    checked = 0
    chunk = 2048
    while checked < budget:
        B = min(chunk, budget - checked)
        a = rng.integers(1, R + 1, size=(B, nv)) * rng.choice([-1, 1], size=(B, nv))
        q = rng.integers(1, Q + 1, size=B)
        pi = np.array([pairs[(checked + b) % len(pairs)][0] for b in range(B)])
        pj = np.array([pairs[(checked + b) % len(pairs)][1] for b in range(B)])
        if small:
            prod = np.where(M[None, :, :], a[:, None, :], 1).prod(axis=2)
            qpow = q[:, None] ** (D - deg)[None, :]
            v = cvec[None, :] * prod * qpow
            F = v.sum(axis=1)
            Si = (v * M[:, pi].T).sum(axis=1)
            Sj = (v * M[:, pj].T).sum(axis=1)
            Sij = (v * (M[:, pi] & M[:, pj]).T).sum(axis=1)
            rows = zip(F.tolist(), Si.tolist(), Sj.tolist(), Sij.tolist())
        else:
            rows = []
            for b in range(B):
                x = [Fraction(int(a[b, k]), int(q[b])) for k in range(nv)]
                vals = []
                for t in range(len(tab.coeffs)):
                    term = Fraction(tab.coeffs[t])
                    for k in np.nonzero(M[t])[0]:
                        term *= x[k]
                    vals.append(term)
                i, j = pi[b], pj[b]
                rows.append(
                    (
                        sum(vals),
                        sum(vv for t, vv in enumerate(vals) if M[t, i]),
                        sum(vv for t, vv in enumerate(vals) if M[t, j]),
                        sum(vv for t, vv in enumerate(vals) if M[t, i] and M[t, j]),
                    )
                )
        for b, (Fv, Si_, Sj_, Sij_) in enumerate(rows):
            core = int(Si_) * int(Sj_) - int(Fv) * int(Sij_) if small else Si_ * Sj_ - Fv * Sij_
            sign_ij = int(np.sign(a[b, pi[b]]) * np.sign(a[b, pj[b]]))
            if core * sign_ij < 0:
                x = {tab.vars[k]: Fraction(int(a[b, k]), int(q[b])) for k in range(nv)}
                w = _branden_witness(g, x, tab.vars[pi[b]], tab.vars[pj[b]])
                if w is not None:
                    ver = _refuted(f, UPPER, _lift(rep, w, QI(0, 1)), "negative Branden discriminant", exact=True)
                    if ver is not None:
                        return ver, checked + b + 1
        checked += B
    return None, checked


def _linear_split(g: ExponentPoly, v: VarId, point: Mapping[VarId, QI]) -> tuple[QI, QI]:
    """``g = A + B v`` evaluated at ``point`` (which omits ``v``)."""
    A, Bc = QI(0), QI(0)
    for m, c in g.items():
        term = QI(c)
        hit = False
        for u, e in m:
            if u == v:
                hit = True
            else:
                term = term * (point[u] ** e)
        if hit:
            Bc = Bc + term
        else:
            A = A + term
    return A, Bc


def _branden_witness(g, x: Mapping[VarId, Fraction], vi: VarId, vj: VarId) -> dict | None:
    """Turn a negative discriminant at real ``x`` into an exact zero in the upper half-plane."""
    for k in range(1, 12):
        delta = Fraction(1, 10**k)
        pt = {v: QI(val, delta) for v, val in x.items() if v not in (vi, vj)}
        pt[vi] = QI(x[vi], 1)
        A, Bc = _linear_split(g, vj, pt)
        if not Bc:
            continue
        zj = -(A / Bc)
        if zj.im > 0:
            pt[vj] = zj
            return pt
    return None


def _sample_points(rng, B: int, nv: int, region: str) -> np.ndarray:
    logr = rng.uniform(math.log(1e-2), math.log(1e2), size=(B, nv))
    if region == UPPER:
        arg = rng.uniform(0.0, math.pi, size=(B, nv))
        arg = np.where(arg <= 0.0, 1e-300, arg)
    else:
        arg = rng.uniform(-math.pi / 2, math.pi / 2, size=(B, nv))
        # an eighth of the points put one coordinate on the boundary line
        edge = rng.random(B) < 0.125
        col = rng.integers(0, nv, size=B)
        sgn = rng.choice([-1.0, 1.0], size=B)
        arg[edge, col[edge]] = sgn[edge] * (math.pi / 2)
    z = np.exp(logr) * np.exp(1j * arg)
    if region == RIGHT:
        on_edge = np.isclose(np.abs(arg), math.pi / 2, rtol=0, atol=0)
        z = np.where(on_edge, 1j * z.imag, z)
    return z


def _sampling(f, g: ExponentPoly, rep, region: str, budget: int, rng) -> tuple[StabilityVerdict | None, int, float]:
    tab = _TermTable(g)
    nv = len(tab.vars)
    E = tab.E.astype(float)
    linear = [k for k in range(nv) if int(tab.E[:, k].max()) == 1]
    has_j = {k: tab.E[:, k] == 1 for k in linear}
    best = math.inf
    done = 0
    exact_tries = 0
    chunk = 2048
    while done < budget:
        B = min(chunk, budget - done)
        Z = _sample_points(rng, B, nv, region)
        logZ = np.log(Z)
        mono = np.exp(logZ @ E.T)
        vals = mono @ tab.c
        scale = np.abs(mono) @ np.abs(tab.c)
        rel = np.abs(vals) / np.maximum(scale, 1e-300)
        best = min(best, float(np.abs(vals).min()))
        for b in np.nonzero(rel < ZERO_TOL)[0][:5]:
            point = {tab.vars[k]: complex(Z[b, k]) for k in range(nv)}
            ver = _refuted(f, region, _lift(rep, point, complex(_region_unit(region))), "sampled near-zero")
            if ver is not None:
                return ver, done + int(b) + 1, best
        if linear:
            # solve g = A + B z_j = 0 for one linear coordinate per point
            jcol = np.array([linear[(done + b) % len(linear)] for b in range(B)])
            for k in linear:
                sel = np.nonzero(jcol == k)[0]
                if not len(sel):
                    continue
                mk = mono[sel] / np.where(has_j[k][None, :], Z[sel, k][:, None], 1.0)
                Bv = (mk * np.where(has_j[k], tab.c, 0.0)[None, :]).sum(axis=1)
                Av = (mk * np.where(has_j[k], 0.0, tab.c)[None, :]).sum(axis=1)
                with np.errstate(divide="ignore", invalid="ignore"):
                    zstar = -Av / Bv
                ok = np.isfinite(zstar)
                if region == UPPER:
                    ok &= zstar.imag > 1e-9 * np.maximum(np.abs(zstar), 1.0)
                else:
                    ok &= zstar.real > 1e-9 * np.maximum(np.abs(zstar), 1.0)
                for b in sel[ok][:3]:
                    if exact_tries >= 32:
                        break
                    exact_tries += 1
                    pt = {tab.vars[c]: QI.of(complex(Z[b, c])) for c in range(nv) if c != k}
                    A, Bq = _linear_split(g, tab.vars[k], pt)
                    if not Bq:
                        continue
                    pt[tab.vars[k]] = -(A / Bq)
                    ver = _refuted(f, region, _lift(rep, pt, _region_unit(region)), "sampled linear solve", exact=True)
                    if ver is not None:
                        return ver, done + int(b) + 1, best
        done += B
    return None, done, best


def check_stable(f, region: str = UPPER, budget: int = 10_000, seed: int = 0) -> StabilityVerdict:
    """Semi-decide stability of ``f`` on the open upper half-plane or the
    closed right half-plane (Hurwitz, boundary included)."""
    if region not in REGIONS:
        raise InvalidParameter(f"region must be one of {REGIONS}, got {region!r}")
    g0 = f.to_exponent()
    if not g0:
        return StabilityVerdict("Refuted", region, "zero polynomial", Witness({}, 0.0, True, "zero polynomial"))
    if not g0.variables():
        return StabilityVerdict("Certified", region, "nonzero constant")
    if region == RIGHT and g0.constant_term() == 0:
        origin = {v: QI(0) for v in g0.variables()}
        return _refuted(g0, region, origin, "vanishes at the origin of the closed region", exact=True)

    g, rep = _collapse_blocks(g0)
    ver = _exact_decision(g0, g, rep, region)
    if ver is not None:
        return ver
    ver = _diagonal_tests(g0, g, rep, region)
    if ver is not None:
        return ver
    rng = np.random.default_rng(seed)
    notes = []
    if region == UPPER and g.is_multiaffine():
        ver, n_branden = _branden(g0, g, rep, budget, rng)
        if ver is not None:
            return ver
        notes.append(f"branden: {n_branden} exact discriminants, none negative")
    ver, n, best = _sampling(g0, g, rep, region, budget, rng)
    if ver is not None:
        return ver
    return StabilityVerdict(
        "Inconclusive", region, "sampling", samples=n, min_abs=best, notes=tuple(notes)
    )


def branden_sample(f: MultiAffinePoly, budget: int, seed: int = 0) -> tuple[int, int]:
    """Run only the exact discriminant sampler; returns ``(points checked, negatives found)``."""
    g = f.to_exponent()
    rep = {v: v for v in g.variables()}
    ver, n = _branden(g, g, rep, budget, np.random.default_rng(seed))
    return n, int(ver is not None)


# ---------------------------------------------------------------------------
# symbol of the DAB operator


def phi_symbol_closed_form_check(n: int, m: int) -> bool:
    """Symbol of ``Phi`` against the product form with the ``(z+w)`` denominators cleared.

    Closed form: sum over ``S`` in ``G``, ``T`` in ``F``, ``|S| = |T| + 1`` of
    ``prod_{G-S}(z+w) prod_T z w prod_{F-T}(z+w)``.
    """
    F = sorted(doubled(range(1, n + 1)), key=_display_key)
    G = sorted(doubled(range(n + 1, n + m + 1)), key=_display_key)
    symbol = operator_symbol(lambda p: phi(p, F, G), F + G)

    def lin(v):
        return MultiAffinePoly({frozenset([v]): 1, frozenset([shadow(v)]): 1})

    def zw(v):
        return MultiAffinePoly.monomial([v, shadow(v)])

    closed = MultiAffinePoly.constant(0)
    for t in range(len(F) + 1):
        for T in combinations(F, t):
            eta_part = MultiAffinePoly.constant(1)
            for v in F:
                eta_part = eta_part * (zw(v) if v in T else lin(v))
            for S in combinations(G, t + 1):
                part = eta_part
                for v in G:
                    if v not in S:
                        part = part * lin(v)
                closed = closed + part
    return symbol == closed
