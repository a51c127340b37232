"""Poset polynomials: multivariate and univariate P-Eulerian, descent-bottom,
peak polynomials, and the weights w1..w4.

Every builder streams over the extension enumerator through a statistic
census, so L(P) itself is never materialized.
"""
from __future__ import annotations

import enum
from typing import Sequence

from . import kernels
from .permstat import ascent_bottoms, descent_bottoms, descent_count
from .polyring import (
    KIND_Z,
    X,
    Y,
    ExponentPoly,
    MultiAffinePoly,
    VarId,
    gamma_shift,
    psi,
    substitute,
    z,
)
from .poset import LabeledPoset, add_bottom, ordinal_sum
from .univariate import UnivariatePoly


class WeightKind(enum.Enum):
    W1 = 1
    W2 = 2
    W3 = 3
    W4 = 4


def _census(P: LabeledPoset, stat: int) -> dict[int, int]:
    return kernels.extension_census(P.n, P.pred_masks(), stat)


def w1_mask_monomial(mask: int) -> frozenset[VarId]:
    """Decode a W1 census key: bit ``2(e-1)`` is ``z_e``, bit ``2e-1`` is ``z_e'``."""
    out = []
    bit = 0
    while mask:
        if mask & 1:
            out.append(VarId(KIND_Z, bit // 2 + 1, bool(bit & 1)))
        mask >>= 1
        bit += 1
    return frozenset(out)


def _set_mask_monomial(mask: int) -> frozenset[VarId]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(z(e))
        mask >>= 1
        e += 1
    return frozenset(out)


# ---------------------------------------------------------------------------
# weights


def weight(kind: WeightKind, p: Sequence[int]):
    """The monomial ``w_j(p)``; W1 is multiaffine, W2-W4 carry powers of x, y."""
    n = len(p)
    des = descent_count(p)
    if kind is WeightKind.W1:
        mono = [z(e) for e in descent_bottoms(p)] + [z(e, True) for e in ascent_bottoms(p)]
        return MultiAffinePoly.monomial(mono)
    if kind is WeightKind.W2:
        mono = [(Y, n - des)] + [(z(e), 1) for e in descent_bottoms(p)]
    elif kind is WeightKind.W3:
        mono = [(Y, des + 1)] + [(z(e), 1) for e in ascent_bottoms(p)]
    else:
        mono = [(X, des + 1), (Y, n - des)]
    return ExponentPoly({tuple(mono): 1})


# ---------------------------------------------------------------------------
# Eulerian polynomials


def multivariate_eulerian(P: LabeledPoset) -> MultiAffinePoly:
    """``A_P(z)``: sum of ``w1(pi)`` over the linear extensions."""
    census = _census(P, kernels.STAT_W1)
    return MultiAffinePoly._raw({w1_mask_monomial(k): c for k, c in census.items()})


def univariate_eulerian(P: LabeledPoset) -> UnivariatePoly:
    """``A_P(x) = sum x^(des + 1)``."""
    census = _census(P, kernels.STAT_DES)
    coeffs = [0] * (P.n + 1)
    for des, c in census.items():
        coeffs[des + 1] += c
    return UnivariatePoly(coeffs)


def db_eulerian(P: LabeledPoset) -> MultiAffinePoly:
    census = _census(P, kernels.STAT_DB)
    return MultiAffinePoly._raw({_set_mask_monomial(k): c for k, c in census.items()})


def multivariate_peak(P: LabeledPoset) -> MultiAffinePoly:
    """Sum over extensions of the product of ``z_e`` over the peak-valley set."""
    census = _census(P, kernels.STAT_N)
    return MultiAffinePoly._raw({_set_mask_monomial(k): c for k, c in census.items()})


def univariate_peak(P: LabeledPoset) -> UnivariatePoly:
    census = _census(P, kernels.STAT_PEAKS)
    coeffs = [0] * (P.n + 1)
    for peaks, c in census.items():
        coeffs[peaks] += c
    return UnivariatePoly(coeffs)


def eulerian_number_census(n: int) -> list[int]:
    """Descent census of S_n by direct enumeration: entry ``k`` counts ``des = k``."""
    census = kernels.extension_census(n, [0] * n, kernels.STAT_DES)
    return [census.get(k, 0) for k in range(max(n, 1))]


# ---------------------------------------------------------------------------
# identities between them


def specialize_eulerian(f) -> UnivariatePoly:
    """Unprimed variables to ``x``, primed to ``1``."""
    mapping = {v: (1 if v.primed else X) for v in f.variables() if v.kind == KIND_Z}
    return UnivariatePoly.from_poly(substitute(f, mapping), X)


def identify_primes(f) -> ExponentPoly:
    """``H(z)``: every ``z_e'`` replaced by ``z_e``."""
    mapping = {v: z(v.index) for v in f.variables() if v.kind == KIND_Z and v.primed}
    return substitute(f, mapping)


def psi_peak_identity_check(P: LabeledPoset) -> bool:
    h = identify_primes(multivariate_eulerian(P))
    return psi(h) == multivariate_peak(P)


def peak_complement(P: LabeledPoset) -> MultiAffinePoly:
    """Sum over extensions of the product of ``z_e`` over ``[n]`` minus the peak-valley set."""
    full = frozenset(z(e) for e in range(1, P.n + 1))
    return MultiAffinePoly._raw({full - m: c for m, c in multivariate_peak(P).items()})


def psi_peak_complement_check(P: LabeledPoset) -> bool:
    """``Psi(H(z))`` against :func:`peak_complement`.

    An element gets exponent 2 in ``H`` when it is a valley, 0 when it is a
    peak and 1 otherwise, so ``Psi`` keeps exactly the non-peak-valley letters.
    """
    return psi(identify_primes(multivariate_eulerian(P))) == peak_complement(P)


def diagonal_peak_identity_check(P: LabeledPoset) -> bool:
    """``peak(x, x, ...) == x * peak_uni(x^2)``."""
    multi = multivariate_peak(P)
    lhs = UnivariatePoly.from_poly(substitute(multi, {v: X for v in multi.variables()}), X)
    uni = univariate_peak(P)
    rhs = UnivariatePoly([0, 1]) * uni.compose_power(2)
    return lhs == rhs


def oplus_rhs(P: LabeledPoset, Q: LabeledPoset, realign: bool = True) -> MultiAffinePoly:
    """Right side of the ordinal-sum factorization.

    ``A_P(z) * shift_n(A_{Q_0}(z))`` with ``z_{n+1} z_{(n+1)'}`` divided out of
    every term (each term must contain it, else ValueError). With ``realign``,
    indices above ``n+1`` are then lowered by one so the Q-letters sit at
    ``n+1..n+m``, which is where they live in ``A_{P (+) Q}``.
    """
    n = P.n
    prod = multivariate_eulerian(P) * gamma_shift(n, multivariate_eulerian(add_bottom(Q)))
    prod = prod.to_multiaffine() if isinstance(prod, ExponentPoly) else prod
    pivot = frozenset([z(n + 1), z(n + 1, True)])
    out = {}
    for m, c in prod.items():
        if not pivot <= m:
            raise ValueError("term not divisible by z_{n+1} z_{(n+1)'}")
        rest = m - pivot
        if realign:
            rest = frozenset(
                VarId(v.kind, v.index - 1, v.primed) if v.kind == KIND_Z and v.index > n + 1 else v
                for v in rest
            )
        out[rest] = out.get(rest, 0) + c
    return MultiAffinePoly(out)


def oplus_identity_check(P: LabeledPoset, Q: LabeledPoset, realign: bool = True) -> bool:
    return multivariate_eulerian(ordinal_sum(P, Q)) == oplus_rhs(P, Q, realign)
