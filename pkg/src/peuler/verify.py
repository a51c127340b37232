"""Oracle suites: each checks one identity over an exhaustive or seeded
random family and reports every failing case with both sides."""
from __future__ import annotations

import itertools
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Sequence

from . import kernels
from .dyck import bullet, bullet_power, catalan, enumerate_dyck, is_valid_code, theta, theta_inverse, theta_linear
from .eulerian import (
    WeightKind,
    db_eulerian,
    diagonal_peak_identity_check,
    multivariate_eulerian,
    oplus_identity_check,
    oplus_rhs,
    psi_peak_complement_check,
    psi_peak_identity_check,
    univariate_eulerian,
    univariate_peak,
    weight,
)
from .fqsym import FQSymElement, dab_product, product, shuffle, weight_of_element
from .permstat import format_permutation, peak_set, peak_valley_set
from .polyring import MultiAffinePoly, rename_indices, swap_primes
from .poset import (
    LabeledPoset,
    all_decreasing_forests,
    all_posets,
    antichain,
    disjoint_union,
    disjoint_union_s,
    dual,
    ordinal_sum,
    random_poset,
    union_relabel_permutation,
)
from .stability import check_stable, is_real_rooted, is_real_rooted_negative, malo_binom_poly, phi_symbol_closed_form_check

SUITES = (
    "shudif",
    "fori",
    "dyck-iso",
    "catalan-dim",
    "dual",
    "union-relabel",
    "oplus",
    "peak-psi",
    "malo",
    "symbol",
    "forests",
)

DEFAULT_MAX = {
    "shudif": 7,
    "fori": 6,
    "dyck-iso": 5,
    "catalan-dim": 10,
    "dual": 4,
    "union-relabel": 3,
    "oplus": 4,
    "peak-psi": 7,
    "malo": 8,
    "symbol": 3,
    "forests": 7,
}


@dataclass
class VerificationReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "details": self.details,
        }

    def summary(self) -> str:
        return f"{self.suite}: {self.cases} cases, {len(self.failures)} failures, {self.seconds:.2f}s"


def default_threads() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


def parallel_map(fn: Callable, items: Sequence, threads: int = 1) -> list:
    """Order-preserving map; a process pool when ``threads > 1``."""
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (threads * 8))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _collect(report: VerificationReport, results: Iterable) -> None:
    for r in results:
        report.cases += 1
        if r is not None:
            report.failures.append(r)


def _poset_text(P: LabeledPoset) -> dict:
    return P.to_json()


# ---------------------------------------------------------------------------
# shudif: w1 of a shuffle from the DAB product of the weights


def _shudif_case(pair):
    p, q = pair
    lhs = weight_of_element(WeightKind.W1, shuffle(p, q))
    rhs = dab_product(weight(WeightKind.W1, p), weight(WeightKind.W1, q))
    if lhs == rhs:
        return None
    return {"pi": format_permutation(p), "sigma": format_permutation(q), "lhs": str(lhs), "rhs": str(rhs)}


def suite_shudif(max_size: int = 7, seed: int = 0, threads: int = 1) -> VerificationReport:
    cases = [
        (p, q)
        for total in range(2, max_size + 1)
        for n in range(1, total)
        for p in itertools.permutations(range(1, n + 1))
        for q in itertools.permutations(range(1, total - n + 1))
    ]
    rep = VerificationReport("shudif")
    _collect(rep, parallel_map(_shudif_case, cases, threads))
    return rep


# ---------------------------------------------------------------------------
# fori: w_i(f g) depends only on w_i(f), w_i(g)


def _random_element(rng: random.Random, n: int) -> FQSymElement:
    perms = list(itertools.permutations(range(1, n + 1)))
    k = rng.randint(1, min(4, len(perms)))
    return FQSymElement({p: rng.randint(1, 3) for p in rng.sample(perms, k)})


def _same_weight_twin(rng: random.Random, f: FQSymElement, kind: WeightKind) -> FQSymElement:
    """Replace each permutation by a random one of the same size and weight."""
    n = f.n
    classes: dict = {}
    for p in itertools.permutations(range(1, n + 1)):
        classes.setdefault(weight(kind, p), []).append(p)
    out: dict = {}
    for p, c in f.items():
        q = rng.choice(classes[weight(kind, p)])
        out[q] = out.get(q, 0) + c
    return FQSymElement(out)


def _fori_case(args):
    kind_value, seed, n, m = args
    kind = WeightKind(kind_value)
    rng = random.Random(seed)
    f, g = _random_element(rng, n), _random_element(rng, m)
    f2, g2 = _same_weight_twin(rng, f, kind), _same_weight_twin(rng, g, kind)
    lhs = weight_of_element(kind, product(f, g))
    rhs = weight_of_element(kind, product(f2, g2))
    if kind is WeightKind.W1 and lhs == rhs:
        rhs = dab_product(weight_of_element(kind, f), weight_of_element(kind, g))
    if lhs == rhs:
        return None
    return {"kind": kind.name, "f": str(f), "g": str(g), "f2": str(f2), "g2": str(g2), "lhs": str(lhs), "rhs": str(rhs)}


def suite_fori(max_size: int = 6, seed: int = 0, threads: int = 1, per_kind: int = 60) -> VerificationReport:
    rng = random.Random(seed)
    cases = []
    for kind in WeightKind:
        for _ in range(per_kind):
            total = rng.randint(2, max_size)
            n = rng.randint(1, total - 1)
            cases.append((kind.value, rng.getrandbits(32), n, total - n))
    rep = VerificationReport("fori")
    _collect(rep, parallel_map(_fori_case, cases, threads))
    return rep


# ---------------------------------------------------------------------------
# dyck-iso: Theta is a homomorphism onto the Dyck algebra


def _dyck_iso_case(pair):
    v, w = pair
    a = MultiAffinePoly.monomial(theta_inverse(v))
    b = MultiAffinePoly.monomial(theta_inverse(w))
    lhs = theta_linear(dab_product(a, b))
    rhs = bullet(v, w)
    bad = [str(u) for u in rhs if not is_valid_code(u)]
    if lhs == rhs and not bad:
        return None
    return {"v": str(v), "w": str(w), "lhs": {str(k): c for k, c in lhs.items()}, "rhs": {str(k): c for k, c in rhs.items()}, "invalid": bad}


def suite_dyck_iso(max_size: int = 5, seed: int = 0, threads: int = 1, power_max: int = 6) -> VerificationReport:
    codes = {n: enumerate_dyck(n) for n in range(1, max(max_size, 1) + 1)}
    cases = [
        (v, w)
        for total in range(2, max_size + 1)
        for n in range(1, total)
        for v in codes[n]
        for w in codes[total - n]
    ]
    rep = VerificationReport("dyck-iso")
    _collect(rep, parallel_map(_dyck_iso_case, cases, threads))
    # (uu)^n spans every code of semilength n
    for n in range(1, power_max + 1):
        rep.cases += 1
        support = bullet_power("uu", n)
        expected = set(enumerate_dyck(n))
        if set(support) != expected or len(support) != catalan(n) or min(support.values()) <= 0:
            rep.failures.append({"power": n, "support": len(support), "catalan": catalan(n)})
    # total multiplicity of a product of single-permutation codes is C(n+m, n)
    r = random.Random(seed)
    for _ in range(50):
        n, m = r.randint(1, 4), r.randint(1, 4)
        p = tuple(r.sample(range(1, n + 1), n))
        q = tuple(r.sample(range(1, m + 1), m))
        total = sum(bullet(theta(weight(WeightKind.W1, p)), theta(weight(WeightKind.W1, q))).values())
        rep.cases += 1
        if total != comb(n + m, n):
            rep.failures.append({"pi": format_permutation(p), "sigma": format_permutation(q), "total": total})
    return rep


# ---------------------------------------------------------------------------
# catalan-dim


def suite_catalan_dim(max_size: int = 10, seed: int = 0, threads: int = 1) -> VerificationReport:
    rep = VerificationReport("catalan-dim")
    for n in range(1, max_size + 1):
        census = kernels.extension_census(n, [0] * n, kernels.STAT_W1)
        rep.cases += 1
        rep.details[str(n)] = len(census)
        if len(census) != catalan(n):
            rep.failures.append({"n": n, "distinct": len(census), "catalan": catalan(n)})
    return rep


# ---------------------------------------------------------------------------
# dual


def _dual_case(P: LabeledPoset):
    lhs = swap_primes(multivariate_eulerian(P))
    rhs = multivariate_eulerian(dual(P))
    if lhs == rhs:
        return None
    return {"poset": _poset_text(P), "lhs": str(lhs), "rhs": str(rhs)}


def suite_dual(max_size: int = 4, seed: int = 0, threads: int = 1, random_count: int = 100, random_max: int = 7) -> VerificationReport:
    rng = random.Random(seed)
    posets = [P for n in range(1, max_size + 1) for P in all_posets(n)]
    posets += [random_poset(rng.randint(1, random_max), rng) for _ in range(random_count)]
    rep = VerificationReport("dual")
    _collect(rep, parallel_map(_dual_case, posets, threads))
    return rep


# ---------------------------------------------------------------------------
# union-relabel


def _union_relabel_case(args):
    P, Q, S = args
    N = P.n + Q.n
    sigma = union_relabel_permutation(P, Q, S)
    lhs = rename_indices(multivariate_eulerian(disjoint_union_s(P, Q, S)), {i + 1: sigma[i] for i in range(N)})
    rhs = multivariate_eulerian(disjoint_union(P, Q))
    if lhs == rhs:
        return None
    return {"P": _poset_text(P), "Q": _poset_text(Q), "S": list(S), "sigma": list(sigma), "lhs": str(lhs), "rhs": str(rhs)}


def suite_union_relabel(max_size: int = 3, seed: int = 0, threads: int = 1, pairs: int = 30) -> VerificationReport:
    rng = random.Random(seed)
    cases = []
    for _ in range(pairs):
        P = random_poset(rng.randint(1, max_size), rng)
        Q = random_poset(rng.randint(1, max_size), rng)
        for S in itertools.combinations(range(1, P.n + Q.n + 1), P.n):
            cases.append((P, Q, S))
    rep = VerificationReport("union-relabel")
    _collect(rep, parallel_map(_union_relabel_case, cases, threads))
    return rep


# ---------------------------------------------------------------------------
# oplus


def _oplus_case(pair):
    P, Q = pair
    lhs = multivariate_eulerian(ordinal_sum(P, Q))
    try:
        rhs = oplus_rhs(P, Q, realign=True)
    except ValueError as exc:
        return {"P": _poset_text(P), "Q": _poset_text(Q), "error": str(exc)}
    if lhs == rhs:
        return None
    return {"P": _poset_text(P), "Q": _poset_text(Q), "lhs": str(lhs), "rhs": str(rhs)}


def suite_oplus(max_size: int = 4, seed: int = 0, threads: int = 1, pairs: int = 100) -> VerificationReport:
    rng = random.Random(seed)
    cases = [(random_poset(rng.randint(1, max_size), rng), random_poset(rng.randint(1, max_size), rng)) for _ in range(pairs)]
    rep = VerificationReport("oplus")
    _collect(rep, parallel_map(_oplus_case, cases, threads))
    raw_fails = not oplus_identity_check(antichain(1), antichain(1), realign=False)
    rep.details["raw_identity_fails_on_antichain_pair"] = raw_fails
    return rep


# ---------------------------------------------------------------------------
# peak-psi


def _peak_case(P: LabeledPoset):
    """Diagonal identity and the complement form of the Psi identity must hold;
    the printed form is recorded, not required."""
    diag_ok = diagonal_peak_identity_check(P)
    comp_ok = psi_peak_complement_check(P)
    printed = psi_peak_identity_check(P)
    if diag_ok and comp_ok:
        return None if not printed else "printed"
    return {"poset": _poset_text(P), "diagonal": diag_ok, "psi_complement": comp_ok, "psi_printed": printed}


def suite_peak_psi(max_size: int = 7, seed: int = 0, threads: int = 1, random_count: int = 50, random_max: int = 6, exhaustive_max: int = 4) -> VerificationReport:
    rep = VerificationReport("peak-psi")
    for n in range(1, max_size + 1):
        for p in itertools.permutations(range(1, n + 1)):
            rep.cases += 1
            if len(peak_valley_set(p)) != 2 * len(peak_set(p)) + 1:
                rep.failures.append({"pi": format_permutation(p), "N": list(peak_valley_set(p)), "peaks": list(peak_set(p))})
    rng = random.Random(seed)
    posets = [random_poset(rng.randint(1, random_max), rng) for _ in range(random_count)]
    posets += [P for n in range(1, exhaustive_max + 1) for P in all_posets(n)]
    results = parallel_map(_peak_case, posets, threads)
    rep.details["psi_printed_holds"] = sum(r == "printed" for r in results)
    rep.details["posets"] = len(posets)
    _collect(rep, (None if r == "printed" else r for r in results))
    return rep


# ---------------------------------------------------------------------------
# malo


def suite_malo(max_size: int = 8, seed: int = 0, threads: int = 1) -> VerificationReport:
    rep = VerificationReport("malo")
    for n in range(1, max_size + 1):
        for m in range(2, max_size + 1):
            rep.cases += 1
            p = malo_binom_poly(n, m)
            if not is_real_rooted_negative(p):
                rep.failures.append({"n": n, "m": m, "poly": str(p)})
    return rep


# ---------------------------------------------------------------------------
# symbol


def _symbol_case(nm):
    n, m = nm
    return None if phi_symbol_closed_form_check(n, m) else {"n": n, "m": m}


def suite_symbol(max_size: int = 3, seed: int = 0, threads: int = 1) -> VerificationReport:
    cases = [(n, m) for n in range(1, max_size + 1) for m in range(1, max_size + 1)]
    rep = VerificationReport("symbol")
    _collect(rep, parallel_map(_symbol_case, cases, threads))
    return rep


# ---------------------------------------------------------------------------
# forests


def _forest_case(F: LabeledPoset):
    a = univariate_eulerian(F)
    pk = univariate_peak(F)
    ra, rp = is_real_rooted(a), is_real_rooted(pk)
    if ra and rp:
        return None
    return {"forest": _poset_text(F), "eulerian": str(a), "eulerian_real": ra, "peak": str(pk), "peak_real": rp}


def _union_case(pair):
    P, Q = pair
    a = univariate_eulerian(disjoint_union(P, Q))
    if is_real_rooted(a):
        return None
    return {"P": _poset_text(P), "Q": _poset_text(Q), "eulerian": str(a)}


def _stable_case(args):
    F, budget, seed = args
    out = {}
    ver = check_stable(multivariate_eulerian(F), "upper", budget, seed)
    if ver.refuted:
        out["eulerian"] = ver.to_json()
    ver_db = check_stable(db_eulerian(F), "upper", budget, seed)
    if ver_db.refuted:
        out["db"] = ver_db.to_json()
    if not out:
        return None
    out["forest"] = _poset_text(F)
    return out


def forest_pool(max_size: int) -> list[LabeledPoset]:
    return [F for n in range(1, max_size + 1) for F in all_decreasing_forests(n)]


def suite_forests(
    max_size: int = 7,
    seed: int = 0,
    threads: int = 1,
    union_max: int = 8,
    stable_max: int = 0,
    budget: int = 10_000,
) -> VerificationReport:
    """Real-rootedness over the forest pool; with ``stable_max > 0`` also run
    ``check_stable`` on A_F(z) and A^DB_F(z) for forests up to that size."""
    pool = forest_pool(max_size)
    rep = VerificationReport("forests")
    _collect(rep, parallel_map(_forest_case, pool, threads))
    pairs = [
        (pool[i], pool[j])
        for i in range(len(pool))
        for j in range(i, len(pool))
        if pool[i].n + pool[j].n <= union_max
    ]
    rep.details["forests"] = len(pool)
    rep.details["union_pairs"] = len(pairs)
    _collect(rep, parallel_map(_union_case, pairs, threads))
    if stable_max > 0:
        small = [F for F in pool if F.n <= stable_max]
        cases = [(F, budget, seed + k) for k, F in enumerate(small)]
        rep.details["stability_checked"] = len(cases)
        _collect(rep, parallel_map(_stable_case, cases, threads))
    return rep


_RUNNERS = {
    "shudif": suite_shudif,
    "fori": suite_fori,
    "dyck-iso": suite_dyck_iso,
    "catalan-dim": suite_catalan_dim,
    "dual": suite_dual,
    "union-relabel": suite_union_relabel,
    "oplus": suite_oplus,
    "peak-psi": suite_peak_psi,
    "malo": suite_malo,
    "symbol": suite_symbol,
    "forests": suite_forests,
}


def run_suite(name: str, max_size: int | None = None, seed: int = 0, threads: int = 1, **extra) -> VerificationReport:
    if name not in _RUNNERS:
        raise KeyError(name)
    start = time.perf_counter()
    rep = _RUNNERS[name](DEFAULT_MAX[name] if max_size is None else max_size, seed=seed, threads=threads, **extra)
    rep.seconds = time.perf_counter() - start
    return rep
