"""Acceptance criteria 1-14, one test per criterion (or per part of one).

A summary with one PASS/FAIL line per criterion is printed at the end of the
pytest run (see ``conftest.py``).
"""
import itertools
import time

from peuler.dyck import bullet, catalan
from peuler.eulerian import multivariate_eulerian, univariate_eulerian
from peuler.fqsym import shuffle
from peuler.permstat import descent_count
from peuler.polyring import parse_poly
from peuler.poset import antichain, linear_extensions, poset_from_covers
from peuler.stability import branden_sample, check_stable, is_real_rooted
from peuler.verify import forest_pool, run_suite

N_SHAPE = poset_from_covers(4, [(1, 2), (3, 2), (3, 4)])


def test_c01_small_poset_example(criterion):
    t0 = time.perf_counter()
    exts = linear_extensions(N_SHAPE)
    poly = multivariate_eulerian(N_SHAPE)
    elapsed = time.perf_counter() - t0
    expected = parse_poly(
        "z1*z3*z1p*z2p*z4p + z1*z3*z1p*z2p*z3p + z1*z2*z1p*z2p*z4p + z1*z2*z1p*z2p*z3p + z1*z2*z3*z1p*z2p"
    )
    ok = {"".join(map(str, p)) for p in exts} == {"1324", "1342", "3124", "3142", "3412"} and poly == expected and elapsed < 0.1
    criterion(1, "extensions and A_P", ok, f"{len(exts)} extensions, {len(poly)} monomials, {elapsed * 1000:.1f} ms")
    assert ok


def test_c02_shuffle_example(criterion):
    t0 = time.perf_counter()
    s = shuffle((1, 3, 2), (2, 1))
    elapsed = time.perf_counter() - t0
    words = {"".join(map(str, p)): c for p, c in s.terms.items()}
    expected = {"13254", "13524", "13542", "15324", "15342", "15432", "51324", "51342", "51432", "54132"}
    ok = set(words) == expected and set(words.values()) == {1} and elapsed < 0.1
    criterion(2, "132 shuffle 21", ok, f"{len(words)} terms, {elapsed * 1000:.1f} ms")
    assert ok


def test_c03_shuffle_weight_oracle(criterion):
    rep = run_suite("shudif", 7, threads=1)
    ok = rep.ok and rep.seconds < 300
    criterion(3, "w1 of shuffles, n+m <= 7", ok, f"{rep.cases} pairs, {len(rep.failures)} failures, {rep.seconds:.1f} s")
    assert ok


def test_c04_dyck_product_example(criterion):
    got = bullet("uudu", "uuud")
    expected = {"uududuud": 1, "uuduudud": 1, "uuduuudd": 1, "uuuuddud": 1, "uuuududd": 1, "uuuuuddd": 1}
    ok = {str(w): c for w, c in got.items()} == expected
    criterion(4, "uudu . uuud", ok, f"{sum(got.values())} words")
    assert ok


def test_c05_theta_isomorphism(criterion):
    rep = run_suite("dyck-iso", 5, power_max=6)
    ok = rep.ok
    criterion(5, "Theta multiplicative, (uu)^n spans", ok, f"{rep.cases} cases, {len(rep.failures)} failures, C_6 = {catalan(6)}")
    assert ok


def test_c06_catalan_dimension(criterion):
    rep = run_suite("catalan-dim", 10)
    dims = [rep.details[str(n)] for n in range(1, 11)]
    ok = rep.ok and dims == [catalan(n) for n in range(1, 11)] and rep.seconds < 120
    criterion(6, "distinct w1 = C_n, n <= 10", ok, f"n = 10: {dims[-1]} monomials, {rep.seconds:.1f} s")
    assert ok


def test_c07_malo_real_rooted(criterion):
    rep = run_suite("malo", 8)
    ok = rep.ok and rep.cases == 8 * 7
    criterion(7, "m-binomial products", ok, f"{rep.cases} pairs, {len(rep.failures)} failures")
    assert ok


def test_c08_peak_count_and_diagonal(criterion):
    rep = run_suite("peak-psi", 7, random_count=50, random_max=6, exhaustive_max=4)
    criterion(8, "|N| = 2|peaks| + 1 and diagonal identity", rep.ok, f"{rep.cases} cases, {len(rep.failures)} failures")
    assert rep.ok


def test_c08_psi_identity_as_stated(criterion):
    rep = run_suite("peak-psi", 7, random_count=50, random_max=6, exhaustive_max=4)
    holds, total = rep.details["psi_printed_holds"], rep.details["posets"]
    ok = holds == total
    criterion(8, "Psi identity", ok, f"holds on {holds} of {total} posets; Psi(H) equals the complement polynomial instead")
    assert ok


def test_c09_dual_identity(criterion):
    rep = run_suite("dual", 4, random_count=100, random_max=7)
    criterion(9, "prime swap = dual poset", rep.ok, f"{rep.cases} posets, {len(rep.failures)} failures")
    assert rep.ok


def test_c10_labeled_union_relabeling(criterion):
    rep = run_suite("union-relabel", 3)
    criterion(10, "relabeled A_{P|_S Q} = A_{P|Q}", rep.ok, f"{rep.cases} cases, {len(rep.failures)} failures")
    assert rep.ok


def test_c11_ordinal_sum(criterion):
    rep = run_suite("oplus", 4)
    raw_fails = rep.details["raw_identity_fails_on_antichain_pair"]
    ok = rep.ok and raw_fails
    criterion(11, "realigned ordinal-sum identity", ok, f"{rep.cases} pairs, {len(rep.failures)} failures, raw form fails on 1 (+) 1: {raw_fails}")
    assert ok


def test_c12_real_rootedness(criterion):
    rep = run_suite("forests", 7, union_max=8)
    ok = rep.ok
    criterion(12, "real-rootedness", ok, f"{rep.details['forests']} forests, {rep.details['union_pairs']} union pairs, {len(rep.failures)} failures")
    assert ok


def test_c12_stability_substitute(criterion):
    pool = forest_pool(6)
    refuted = negative = 0
    first = None
    for k, F in enumerate(pool):
        f = multivariate_eulerian(F)
        if check_stable(f, "upper", 10_000, k).refuted:
            refuted += 1
            first = first or F
        negative += branden_sample(f, 10_000, k)[1]
    ok = refuted == 0 and negative == 0
    detail = f"{refuted} of {len(pool)} forests refuted, {negative} with a negative discriminant"
    if first is not None:
        detail += f", first {first.covers()}"
    criterion(12, "stability of A_F(z)", ok, detail)
    assert ok


def test_c13_symbol_check(criterion):
    rep = run_suite("symbol", 3)
    ok = rep.ok and rep.cases == 9 and rep.seconds < 30
    criterion(13, "symbol closed form, n, m <= 3", ok, f"{rep.cases} cases, {rep.seconds:.1f} s")
    assert ok


def test_c14_eulerian_baseline(criterion):
    bad = []
    for n in range(1, 10):
        counts = [0] * n
        for p in itertools.permutations(range(1, n + 1)):
            counts[descent_count(p)] += 1
        a = univariate_eulerian(antichain(n))
        if not is_real_rooted(a) or list(a.coeffs[1:]) != counts:
            bad.append(n)
    ok = not bad
    criterion(14, "A_n(x), n <= 9", ok, f"failing n: {bad}" if bad else "9 sizes")
    assert ok
