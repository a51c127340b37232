"""Statements that fail on small inputs, pinned with their smallest witnesses.

Each test asserts the failure itself, so a change that silently "fixes" one
of these shows up here first.
"""
import itertools
from collections import Counter

from peuler.eulerian import (
    identify_primes,
    multivariate_eulerian,
    multivariate_peak,
    psi_peak_complement_check,
    psi_peak_identity_check,
)
from peuler.polyring import parse_poly, psi, rename_indices
from peuler.poset import all_posets, antichain, chain, disjoint_union, disjoint_union_s, union_relabel_permutation


def occurrence_profile(f):
    """Sorted multiset of how many monomials contain each variable."""
    counts = Counter(v for m in f.monomials() for v in m)
    return sorted(counts.values(), reverse=True)


def test_labeled_union_not_a_variable_relabeling():
    P, Q, S = antichain(1), chain(2), (3,)
    lhs = multivariate_eulerian(disjoint_union_s(P, Q, S))
    rhs = multivariate_eulerian(disjoint_union(P, Q))
    assert lhs == parse_poly("z1*z1p*z2p*z3p + z1*z3*z1p*z2p + z1*z2*z1p*z2p")
    assert rhs == parse_poly("z1*z1p*z2p*z3p + z1*z2*z1p*z3p + z1*z2*z1p*z2p")
    # any renaming of variables preserves this profile, and the profiles differ
    assert occurrence_profile(lhs) == [3, 3, 3, 1, 1, 1]
    assert occurrence_profile(rhs) == [3, 3, 2, 2, 2]
    sigma = union_relabel_permutation(P, Q, S)
    assert rename_indices(lhs, {i + 1: sigma[i] for i in range(3)}) != rhs


def test_labeled_union_fails_for_every_index_permutation():
    P, Q, S = antichain(1), chain(2), (3,)
    lhs = multivariate_eulerian(disjoint_union_s(P, Q, S))
    rhs = multivariate_eulerian(disjoint_union(P, Q))
    for perm in itertools.permutations(range(1, 4)):
        assert rename_indices(lhs, dict(zip(range(1, 4), perm))) != rhs


def test_psi_of_identified_eulerian_is_the_complement():
    P = antichain(1)
    h = identify_primes(multivariate_eulerian(P))
    assert psi(h) == parse_poly("1")
    assert multivariate_peak(P) == parse_poly("z1")
    assert not psi_peak_identity_check(P)
    assert psi_peak_complement_check(P)


def test_psi_printed_form_fails_on_all_small_posets():
    posets = [P for n in range(1, 4) for P in all_posets(n)]
    assert not any(psi_peak_identity_check(P) for P in posets)
    assert all(psi_peak_complement_check(P) for P in posets)
