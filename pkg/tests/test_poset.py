import itertools
import random

import pytest
from hypothesis import given, strategies as st

from conftest import posets
from peuler.errors import CyclicRelation, InvalidLabel, InvalidSpec
from peuler.poset import (
    add_bottom,
    all_decreasing_forests,
    all_posets,
    antichain,
    chain,
    chain_of,
    count_linear_extensions,
    disjoint_union,
    disjoint_union_s,
    dual,
    is_decreasing_forest,
    linear_extensions,
    ordinal_sum,
    poset_from_covers,
    poset_from_json,
    random_decreasing_forest,
    union_relabel_permutation,
)

N_SHAPE = poset_from_covers(4, [(1, 2), (3, 2), (3, 4)])


def brute_extensions(P):
    return [p for p in itertools.permutations(range(1, P.n + 1)) if P.is_linear_extension(p)]


def test_small_example_extensions():
    assert linear_extensions(N_SHAPE) == [(1, 3, 2, 4), (1, 3, 4, 2), (3, 1, 2, 4), (3, 1, 4, 2), (3, 4, 1, 2)]


@given(posets(max_n=6))
def test_extensions_match_brute_force(P):
    exts = linear_extensions(P)
    assert exts == brute_extensions(P)
    assert count_linear_extensions(P) == len(exts)


def test_closure_and_covers():
    P = poset_from_covers(3, [(1, 2), (2, 3)])
    assert P.precedes(1, 3)
    assert P.covers() == [(1, 2), (2, 3)]
    assert chain_of([3, 1, 2]).covers() == [(1, 2), (3, 1)]


def test_invalid_inputs():
    with pytest.raises(CyclicRelation):
        poset_from_covers(2, [(1, 2), (2, 1)])
    with pytest.raises(InvalidLabel):
        poset_from_covers(2, [(1, 3)])
    with pytest.raises(InvalidSpec):
        poset_from_json({"covers": []})


def test_json_round_trip():
    assert poset_from_json(N_SHAPE.to_json()) == N_SHAPE
    assert poset_from_json('{"n": 4, "covers": [[1, 2], [3, 2], [3, 4]]}') == N_SHAPE


def test_labeled_poset_counts():
    # labeled posets on n points: 1, 3, 19, 219
    assert [len(all_posets(n)) for n in range(1, 5)] == [1, 3, 19, 219]


@given(posets(max_n=6))
def test_dual_reverses_extensions(P):
    assert sorted(p[::-1] for p in linear_extensions(P)) == linear_extensions(dual(P))


@given(posets(max_n=3), posets(max_n=3), st.data())
def test_labeled_union_count_independent_of_s(P, Q, data):
    S = data.draw(st.sampled_from(list(itertools.combinations(range(1, P.n + Q.n + 1), P.n))))
    assert count_linear_extensions(disjoint_union_s(P, Q, S)) == count_linear_extensions(disjoint_union(P, Q))


@given(posets(max_n=3), posets(max_n=3))
def test_ordinal_sum_extensions_concatenate(P, Q):
    expected = [p + tuple(v + P.n for v in q) for p in linear_extensions(P) for q in linear_extensions(Q)]
    assert linear_extensions(ordinal_sum(P, Q)) == sorted(expected)


def test_add_bottom():
    P = add_bottom(antichain(2))
    assert P.covers() == [(1, 2), (1, 3)]


def test_decreasing_forest_pool_sizes():
    # the recursive constructor yields k! labeled forests on k elements
    assert [len(all_decreasing_forests(k)) for k in range(1, 7)] == [1, 2, 6, 24, 120, 720]
    for F in all_decreasing_forests(5):
        assert is_decreasing_forest(F)
    assert len(set(all_decreasing_forests(5))) == 120


def test_is_decreasing_forest():
    assert is_decreasing_forest(chain(3))
    assert is_decreasing_forest(poset_from_covers(3, [(1, 3), (2, 3)]))
    # an element covered twice
    assert not is_decreasing_forest(add_bottom(antichain(3)))
    assert not is_decreasing_forest(poset_from_covers(2, [(2, 1)]))


def test_random_forest_is_seeded():
    a = random_decreasing_forest(6, 3)
    assert a == random_decreasing_forest(6, random.Random(3))
    assert is_decreasing_forest(a) and a.n == 6


def test_union_relabel_permutation_small():
    assert union_relabel_permutation(antichain(1), chain(2), [3]) == (2, 3, 1)
    # S equal to the first labels needs no relabeling
    assert union_relabel_permutation(chain(2), chain(2), [1, 2]) == (1, 2, 3, 4)
