import pytest
from hypothesis import given

from conftest import permutations
from peuler.errors import InvalidPermutation
from peuler.permstat import (
    as_permutation,
    ascent_bottoms,
    bottom_set,
    descent_bottoms,
    descent_count,
    format_permutation,
    peak_set,
    peak_valley_set,
)
from peuler.polyring import z

INF = float("inf")


def _padded(p):
    return [INF, *p, INF]


@pytest.mark.parametrize("text", ["3142", "3 1 4 2", "3,1,4,2", [3, 1, 4, 2]])
def test_as_permutation_accepts_common_forms(text):
    assert as_permutation(text) == (3, 1, 4, 2)


@pytest.mark.parametrize("bad", ["3143", [0, 1], "12a", [1, 3]])
def test_as_permutation_rejects(bad):
    with pytest.raises(InvalidPermutation):
        as_permutation(bad)


def test_statistics_of_3142():
    p = (3, 1, 4, 2)
    assert descent_count(p) == 2
    assert descent_bottoms(p) == (1, 2, 3)
    assert ascent_bottoms(p) == (1, 2)
    assert bottom_set(p) == (z(1), z(1, True), z(2), z(2, True), z(3))
    assert peak_set(p) == (3,)
    assert peak_valley_set(p) == (1, 2, 4)
    assert format_permutation(p) == "3142"


@given(permutations(max_n=8))
def test_bottoms_match_padded_definition(p):
    q = _padded(p)
    db = tuple(sorted(q[i] for i in range(1, len(q) - 1) if q[i - 1] > q[i]))
    ab = tuple(sorted(q[i] for i in range(1, len(q) - 1) if q[i] < q[i + 1]))
    assert descent_bottoms(p) == db
    assert ascent_bottoms(p) == ab


@given(permutations(max_n=8))
def test_peak_valley_count(p):
    assert len(peak_valley_set(p)) == 2 * len(peak_set(p)) + 1


@given(permutations(max_n=8))
def test_descents_plus_ascents(p):
    # the letters that are neither kind of bottom are exactly the peaks
    assert set(p) - set(descent_bottoms(p)) - set(ascent_bottoms(p)) == {p[i - 1] for i in peak_set(p)}
    assert len(descent_bottoms(p)) == descent_count(p) + 1
