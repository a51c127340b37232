from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from peuler.univariate import UnivariatePoly, count_real_roots, poly_gcd, squarefree_part, sturm_chain

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)
nonzero_polys = st.lists(st.integers(-6, 6), min_size=1, max_size=7).map(UnivariatePoly).filter(lambda p: not p.is_zero)


def test_basic_arithmetic():
    p = UnivariatePoly([1, 2])  # 1 + 2x
    assert str(p * p) == "1 + 4*x + 4*x^2"
    q, r = divmod(UnivariatePoly([-1, 0, 1]), UnivariatePoly([-1, 1]))
    assert q == UnivariatePoly([1, 1]) and r.is_zero
    assert p(Fraction(1, 2)) == 2


@given(nonzero_polys, nonzero_polys)
def test_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero or r.degree < b.degree


@given(st.lists(rationals, min_size=1, max_size=6))
def test_sturm_counts_distinct_real_roots(roots):
    p = UnivariatePoly.from_roots(roots)
    assert count_real_roots(p) == len(set(roots))
    assert squarefree_part(p).degree == len(set(roots))


@given(st.lists(rationals, min_size=1, max_size=5), rationals)
def test_interval_counts(roots, cut):
    assume(cut not in roots)
    p = UnivariatePoly.from_roots(roots)
    # half-open (cut, +inf] convention
    assert count_real_roots(p, cut, "+inf") == len({r for r in roots if r > cut})


def test_no_real_roots():
    p = UnivariatePoly([1, 0, 1])
    assert count_real_roots(p) == 0
    assert len(sturm_chain(p)) == 3


def test_gcd():
    a = UnivariatePoly.from_roots([1, 2, 3])
    b = UnivariatePoly.from_roots([2, 3, 5])
    assert poly_gcd(a, b) == UnivariatePoly.from_roots([2, 3])


def test_lower_end_may_not_be_a_root():
    with pytest.raises(ValueError):
        count_real_roots(UnivariatePoly([0, 1]), 0)
