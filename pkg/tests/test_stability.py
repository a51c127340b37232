from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from peuler.errors import InvalidParameter, NotSymmetric
from peuler.eulerian import db_eulerian, multivariate_eulerian, univariate_eulerian
from peuler.polyring import MultiAffinePoly, evaluate, parse_poly, partial, z
from peuler.poset import antichain, chain, disjoint_union_s, poset_from_covers
from peuler.stability import (
    QI,
    branden_sample,
    check_stable,
    gws_collapse,
    homogeneous_bivariate_stable,
    is_hurwitz_univariate,
    is_real_rooted,
    is_real_rooted_negative,
    malo_binom_poly,
    phi_symbol_closed_form_check,
    routh_first_column,
)
from peuler.univariate import UnivariatePoly

# the smallest decreasing forest whose A_F(z) has a zero in the open upper half-plane
CROSSED = poset_from_covers(4, [(1, 3), (2, 4)])


# ---------------------------------------------------------------------------
# univariate


def test_real_rootedness():
    assert is_real_rooted(UnivariatePoly([1, 3, 3, 1]))
    assert not is_real_rooted(UnivariatePoly([1, 0, 1]))
    assert is_real_rooted(UnivariatePoly([5]))
    assert is_real_rooted_negative(UnivariatePoly([2, 3, 1]))
    assert not is_real_rooted_negative(UnivariatePoly([-2, -1, 1]))


@given(st.lists(st.fractions(-5, 5, max_denominator=4), min_size=1, max_size=6))
def test_products_of_real_linear_factors_are_real_rooted(roots):
    assert is_real_rooted(UnivariatePoly.from_roots(roots))


def test_malo_values():
    assert malo_binom_poly(2, 3) == UnivariatePoly([3, 6, 1])
    with pytest.raises(InvalidParameter):
        malo_binom_poly(0, 3)


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", range(2, 6))
def test_malo_real_rooted_negative(n, m):
    assert is_real_rooted_negative(malo_binom_poly(n, m))


def test_routh():
    # (x+1)(x+2)(x+3)
    p = UnivariatePoly([6, 11, 6, 1])
    assert routh_first_column(p) == [1, 6, 10, 6]
    assert is_hurwitz_univariate(p)
    assert not is_hurwitz_univariate(UnivariatePoly([1, 0, 1]))  # roots on the axis
    assert not is_hurwitz_univariate(UnivariatePoly([-1, 1]))
    assert routh_first_column(UnivariatePoly([1, 0, 1])) is None


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=6))
def test_routh_agrees_with_numeric_roots(coeffs):
    p = UnivariatePoly(coeffs)
    assume(p.degree >= 1)
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    assume(all(abs(r.real) > 1e-6 for r in roots))
    assert is_hurwitz_univariate(p) == all(r.real < 0 for r in roots)


# ---------------------------------------------------------------------------
# collapses and bivariate forms


def test_homogeneous_bivariate():
    assert homogeneous_bivariate_stable(parse_poly("x^2 + 3*x*y + 2*y^2"))
    # h(t, 1) = t - 1 is real-rooted, yet x - y vanishes at (i, i)
    assert not homogeneous_bivariate_stable(parse_poly("x - y"))


def test_gws_collapse():
    assert gws_collapse(parse_poly("z1 + z2 + z1*z2"), [z(1), z(2)]) == parse_poly("2*z1 + z1^2")
    with pytest.raises(NotSymmetric):
        gws_collapse(parse_poly("z1 + 2*z2"), [z(1), z(2)])


# ---------------------------------------------------------------------------
# check_stable


@pytest.mark.parametrize("text", ["z1*z1p", "z1 + z2", "z1*z2 - 1", "1 + z1 + z2 + z1*z2", "x^2 + 3*x + 2"])
def test_known_stable_not_refuted(text):
    assert not check_stable(parse_poly(text)).refuted


@pytest.mark.parametrize("text", ["z1*z2 + 1", "x^2 + 1", "z1 + z2 + z3 + z1*z2*z3"])
def test_known_unstable_refuted_with_witness(text):
    f = parse_poly(text)
    ver = check_stable(f)
    assert ver.refuted
    assert ver.witness is not None
    value = complex(evaluate(f, ver.witness.point))
    assert abs(value) < 1e-8
    assert all(v.imag > 0 for v in ver.witness.point.values())


def test_univariate_certified():
    assert check_stable(parse_poly("z1*z1p")).certified
    assert check_stable(parse_poly("x^2 + 3*x + 2")).certified


def test_right_region():
    # closed region: anything vanishing at the origin is refuted there
    ver = check_stable(parse_poly("z1 + z2"), "right")
    assert ver.refuted and ver.witness.exact
    assert check_stable(parse_poly("1 + z1 + z2"), "right").certified
    assert check_stable(parse_poly("x^2 + 1"), "right").refuted


def test_trivial_inputs():
    assert check_stable(MultiAffinePoly.constant(0)).refuted
    assert check_stable(MultiAffinePoly.constant(3)).certified
    with pytest.raises(InvalidParameter):
        check_stable(parse_poly("z1"), "left")


def test_verdict_json():
    js = check_stable(parse_poly("z1*z2 + 1")).to_json()
    assert js["status"] == "Refuted" and "witness" in js
    js = check_stable(parse_poly("z1*z1p")).to_json()
    assert js == {"status": "Certified", "region": "upper", "method": js["method"]}


def test_qi_arithmetic():
    a = QI(1, 2)
    assert a * QI(0, 1) == QI(-2, 1)
    assert a / a == QI(1)
    assert a ** 2 == QI(-3, 4)
    assert complex(a) == 1 + 2j


# ---------------------------------------------------------------------------
# decreasing forests whose multivariate polynomials are not stable


def test_crossed_forest_has_exact_negative_discriminant():
    f = multivariate_eulerian(CROSSED)
    bracket = parse_poly("z2p*z3p*z4p + z3*z2p*z3p + z2*z3p*z4p + z2*z2p*z4p + z2*z2p*z3p + z2*z3*z3p")
    assert f == parse_poly("z1*z1p") * bracket
    x = {
        z(2, True): Fraction(-1),
        z(3, True): Fraction(-7, 3),
        z(4, True): Fraction(-3, 2),
        z(2): Fraction(5, 4),
        z(3): Fraction(3, 2),
    }
    i, j = z(3, True), z(3)
    fi, fj, fij = partial(i, bracket), partial(j, bracket), partial(j, partial(i, bracket))
    delta = evaluate(fi, x) * evaluate(fj, x) - evaluate(bracket, x) * evaluate(fij, x)
    assert delta == Fraction(-15, 32)


def test_crossed_forest_refuted_exactly():
    f = multivariate_eulerian(CROSSED)
    ver = check_stable(f, budget=10_000, seed=0)
    assert ver.refuted
    assert ver.witness.exact
    assert all(v.imag > 0 for v in ver.witness.point.values())
    assert abs(complex(evaluate(f, ver.witness.point))) < 1e-9
    assert branden_sample(f, 10_000, 0)[1] == 1


def test_crossed_forest_univariate_still_real_rooted():
    assert is_real_rooted(univariate_eulerian(CROSSED))


@pytest.mark.parametrize("S", [(1, 2), (3, 4)])
def test_contiguous_labelings_not_refuted(S):
    F = disjoint_union_s(chain(2), chain(2), S)
    assert not check_stable(multivariate_eulerian(F), budget=10_000).refuted


@pytest.mark.parametrize("S", [(1, 3), (1, 4), (2, 3), (2, 4)])
def test_interleaved_labelings_refuted(S):
    F = disjoint_union_s(chain(2), chain(2), S)
    assert check_stable(multivariate_eulerian(F), budget=10_000).refuted


def test_descent_bottom_polynomial_of_a_forest_refuted():
    F = poset_from_covers(5, [(1, 4), (2, 3), (3, 5)])
    ver = check_stable(db_eulerian(F), budget=10_000)
    assert ver.refuted
    assert all(v.imag > 0 for v in ver.witness.point.values())
    assert abs(complex(evaluate(db_eulerian(F), ver.witness.point))) < 1e-9


def test_antichain_eulerian_not_refuted():
    assert not check_stable(multivariate_eulerian(antichain(3)), budget=2000).refuted


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1)])
def test_symbol_closed_form(n, m):
    assert phi_symbol_closed_form_check(n, m)
