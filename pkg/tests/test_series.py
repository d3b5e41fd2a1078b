"""Truncated power series over Laurent coefficients."""

import pytest
from hypothesis import given, strategies as st

from treegrammar.grammar import MOTZ
from treegrammar.poly import ONE, parse_poly
from treegrammar.series import (
    NonSquareLeadingTerm, OrderExceeded, PowerSeries, one_series,
    series_arith, series_coeff, series_from_q_poly, series_sqrt,
)

from conftest import polys

P = parse_poly


def test_multiplicative_identity_truncates_to_min_order():
    a = series_from_q_poly([P("x"), P("y"), P("x*y")], 5)
    assert series_arith("mul", a, one_series(2)) == a.truncate(2)


@pytest.mark.parametrize("k", [0, 1, 4, 7])
def test_telescoping(k):
    geo = PowerSeries.from_coeffs([1] * (k + 1), k)
    assert series_arith("mul", series_from_q_poly([1, -1], k), geo) == one_series(k)


def test_gen_square_matches_gen_of_square():
    a = MOTZ.gen_series(P("t^-1"), 6)
    assert a * a == MOTZ.gen_series(P("t^-2"), 6)


@pytest.mark.parametrize("k", [0, 3, 8])
def test_sqrt_of_one(k):
    assert series_sqrt(one_series(k)) == one_series(k)


def test_sqrt_known_expansion():
    s = series_sqrt(series_from_q_poly([1, 0, P("-4*u")], 4))
    assert s == series_from_q_poly([1, 0, P("-2*u"), 0, P("-2*u^2")], 4)


def test_sqrt_monomial_leading_term():
    s = series_sqrt(series_from_q_poly([P("t^-2"), P("-2*t^-1*v")], 3))
    assert s.coeff(0) == P("t^-1")
    assert s * s == series_from_q_poly([P("t^-2"), P("-2*t^-1*v")], 3)


@pytest.mark.parametrize("lead", ["2", "-1", "x", "x + y", "4*x^3"])
def test_sqrt_rejects_non_square_leading_term(lead):
    with pytest.raises(NonSquareLeadingTerm):
        series_sqrt(series_from_q_poly([P(lead), 1], 3))


def test_coeff_beyond_order():
    with pytest.raises(OrderExceeded):
        series_coeff(one_series(2), 3)


def test_constant_term():
    assert series_coeff(one_series(5), 0) == ONE


@given(st.lists(polys(laurent=False, max_terms=2), min_size=1, max_size=4), st.integers(0, 5))
def test_sqrt_squares_back(tail, k):
    a = PowerSeries.from_coeffs([P("4*x^2")] + tail, k)
    r = a.sqrt()
    assert r * r == a


@given(st.lists(polys(max_terms=2), max_size=4), st.lists(polys(max_terms=2), max_size=4))
def test_mul_commutes(a, b):
    sa, sb = PowerSeries.from_coeffs(a, 3), PowerSeries.from_coeffs(b, 3)
    assert sa * sb == sb * sa
    assert (sa + sb) - sb == sa
