from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from greedy_tamari.poly import ONE, Q, X, Z, ZERO, SparsePoly, delta, delta_q, format_rational


def poly_x(coeffs):
    return SparsePoly.from_univariate(coeffs, "x")


small_polys = st.lists(st.integers(-5, 5), min_size=0, max_size=6).map(poly_x)


def test_delta_examples():
    assert delta(X ** 2) == X + 1
    assert delta(SparsePoly.const(7)) == ZERO
    assert delta(X ** 3 + X * 2) == X ** 2 + X + 3


def test_delta_q_examples():
    assert delta_q(X) == ONE
    assert delta_q(X ** 2) == X * Q + 1


@given(small_polys)
def test_delta_times_x_minus_one_recovers_numerator(p):
    assert delta(p) * (X - 1) == p - p.evaluate("x", 1)


@given(small_polys)
def test_delta_q_at_q1_is_delta(p):
    assert delta_q(p).evaluate("q", 1) == delta(p)


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        (X ** 2 + 1).divide_linear("x", 1)


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a) == ZERO


def test_canonical_text():
    p = X ** 4 * 3 + X ** 3 * 2 + X ** 2
    assert p.to_string() == "3x^4+2x^3+x^2"
    assert str(X * Q ** 2 - Z) == "xq^2-z"
    assert str(SparsePoly.const(Fraction(1, 2)) * X) == "1/2x"
    assert format_rational(3) == "3/1"


def test_json_round_trip():
    p = X ** 2 * Fraction(-3, 4) + Q * Z + 5
    assert SparsePoly.from_json(p.to_json()) == p


def test_laurent_shift_round_trip():
    p = X ** 2 + 1
    assert p.shift("x", -3).shift("x", 3) == p


def test_subs_and_evaluate():
    p = X ** 2 + X
    assert p.subs("x", ONE - Z) == (ONE - Z) ** 2 + (ONE - Z)
    assert p.evaluate("x", 2) == SparsePoly.const(6)
