import pytest

from greedy_tamari.closedform import greedy_count, ordinary_count
from greedy_tamari.poly import ONE, Q, X, SparsePoly
from greedy_tamari.series import (
    TSeries,
    greedy_residual,
    solve_constellations,
    solve_contacts,
    solve_greedy,
    solve_greedy_q,
    solve_greedy_system,
    solve_ordinary_system,
)


def px(*coeffs):
    return SparsePoly.from_univariate(coeffs, "x")


def test_tseries_inverse_and_power():
    s = 1 - TSeries.t(6)
    inv = s.inverse()
    assert all(inv[k] == ONE for k in range(6))
    assert (s ** -2)[3] == SparsePoly.const(4)
    with pytest.raises(ArithmeticError):
        TSeries.t(4).inverse()


def test_solve_greedy_examples():
    I = solve_greedy(2, 4)
    assert I[1] == X ** 2
    assert I[2] == X ** 4 * 3 + X ** 3 * 2 + X ** 2
    assert solve_greedy(1, 3)[2] == X + X ** 2 * 2


@pytest.mark.parametrize("m", [1, 2, 3])
def test_greedy_totals_and_residual(m):
    I = solve_greedy(m, 8)
    assert [I[n].evaluate("x", 1).constant_value() for n in range(1, 8)] == \
        [greedy_count(m, n) for n in range(1, 8)]
    res = greedy_residual(I, m)
    assert all(not c for c in res.coeffs)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_greedy_coefficient_shape(m):
    I = solve_greedy(m, 7)
    for n in range(1, 7):
        c = I[n]
        assert all(isinstance(v, int) and v > 0 for v in c.coefficients())
        assert c.degree("x") <= m * n and c.low_degree("x") >= m


def test_truncation_idempotence():
    assert solve_greedy(2, 7).truncate(4) == solve_greedy(2, 4)
    assert solve_contacts(2, 7).truncate(4) == solve_contacts(2, 4)
    assert solve_constellations(2, 7).truncate(4) == solve_constellations(2, 4)
    assert solve_ordinary_system(2, 7)[-1].truncate(4) == solve_ordinary_system(2, 4)[-1]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_greedy_system(m):
    J = solve_greedy_system(m, 10)
    assert J[0] == TSeries.t(10, X ** m)
    assert J[-1] == solve_greedy(m, 10)


def test_ordinary_m1_totals():
    Ib = solve_ordinary_system(1, 5)[-1]
    assert [Ib[n].evaluate("x", 1).constant_value() for n in range(1, 5)] == [1, 3, 13, 68]


def test_ordinary_m1_equals_contacts_shift():
    N = 8
    Ib = solve_ordinary_system(1, N)[-1]
    T = solve_contacts(1, N)
    assert T.divide_by_marker("x", 1) - 1 == Ib


@pytest.mark.parametrize("m", [1, 2])
def test_contacts_totals(m):
    T = solve_contacts(m, 7)
    assert T[0] == X
    assert [T[n].evaluate("x", 1).constant_value() for n in range(1, 7)] == \
        [ordinary_count(m, n) for n in range(1, 7)]


def test_constellations():
    C = solve_constellations(2, 4)
    assert C[0] == ONE and C[1] == X
    assert C[2] == px(0, 3, 3)
    assert C[3] == px(0, 22, 20, 12)
    for m in (1, 2, 3):
        C = solve_constellations(m, 9)
        assert [C[n].evaluate("x", 1).constant_value() for n in range(1, 9)] == \
            [greedy_count(m, n) for n in range(1, 9)]


def test_greedy_q():
    Iq = solve_greedy_q(2, 3)
    assert Iq[2] == X ** 2 + X ** 3 + X ** 4 + X ** 3 * Q + X ** 4 * Q + X ** 4 * Q ** 2
    for m in (1, 2):
        assert solve_greedy_q(m, 8).evaluate("q", 1) == solve_greedy(m, 8)


def test_text_and_json():
    I = solve_greedy(2, 3)
    assert I.to_text(" ; ") == "t^1: x^2 ; t^2: 3x^4+2x^3+x^2"
    assert TSeries.from_json(I.to_json()) == I
