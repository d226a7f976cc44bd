from fractions import Fraction

import pytest

from greedy_tamari import closedform as cf
from greedy_tamari.poly import X
from greedy_tamari.series import TSeries, solve_greedy, solve_greedy_system, solve_ordinary_system


def test_count_examples():
    assert cf.greedy_count(2, 2) == 6
    assert cf.greedy_count(1, 1) == 1
    assert cf.greedy_count(1, 4) == 56
    assert [cf.greedy_count(1, n) for n in range(1, 7)] == [1, 3, 12, 56, 288, 1584]
    assert cf.ordinary_count(1, 3) == 13
    assert cf.ordinary_count(1, 1) == 1
    assert cf.ordinary_count(2, 2) == 6
    assert cf.labelled_ordinary_count(1, 2) == 4
    assert cf.labelled_ordinary_count(1, 1) == 1
    assert cf.labelled_ordinary_count(2, 3) == 189


def test_counts_integral_and_ordered():
    for m in range(1, 5):
        for n in range(1, 21):
            g, o = cf.greedy_count(m, n), cf.ordinary_count(m, n)
            assert isinstance(g, int) and isinstance(o, int) and g <= o


def test_profile_examples():
    assert cf.constellation_profile_count(2, cf.Profile.from_key("1^2")) == 3
    assert cf.constellation_profile_count(2, cf.Profile.from_key("2^1")) == 3
    assert cf.Profile.from_parts((1, 1, 2)).key == "1^2 2^1"


@pytest.mark.parametrize("m", [1, 2, 3])
def test_profile_counts_sum_to_greedy_count(m):
    for n in range(1, 7):
        total = sum(cf.constellation_profile_count(m, cf.Profile.from_parts(p))
                    for p in cf.partitions(n))
        assert total == cf.greedy_count(m, n)


def test_param_z_coefficients():
    assert [cf.solve_param_greedy(1, 6).Z[n].constant_value() for n in range(6)] == [0, 1, 2, 8, 40, 224]
    assert [cf.solve_param_greedy(2, 4).Z[n].constant_value() for n in range(4)] == [0, 1, 6, 63]


def test_param_u_first_order():
    m = 2
    U = cf.solve_param_greedy(m, 3).U
    geometric = sum((X ** e for e in range(m + 1)), X * 0)
    assert U[0] == X
    assert U[1] == X * (geometric - (m + 1))


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_param_invariants(m):
    for pair in (cf.solve_param_greedy(m, 12), cf.solve_param_ordinary(m, 12)):
        assert all(cf.check_param_invariants(pair).values())


@pytest.mark.parametrize("m", [1, 2, 3])
def test_greedy_parametric_matches_engine(m):
    N = 9
    par = cf.eval_theorem41(m, N)
    assert par.hat_I == solve_greedy(m, N).shift("x", 2)
    assert par.forms_agree
    for got, want in zip(par.J, solve_greedy_system(m, N)):
        assert got == want.shift("x", 2)
    assert [par.I_at_1[n].constant_value() for n in range(1, N)] == [cf.greedy_count(m, n) for n in range(1, N)]


@pytest.mark.parametrize("m", [1, 2])
def test_ordinary_parametric_matches_engine(m):
    N = 8
    par = cf.eval_theorem54(m, N)
    engine = solve_ordinary_system(m, N)
    assert par.hat_I == engine[-1].shift("x", 2)
    assert all(a == b.shift("x", 2) for a, b in zip(par.J, engine))
    assert par.Jm_closed_matches
    assert [par.one_plus_I_at_1[n].constant_value() for n in range(N)] == \
        [1] + [cf.ordinary_count(m, n) for n in range(1, N)]


def test_constellation_marginals_small():
    rep = cf.check_conjecture(2, 3)
    assert rep.passed
    keys = {(c.n, c.key): (c.lhs, c.rhs) for c in rep.checks}
    assert keys[(2, "profile 1^2")] == (3, 3)
    assert keys[(2, "profile 2^1")] == (3, 3)
    assert keys[(3, "root 3")] == (12, 12)
    assert cf.JOINT_NOTE in rep.notes


def test_constellation_check_threads_do_not_change_output():
    assert cf.check_conjecture(1, 5, threads=2).to_json() == cf.check_conjecture(1, 5).to_json()
