import pytest

from greedy_tamari import verify as V
from greedy_tamari.poly import SparsePoly


@pytest.mark.parametrize("equation", ["greedy", "greedy-system", "ordinary", "ordinary-system",
                                      "contacts", "constellation", "greedy-q"])
@pytest.mark.parametrize("m", [1, 2])
def test_series_against_enumeration(equation, m):
    rep = V.verify_series(equation, m, 4)
    assert rep.passed, [c.key for c in rep.failures()]


def test_series_comparison_detects_mismatch():
    solved = V.solver_series("greedy", 2, 4)[0]
    counted = V.enumeration_series("ordinary", 2, 4)[0]
    assert solved[3] != counted[3]


def test_greedy_contacts_snippet():
    T = V.enumeration_series("contacts-greedy", 2, 4)[0]
    assert T[2] == SparsePoly.from_univariate([3, 3])
    assert T[3] == SparsePoly.from_univariate([22, 23, 9])


@pytest.mark.parametrize("target", ["thm1.1", "eq1.1", "labelled"])
def test_count_targets(target):
    assert all(r.passed for r in V.run_target(target, m=1, n_max=5))


def test_single_n():
    (rep,) = V.run_target("labelled", m=1, n=2)
    (c,) = rep.checks
    assert (c.lhs, c.rhs) == (4, 4)


def test_structure_suites():
    assert V.verify_monoid(2, 4).passed
    assert V.verify_bijections(2, 4).passed
    assert all(r.passed for r in V.verify_embedding((2,), 3))
    assert all(r.passed for r in V.verify_orders((1,), 4))


def test_structure_reports_are_nonvacuous():
    rep = V.verify_bijections(1, 4)
    keys = {c.key for c in rep.checks}
    assert {"phi round-trip", "psi round-trip", "peak deletion along greedy covers",
            "peak deletion along ordinary covers"} <= keys
    assert all(c.rhs > 0 for c in rep.checks)


def test_parametric_targets():
    assert all(r.passed for r in V.verify_greedy_parametric((1,), N=8, invariant_order=10))
    assert all(r.passed for r in V.verify_ordinary_parametric((1,), N=8, invariant_order=10))


def test_unknown_target():
    with pytest.raises(ValueError):
        V.run_target("nope")
