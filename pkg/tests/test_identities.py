import pytest

from greedy_tamari.identities import (
    H_poly,
    H_poly_grouped,
    R_poly,
    nabla,
    verify_lemmaA1,
    verify_propA2,
)
from greedy_tamari.poly import ONE, U, Z, ZERO, SparsePoly


def pu(*coeffs):
    return SparsePoly.from_univariate(coeffs, "u")


def test_R_examples():
    assert R_poly(0, 3) == ONE
    assert R_poly(4, -1) == ONE
    assert R_poly(2, 1) == pu(1, 2, 3)
    assert R_poly(-1, 2) == ZERO


def test_nabla_examples():
    for m in (1, 2, 3):
        assert nabla(m, U ** (m + 1)) == ZERO
        assert nabla(m, ONE) == -U * pu(*([1] * (m + 1)))
    assert nabla(2, U ** 2 * R_poly(1, 0)) == -(U ** 3) * R_poly(0, 1)


def test_H_examples():
    assert H_poly(1, 2) == U ** 3 * (ONE - Z * (U + 2))
    for m in (1, 2, 3):
        assert H_poly(m, 0) == U * (ONE - Z * pu(*([1] * (m + 1))))
        for i in range(m + 1):
            assert H_poly(m, i).evaluate("z", 0) == U ** (i + 1)
    with pytest.raises(ValueError):
        H_poly(2, 4)


@pytest.mark.parametrize("m", range(1, 7))
def test_H_recursion(m):
    assert verify_propA2(m).passed


def test_forward_R_identity_holds():
    for m in range(1, 5):
        rep = verify_lemmaA1(m)
        assert all(c.passed for c in rep.checks if c.name == "nabla_R_forward")


def test_reversed_R_identity_for_small_b():
    for m in range(1, 5):
        rep = verify_lemmaA1(m, b_max=2)
        assert rep.passed


def test_reversed_R_identity_at_ell_minus_one():
    for m in range(1, 5):
        rep = verify_lemmaA1(m)
        assert all(c.passed for c in rep.checks if c.params[2] == -1)


def test_reversed_R_identity_fails_for_larger_b():
    # recorded counterexample: m=1, a=0, ell=0, b=3
    rep = verify_lemmaA1(1, a_max=0, ell_max=0, b_max=3)
    failing = [c.params for c in rep.failures()]
    assert failing == [(1, 0, 0, 3)]


def test_R_identity_negative_control():
    def perturbed(a, ell):
        p = R_poly(a, ell)
        return p + U ** a if a >= 1 and ell >= 0 else p

    assert not verify_lemmaA1(2, b_max=2, R=perturbed).passed


def test_H_recursion_negative_control():
    def broken(m, i):
        return U * H_poly(m, 0) if i == 1 else H_poly(m, i)

    assert not verify_propA2(2, H=broken).passed


def test_grouped_form_matches():
    for m in range(1, 6):
        for i in range(m + 1):
            assert H_poly(m, i) == H_poly_grouped(m, i)
