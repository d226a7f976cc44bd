"""Polynomial identities in (z, u) behind the parametric solutions.

Polynomials here are :class:`SparsePoly` values in the markers z and u.
Reversed sums ``R(1/u)`` are always multiplied by a power of u large
enough to make them polynomial, except where an identity is stated with
a negative prefactor; SparsePoly tolerates negative exponents, so those
cases need no special treatment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, List, Optional, Tuple

from .poly import ONE, U, Z, ZERO, SparsePoly

RFunc = Callable[[int, int], SparsePoly]


@lru_cache(maxsize=None)
def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero for ``k < 0`` or ``0 <= n < k``."""
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    # upper-negation for negative n
    return (-1) ** k * comb(k - n - 1, k)


@lru_cache(maxsize=None)
def R_poly(a: int, ell: int) -> SparsePoly:
    """``R^a_ell(u) = sum_{e=0}^{a} C(e+ell, e) u^e``."""
    if ell < -1:
        raise ValueError("ell must be >= -1")
    if a < 0:
        return ZERO
    if ell == -1:
        return ONE
    return SparsePoly({(0, 0, 0, e): comb(e + ell, e) for e in range(a + 1)})


def reverse_u(p: SparsePoly, shift: int) -> SparsePoly:
    """``u^shift * p(1/u)``."""
    return SparsePoly({(e[0], e[1], e[2], shift - e[3]): c for e, c in p.items()})


def at_u1(H: SparsePoly) -> SparsePoly:
    return H.evaluate("u", 1)


def nabla(m: int, H: SparsePoly) -> SparsePoly:
    """``u (H - u^{m+1} H(1)) / (u - 1)``, exact."""
    num = H - at_u1(H).shift("u", m + 1)
    return num.divide_linear("u", 1).shift("u", 1)


def step(m: int, H: SparsePoly) -> SparsePoly:
    """``(u + z ∇_m) H``."""
    return U * H + Z * nabla(m, H)


@lru_cache(maxsize=None)
def H_poly(m: int, i: int) -> SparsePoly:
    """The polynomials H_i(z; u), 0 <= i <= m+1, in expanded form."""
    if not 0 <= i <= m + 1:
        raise ValueError(f"i must lie in [0, {m + 1}]")
    if i == m + 1:
        inner = SparsePoly({(0, 0, 0, e): m + 1 - e for e in range(m + 1)})
        return (ONE - Z * inner).shift("u", m + 2)
    body = ONE
    for k in range(1, i + 2):
        s = SparsePoly({(0, 0, 0, e): comb(e + k - 1, e) for e in range(m - i + 1)})
        body = body + (-Z) ** k * s * comb(i + 1, k)
    for k in range(1, i + 1):
        s = SparsePoly({(0, 0, 0, m + 1 - k - e): comb(e + k, e) for e in range(i - k + 1)})
        body = body + (-Z) ** k * s * comb(m + k - i - 1, k - 1)
    return body.shift("u", i + 1)


def H_poly_grouped(m: int, i: int, R: RFunc = R_poly) -> SparsePoly:
    """H_i for i <= m in the form grouped by R-polynomials.

    ``sum_k (-z)^k [C(i+1,k) u^{i+1} R^{m-i}_{k-1}(u)
                    + C(m+k-i-1, k-1) u^{m+i+2-k} R^{i-k}_k(1/u)]``
    """
    if not 0 <= i <= m:
        raise ValueError(f"i must lie in [0, {m}]")
    out = ZERO
    for k in range(i + 2):
        term = R(m - i, k - 1).shift("u", i + 1) * binom(i + 1, k)
        c = binom(m + k - i - 1, k - 1)
        if c and i - k >= 0:
            term = term + reverse_u(R(i - k, k), m + i + 2 - k) * c
        out = out + (-Z) ** k * term
    return out


# -- reports ----------------------------------------------------------------

@dataclass
class IdentityCheck:
    name: str
    params: Tuple[int, ...]
    passed: bool

    def to_json(self) -> dict:
        return {"identity": self.name, "params": list(self.params), "pass": self.passed}


@dataclass
class IdentityReport:
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def failures(self) -> List[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, params: Tuple[int, ...], ok: bool) -> None:
        self.checks.append(IdentityCheck(name, params, ok))

    def extend(self, other: "IdentityReport") -> None:
        self.checks.extend(other.checks)

    def to_json(self) -> dict:
        return {"pass": self.passed, "checks": [c.to_json() for c in self.checks]}


def _safe_equal(f: Callable[[], SparsePoly], g: Callable[[], SparsePoly]) -> bool:
    try:
        return f() == g()
    except ArithmeticError:
        return False


def verify_lemmaA1(m: int, a_max: int = 4, ell_max: int = 4, b_max: int = 4,
                   R: RFunc = R_poly) -> IdentityReport:
    """Both ∇_m identities on R-polynomials, for a in [0, a_max],
    ell in [-1, ell_max], b in [1, b_max].

    ``R`` can be swapped for a perturbed version as a negative control.
    """
    rep = IdentityReport()
    for a in range(a_max + 1):
        for ell in range(-1, ell_max + 1):
            rep.add("nabla_R_forward", (m, a, ell), _safe_equal(
                lambda: nabla(m, R(a, ell).shift("u", m + 1 - a)),
                lambda: -R(a - 1, ell + 1).shift("u", m + 2 - a)))
            for b in range(1, b_max + 1):
                s = m + a + b
                rep.add("nabla_R_reversed", (m, a, ell, b), _safe_equal(
                    lambda: nabla(m, reverse_u(R(a, ell), s)),
                    lambda: reverse_u(R(a + b - 2, ell + 1), s)))
    return rep


def verify_propA2(m: int, H: Optional[Callable[[int, int], SparsePoly]] = None) -> IdentityReport:
    """``H_i = (u + z ∇_m) H_{i-1}`` for 1 <= i <= m+1, plus the
    specialization ``H_i(1-z) = (1-z)^{m+2} H_{i-1}(1)`` and the
    agreement of the expanded and grouped forms of H_i."""
    if H is None:
        H = H_poly
    rep = IdentityReport()
    one_minus_z = ONE - Z
    for i in range(1, m + 2):
        prev, cur = H(m, i - 1), H(m, i)
        rep.add("H_recursion", (m, i), _safe_equal(lambda: cur, lambda: step(m, prev)))
        rep.add("H_at_1_minus_z", (m, i), _safe_equal(
            lambda: cur.subs("u", one_minus_z),
            lambda: one_minus_z ** (m + 2) * at_u1(prev)))
    for i in range(m + 1):
        rep.add("H_grouped_form", (m, i), H(m, i) == H_poly_grouped(m, i))
    return rep
