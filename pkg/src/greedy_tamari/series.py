"""Truncated power series in t with SparsePoly coefficients, and the
catalytic equations solved order by order.

Every solver fills coefficient ``t^n`` of each unknown before moving to
``n + 1``.  Each right-hand side carries a factor ``t`` or a multiplier of
valuation at least one, so coefficient ``t^n`` only needs lower orders.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Sequence

from .poly import ONE, X, ZERO, SparsePoly, delta, delta_q


class TSeries:
    """Series ``sum_{n < order} coeffs[n] t^n``, truncated at ``order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None):
        if order is None:
            order = len(coeffs)
        cs = [c if isinstance(c, SparsePoly) else SparsePoly.const(c) for c in coeffs[:order]]
        cs.extend([ZERO] * (order - len(cs)))
        self.order = order
        self.coeffs: List[SparsePoly] = cs

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls([], order)

    @classmethod
    def const(cls, c, order: int) -> "TSeries":
        return cls([c], order)

    @classmethod
    def t(cls, order: int, coeff=ONE) -> "TSeries":
        return cls([ZERO, coeff], order)

    def __getitem__(self, n: int) -> SparsePoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TSeries(order={self.order}, {self.to_text(' ; ')})"

    def _match(self, other) -> "TSeries":
        if isinstance(other, TSeries):
            return other
        return TSeries.const(other, self.order)

    def __add__(self, other) -> "TSeries":
        other = self._match(other)
        n = min(self.order, other.order)
        return TSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    __radd__ = __add__

    def __neg__(self) -> "TSeries":
        return TSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other) -> "TSeries":
        return self + (-self._match(other))

    def __rsub__(self, other) -> "TSeries":
        return self._match(other) - self

    def __mul__(self, other) -> "TSeries":
        if isinstance(other, (int, Fraction, SparsePoly)):
            return TSeries([a * other for a in self.coeffs], self.order)
        if not isinstance(other, TSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        lo_a = self.valuation()
        lo_b = other.valuation()
        out = []
        for k in range(n):
            acc = ZERO
            for i in range(lo_a, k - lo_b + 1):
                if a[i] and b[k - i]:
                    acc = acc + a[i] * b[k - i]
            out.append(acc)
        return TSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TSeries":
        if k < 0:
            return self.inverse() ** (-k)
        result = TSeries.const(ONE, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order

    def has_valuation(self, v: int) -> bool:
        return all(not c for c in self.coeffs[:v])

    def inverse(self) -> "TSeries":
        """Multiplicative inverse; the constant term must be a nonzero number."""
        c0 = self.coeffs[0]
        if not c0 or not c0.is_constant():
            raise ArithmeticError("series inverse needs a nonzero numeric constant term")
        inv0 = Fraction(1) / Fraction(c0.constant_value())
        out = [SparsePoly.const(inv0)]
        for k in range(1, self.order):
            acc = ZERO
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * out[k - i]
            out.append(acc * (-inv0))
        return TSeries(out, self.order)

    def truncate(self, order: int) -> "TSeries":
        return TSeries(self.coeffs[:order], min(order, self.order))

    def map(self, f: Callable[[SparsePoly], SparsePoly]) -> "TSeries":
        return TSeries([f(c) for c in self.coeffs], self.order)

    def evaluate(self, name: str, value) -> "TSeries":
        return self.map(lambda c: c.evaluate(name, value))

    def shift(self, name: str, power: int) -> "TSeries":
        return self.map(lambda c: c.shift(name, power))

    def divide_by_marker(self, name: str, power: int = 1) -> "TSeries":
        return self.map(lambda c: c.divide_by_marker(name, power))

    # -- output -----------------------------------------------------------

    def to_text(self, sep: str = "\n") -> str:
        lines = [f"t^{n}: {c}" for n, c in enumerate(self.coeffs) if c]
        return sep.join(lines) if lines else "0"

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list) -> "TSeries":
        return cls([SparsePoly.from_json(c) for c in data])


def powers_of(s: TSeries, top: int) -> List[TSeries]:
    out = [TSeries.const(ONE, s.order)]
    for _ in range(top):
        out.append(out[-1] * s)
    return out


def substitute(poly: SparsePoly, powers: dict, order: int) -> TSeries:
    """Evaluate a polynomial in the markers at series.

    ``powers`` maps a marker name to precomputed powers ``[S^0, S^1, ...]``
    long enough for ``poly``; markers absent from ``powers`` stay symbolic.
    """
    acc = TSeries.zero(order)
    for e, c in poly.items():
        term = TSeries.const(SparsePoly.const(c), order)
        for name, k in zip(("x", "q", "z", "u"), e):
            if not k:
                continue
            if name in powers:
                term = term * powers[name][k]
            else:
                term = term * SparsePoly.var(name, k)
        acc = acc + term
    return acc


def _conv(a: Sequence[SparsePoly], b: Sequence[SparsePoly], n: int, start: int = 0) -> SparsePoly:
    """Coefficient ``t^n`` of ``A * B`` using ``a[start..n]``."""
    acc = ZERO
    for i in range(start, n + 1):
        if a[i] and b[n - i]:
            acc = acc + a[i] * b[n - i]
    return acc


# -- Greedy intervals -------------------------------------------------------

def _solve_hat_system(m: int, N: int, diff: Callable[[SparsePoly], SparsePoly]) -> List[List[SparsePoly]]:
    """Coefficient lists of F_k = (x + Î·diff)^k (1) for k = 0..m+2, with
    Î = t·F_{m+2} solved along the way.  Returns ``[F_0, ..., F_{m+2}, Î]``."""
    levels = m + 2
    F = [[ZERO] * N for _ in range(levels + 1)]
    hat_i = [ZERO] * N
    for n in range(N):
        # Î_n needs F_{m+2} at order n-1, which only uses Î below n-1
        if n >= 1:
            hat_i[n] = F[levels][n - 1]
        F[0][n] = ONE if n == 0 else ZERO
        for k in range(1, levels + 1):
            prev = F[k - 1]
            acc = X * prev[n]
            for a in range(1, n + 1):
                if hat_i[a] and prev[n - a]:
                    acc = acc + hat_i[a] * diff(prev[n - a])
            F[k][n] = acc
    return F + [hat_i]


def solve_greedy(m: int, N: int) -> TSeries:
    """The series I of greedy intervals by size and final descent of the top path."""
    hat = _solve_hat_system(m, N, delta)[-1]
    return TSeries(hat, N).divide_by_marker("x", 2)


def solve_greedy_q(m: int, N: int) -> TSeries:
    """I with q marking the longest chain from bottom to top."""
    hat = _solve_hat_system(m, N, delta_q)[-1]
    return TSeries(hat, N).divide_by_marker("x", 2)


def solve_greedy_system(m: int, N: int) -> List[TSeries]:
    """``[J_0, ..., J_{m+1}]`` for the greedy order."""
    F = _solve_hat_system(m, N, delta)
    out = []
    for i in range(m + 2):
        # Ĵ_i = t F_{i+1}, and J_i = x^{m-i-1} Ĵ_i
        hat = TSeries([ZERO] + F[i + 1][:N - 1], N)
        power = m - i - 1
        out.append(hat.shift("x", power) if power >= 0 else hat.divide_by_marker("x", -power))
    return out


# -- Ordinary intervals -----------------------------------------------------

def solve_ordinary_system(m: int, N: int) -> List[TSeries]:
    """``[J̄_0, ..., J̄_{m+1}]``; the last one is the ordinary interval series Ī."""
    J = [[ZERO] * N for _ in range(m + 2)]
    if N > 1:
        J[0][1] = SparsePoly.var("x", m)

    def kernel(p: SparsePoly, i: int) -> SparsePoly:
        # (x p - x^{m+1-i} p(1)) / (x - 1)
        num = p.shift("x", 1) - p.evaluate("x", 1).shift("x", m + 1 - i)
        return num.divide_linear("x", 1)

    for n in range(1, N):
        for i in range(1, m + 2):
            acc = J[i - 1][n]
            for a in range(1, n):
                if J[m][a] and J[i][n - a]:
                    acc = acc + J[m][a] * kernel(J[i][n - a], i)
            J[i][n] = acc
    return [TSeries(c, N) for c in J]


def solve_contacts(m: int, N: int) -> TSeries:
    """T = x + x t (T Δ)^{(m+1)}(x): ordinary intervals, x marking contacts."""
    T = [ZERO] * N
    T[0] = X
    G = [[ZERO] * N for _ in range(m + 2)]
    for n in range(N):
        if n >= 1:
            T[n] = X * G[m + 1][n - 1]
        G[0][n] = X if n == 0 else ZERO
        for k in range(1, m + 2):
            prev = G[k - 1]
            acc = ZERO
            for a in range(0, n + 1):
                if T[a] and prev[n - a]:
                    acc = acc + T[a] * delta(prev[n - a])
            G[k][n] = acc
    return TSeries(T, N)


def solve_constellations(m: int, N: int) -> TSeries:
    """C = 1 + x t (C + Δ)^{(m+1)}(1): x marks root white-face degree / (m+1)."""
    C = [ZERO] * N
    C[0] = ONE
    F = [[ZERO] * N for _ in range(m + 2)]
    for n in range(N):
        if n >= 1:
            C[n] = X * F[m + 1][n - 1]
        F[0][n] = ONE if n == 0 else ZERO
        for k in range(1, m + 2):
            prev = F[k - 1]
            F[k][n] = _conv(C, prev, n) + delta(prev[n])
    return TSeries(C, N)


# -- Residual checks ----------------------------------------------------------

def apply_operator(hat_i: TSeries, diff: Callable[[SparsePoly], SparsePoly], times: int,
                   start: TSeries) -> TSeries:
    """``(x + Î·diff)^{times}`` applied to ``start`` with whole-series arithmetic."""
    F = start
    for _ in range(times):
        F = F * X + hat_i * F.map(diff)
    return F


def greedy_residual(I: TSeries, m: int) -> TSeries:
    """``x²I - t (x + x²IΔ)^{(m+2)}(1)``; zero when ``I`` solves the equation."""
    N = I.order
    hat = I.shift("x", 2)
    rhs = TSeries.t(N) * apply_operator(hat, delta, m + 2, TSeries.const(ONE, N))
    return hat - rhs
