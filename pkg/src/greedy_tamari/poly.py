"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`SparsePoly` is a mapping from exponent tuples over the fixed
marker set ``(x, q, z, u)`` to nonzero rationals.  Integral coefficients
are kept as ``int``; anything else is a :class:`fractions.Fraction`.
Negative exponents are allowed, which lets the same type carry the
reversed forms ``R(1/u)`` that show up in the polynomial identities.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

MARKERS = ("x", "q", "z", "u")
_INDEX = {name: k for k, name in enumerate(MARKERS)}
_ZERO_EXP = (0, 0, 0, 0)

Exp = Tuple[int, int, int, int]
Scalar = Union[int, Fraction]


def _norm(c: Scalar) -> Scalar:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _add_exp(a: Exp, b: Exp) -> Exp:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def format_rational(c: Scalar) -> str:
    """Exact ``p/q`` string (``q`` is always written, even when it is 1)."""
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


class SparsePoly:
    """Immutable sparse polynomial in the markers x, q, z, u."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, Scalar] | None = None):
        clean: Dict[Exp, Scalar] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if len(e) != 4:
                        raise ValueError(f"exponent tuple must have length 4, got {e!r}")
                    clean[tuple(e)] = _norm(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exp, Scalar]) -> "SparsePoly":
        # caller guarantees: no zero coefficients, normalized scalars
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "SparsePoly":
        return cls({_ZERO_EXP: c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "SparsePoly":
        e = [0, 0, 0, 0]
        e[_INDEX[name]] = power
        return cls._raw({tuple(e): 1})

    @classmethod
    def monomial(cls, coeff: Scalar = 1, **powers: int) -> "SparsePoly":
        e = [0, 0, 0, 0]
        for name, k in powers.items():
            e[_INDEX[name]] = k
        return cls({tuple(e): coeff})

    @classmethod
    def from_univariate(cls, coeffs: Iterable[Scalar], name: str = "x") -> "SparsePoly":
        """Build ``sum c_k * name^k`` from a dense coefficient list."""
        k = _INDEX[name]
        terms = {}
        for power, c in enumerate(coeffs):
            if c:
                e = [0, 0, 0, 0]
                e[k] = power
                terms[tuple(e)] = c
        return cls(terms)

    # -- basic protocol ---------------------------------------------------

    @property
    def terms(self) -> Dict[Exp, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exp, Scalar]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == (SparsePoly.const(other)._terms)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"SparsePoly({self})"

    def __str__(self) -> str:
        return self.to_string()

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.const(other)
        raise TypeError(f"cannot combine SparsePoly with {type(other).__name__}")

    def __add__(self, other) -> "SparsePoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            small, big = self._terms, other._terms
        else:
            small, big = other._terms, self._terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return SparsePoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SparsePoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return SparsePoly._raw({})
            return SparsePoly._raw({e: _norm(c * other) for e, c in self._terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return SparsePoly._raw({})
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exp, Scalar] = {}
        get = out.get
        for e2, c2 in b.items():
            f0, f1, f2, f3 = e2
            for e1, c1 in a.items():
                e = (e1[0] + f0, e1[1] + f1, e1[2] + f2, e1[3] + f3)
                out[e] = get(e, 0) + c1 * c2
        return SparsePoly._raw({e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SparsePoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of polynomial by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                return SparsePoly({tuple(p * k for p in e): Fraction(1) / Fraction(c) ** -k})
            raise ValueError("negative power of a non-monomial")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structure --------------------------------------------------------

    def degree(self, name: str) -> int:
        """Largest exponent of ``name``; -1 for the zero polynomial."""
        k = _INDEX[name]
        return max((e[k] for e in self._terms), default=-1)

    def low_degree(self, name: str) -> int:
        k = _INDEX[name]
        return min((e[k] for e in self._terms), default=0)

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXP for e in self._terms)

    def constant_value(self) -> Scalar:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(_ZERO_EXP, 0)

    def involves(self, name: str) -> bool:
        k = _INDEX[name]
        return any(e[k] for e in self._terms)

    def coefficients(self) -> Iterator[Scalar]:
        return iter(self._terms.values())

    def by_power(self, name: str) -> Dict[int, "SparsePoly"]:
        """Split as ``sum_k c_k * name^k``; returns ``{k: c_k}``."""
        k = _INDEX[name]
        groups: Dict[int, Dict[Exp, Scalar]] = {}
        for e, c in self._terms.items():
            rest = list(e)
            rest[k] = 0
            groups.setdefault(e[k], {})[tuple(rest)] = c
        return {p: SparsePoly._raw(t) for p, t in groups.items()}

    def coeff(self, name: str, power: int) -> "SparsePoly":
        return self.by_power(name).get(power, ZERO)

    def shift(self, name: str, power: int) -> "SparsePoly":
        """Multiply by ``name**power`` (``power`` may be negative)."""
        if power == 0:
            return self
        k = _INDEX[name]
        out = {}
        for e, c in self._terms.items():
            f = list(e)
            f[k] += power
            out[tuple(f)] = c
        return SparsePoly._raw(out)

    def evaluate(self, name: str, value: Scalar) -> "SparsePoly":
        """Substitute a number for one marker."""
        k = _INDEX[name]
        out: Dict[Exp, Scalar] = {}
        for e, c in self._terms.items():
            f = list(e)
            p = f[k]
            f[k] = 0
            f = tuple(f)
            if p >= 0:
                w = value ** p
            else:
                w = Fraction(1) / Fraction(value) ** -p
            out[f] = out.get(f, 0) + c * w
        return SparsePoly(out)

    def subs(self, name: str, poly: "SparsePoly") -> "SparsePoly":
        """Substitute a polynomial for one marker (nonnegative exponents only)."""
        poly = self._coerce(poly)
        parts = self.by_power(name)
        if any(p < 0 for p in parts):
            raise ValueError("cannot substitute into a negative power")
        result = ZERO
        cache = {0: ONE}
        for p in sorted(parts):
            if p not in cache:
                cache[p] = poly ** p
            result = result + parts[p] * cache[p]
        return result

    def divide_linear(self, name: str, root: Scalar = 1) -> "SparsePoly":
        """Exact quotient by ``(name - root)``.

        Raises ``ArithmeticError`` when the remainder is nonzero.  Negative
        powers of ``name`` are handled by shifting into polynomial range
        first and shifting back afterwards.
        """
        if not self._terms:
            return ZERO
        low = self.low_degree(name)
        num = self.shift(name, -low) if low < 0 else self
        parts = num.by_power(name)
        top = max(parts)
        quotient: Dict[int, SparsePoly] = {}
        carry = ZERO
        for p in range(top, 0, -1):
            carry = parts.get(p, ZERO) + carry * root
            if carry:
                quotient[p - 1] = carry
        remainder = parts.get(0, ZERO) + carry * root
        if remainder:
            raise ArithmeticError(
                f"nonzero remainder {remainder} dividing by ({name} - {root})")
        out = ZERO
        for p, c in quotient.items():
            out = out + c.shift(name, p)
        return out.shift(name, low) if low < 0 else out

    def divide_by_marker(self, name: str, power: int = 1) -> "SparsePoly":
        """Exact quotient by ``name**power``; every term must be divisible."""
        k = _INDEX[name]
        if any(e[k] < power for e in self._terms):
            raise ArithmeticError(f"{self} is not divisible by {name}^{power}")
        return self.shift(name, -power)

    # -- output -----------------------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda item: item[0], reverse=True)

    def to_string(self) -> str:
        """Canonical form: terms in descending lexicographic exponent order."""
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "".join(
                name if p == 1 else f"{name}^{p}" if p >= 0 else f"{name}^({p})"
                for name, p in zip(MARKERS, e) if p)
            c = Fraction(c)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif c.denominator == 1:
                body = f"{mag.numerator}{mono}"
            else:
                body = f"{mag.numerator}/{mag.denominator}{mono}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += sign + body
        return out

    def to_json(self) -> list:
        return [[list(e), format_rational(c)] for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list) -> "SparsePoly":
        return cls({tuple(e): Fraction(c) for e, c in data})


ZERO = SparsePoly._raw({})
ONE = SparsePoly._raw({_ZERO_EXP: 1})
X = SparsePoly.var("x")
Q = SparsePoly.var("q")
Z = SparsePoly.var("z")
U = SparsePoly.var("u")


def delta(p: SparsePoly) -> SparsePoly:
    """Divided difference ``(p - p(x=1)) / (x - 1)``."""
    return (p - p.evaluate("x", 1)).divide_linear("x", 1)


def delta_q(p: SparsePoly) -> SparsePoly:
    """q-divided difference ``(p(xq) - p(x=1)) / (xq - 1)``.

    ``p(1)`` is the value at ``x = 1`` with ``q`` untouched.
    """
    parts = p.by_power("x")
    num = ZERO
    for k, c in parts.items():
        if k < 0:
            raise ValueError("delta_q needs nonnegative powers of x")
        num = num + c * SparsePoly.monomial(x=k, q=k)
    num = num - p.evaluate("x", 1)
    return _divide_xq_minus_one(num)


def _divide_xq_minus_one(num: SparsePoly) -> SparsePoly:
    # (q x - 1) * sum b_k x^k = sum a_k x^k  =>  b_{k-1} = (a_k + b_k) / q
    if not num:
        return ZERO
    parts = num.by_power("x")
    top = max(parts)
    quotient = ZERO
    b = ZERO
    for k in range(top, 0, -1):
        b = (parts.get(k, ZERO) + b).divide_by_marker("q")
        quotient = quotient + b.shift("x", k - 1)
    if parts.get(0, ZERO) + b:
        raise ArithmeticError("nonzero remainder dividing by (xq - 1)")
    return quotient
