"""Exact arithmetic in cyclotomic fields and a floating-point counterpart.

A :class:`CyclotomicNumber` is a rational coefficient vector in the power
basis ``1, z, ..., z^(phi(N)-1)`` of ``Q(z)``, ``z = exp(2*pi*i/N)``.  Vectors
are always reduced modulo the ``N``-th cyclotomic polynomial, so two numbers
with the same conductor are equal exactly when their coefficients are.

Example::

    >>> i = e_frac(1, 4)
    >>> i * i == CyclotomicNumber.from_rational(-1)
    True
    >>> sqrt_exact(5) * sqrt_exact(5) == 5
    True
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from sympy import cyclotomic_poly, factorint, totient
from sympy.abc import x as _x

from .errors import DomainError

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise DomainError(f"cyclotomic polynomial needs n >= 1, got {n}")
    return tuple(int(c) for c in reversed(cyclotomic_poly(n, _x, polys=True).all_coeffs()))


@lru_cache(maxsize=None)
def _phi_tail(n: int) -> tuple[tuple[int, int], ...]:
    # nonzero lower coefficients of Phi_n; the leading one is 1
    poly = cyclotomic_coeffs(n)
    return tuple((k, c) for k, c in enumerate(poly[:-1]) if c)


def _reduce(vec: list[int], n: int) -> list[int]:
    """Reduce an integer polynomial modulo Phi_n in place."""
    deg = int(totient(n))
    tail = _phi_tail(n)
    for top in range(len(vec) - 1, deg - 1, -1):
        c = vec[top]
        if c:
            vec[top] = 0
            base = top - deg
            for k, pk in tail:
                vec[base + k] -= c * pk
    del vec[deg:]
    vec.extend([0] * (deg - len(vec)))
    return vec


def _common_denominator(coeffs: Iterable[Fraction]) -> int:
    den = 1
    for c in coeffs:
        den = math.lcm(den, c.denominator)
    return den


def _from_scaled(vec: list[int], den: int, n: int) -> "CyclotomicNumber":
    return CyclotomicNumber(n, tuple(Fraction(v, den) for v in _reduce(vec, n)))


@dataclass(frozen=True, eq=False)
class CyclotomicNumber:
    conductor: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.conductor < 1:
            raise DomainError(f"conductor must be positive, got {self.conductor}")
        if len(self.coeffs) != totient(self.conductor):
            raise DomainError("coefficient vector length must equal phi(conductor)")

    # construction

    @classmethod
    def from_rational(cls, value: Rational, conductor: int = 1) -> "CyclotomicNumber":
        deg = int(totient(conductor))
        return cls(conductor, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def root_sum(cls, terms: Iterable[tuple[Rational, int]], n: int) -> "CyclotomicNumber":
        """Sum of ``c * z_n^k`` over ``(c, k)`` pairs, reduced once at the end."""
        if n < 1:
            raise DomainError(f"root of unity order must be positive, got {n}")
        counts: dict[int, Fraction] = {}
        for c, k in terms:
            k %= n
            counts[k] = counts.get(k, 0) + Fraction(c)
        den = _common_denominator(counts.values())
        vec = [0] * n
        for k, c in counts.items():
            vec[k] += c.numerator * (den // c.denominator)
        return _from_scaled(vec, den, n)

    def promote(self, n: int) -> "CyclotomicNumber":
        """Rewrite in Q(z_n); the current conductor must divide n."""
        if n % self.conductor:
            raise DomainError(f"conductor {self.conductor} does not divide {n}")
        if n == self.conductor:
            return self
        step = n // self.conductor
        return CyclotomicNumber.root_sum(
            ((c, k * step) for k, c in enumerate(self.coeffs) if c), n)

    def _aligned(self, other: "CyclotomicNumber"):
        n = math.lcm(self.conductor, other.conductor)
        return self.promote(n), other.promote(n), n

    @staticmethod
    def _coerce(value) -> "CyclotomicNumber":
        if isinstance(value, CyclotomicNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return CyclotomicNumber.from_rational(value)
        return NotImplemented

    # field operations

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, n = self._aligned(other)
        return CyclotomicNumber(n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value: Rational) -> "CyclotomicNumber":
        value = Fraction(value)
        return CyclotomicNumber(self.conductor, tuple(c * value for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, n = self._aligned(other)
        da, db = _common_denominator(a.coeffs), _common_denominator(b.coeffs)
        va = [(c.numerator * (da // c.denominator), k) for k, c in enumerate(a.coeffs) if c]
        vb = [(c.numerator * (db // c.denominator), k) for k, c in enumerate(b.coeffs) if c]
        deg = len(a.coeffs)
        prod = [0] * max(2 * deg - 1, 1)
        for x, i in va:
            for y, j in vb:
                prod[i + j] += x * y
        return _from_scaled(prod, da * db, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only rational divisors; roots of unity are inverted with conj()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers are not supported; use conj() for roots of unity")
        result = CyclotomicNumber.from_rational(1, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "CyclotomicNumber":
        n = self.conductor
        return CyclotomicNumber.root_sum(((c, -k) for k, c in enumerate(self.coeffs) if c), n)

    def conjugate(self) -> "CyclotomicNumber":
        return self.conj()

    # comparison and output

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, _ = self._aligned(other)
        return a.coeffs == b.coeffs

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __complex__(self) -> complex:
        n = self.conductor
        return sum((float(c) * cmath.exp(2j * math.pi * k / n)
                    for k, c in enumerate(self.coeffs) if c), 0j)

    def to_json(self) -> dict:
        return {"conductor": self.conductor,
                "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicNumber":
        return cls(int(data["conductor"]), tuple(Fraction(int(p), int(q)) for p, q in data["coeffs"]))

    def __repr__(self):
        terms = [f"{c}*z^{k}" if k else str(c) for k, c in enumerate(self.coeffs) if c]
        return f"CyclotomicNumber(N={self.conductor}: {' + '.join(terms) or '0'})"


def e_frac(a: int, n: int) -> CyclotomicNumber:
    """``exp(2*pi*i*a/n)`` in the smallest field ``Q(z_m)`` with ``m | n``."""
    if n == 0:
        raise DomainError("e_frac needs a nonzero denominator")
    if n < 0:
        a, n = -a, -n
    a %= n
    g = math.gcd(a, n)
    m = n // g
    return CyclotomicNumber.root_sum([(1, a // g)], m)


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> CyclotomicNumber:
    if p == 2:
        z = e_frac(1, 8)
        return z + z.conj()
    g = CyclotomicNumber.root_sum(((1, k * k) for k in range(p)), p)
    if p % 4 == 1:
        return g
    return g * e_frac(3, 4)


@lru_cache(maxsize=None)
def sqrt_exact(n: int) -> CyclotomicNumber:
    """Positive square root of ``n`` built from quadratic Gauss sums."""
    if n < 1:
        raise DomainError(f"sqrt_exact needs n >= 1, got {n}")
    result = CyclotomicNumber.from_rational(1)
    for p, k in factorint(n).items():
        result = result * (p ** (k // 2))
        if k % 2:
            result = result * _sqrt_prime(p)
    return result


@dataclass(frozen=True)
class ComplexApprox:
    re: float
    im: float
    tolerance: float = 1e-9

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise DomainError("non-finite complex approximation")
        if self.tolerance <= 0:
            raise DomainError("tolerance must be positive")

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def close_to(self, other, tol: float | None = None) -> bool:
        tol = self.tolerance if tol is None else tol
        return abs(self.value - complex(other)) <= tol

    def __complex__(self):
        return self.value


def embed(x: CyclotomicNumber, tolerance: float = 1e-9) -> ComplexApprox:
    z = complex(x)
    return ComplexApprox(z.real, z.imag, tolerance)


def arith(op: str, x: CyclotomicNumber, y=None) -> CyclotomicNumber:
    """Named-operation front end: add, mul, neg, conj, scalar_mul."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "conj":
        return x.conj()
    if op == "scalar_mul":
        return x.scale(y)
    raise DomainError(f"unknown operation {op!r}")


# Value backends.  Formulas elsewhere are written once against this small
# interface and evaluated either exactly or in double precision.

class NumericBackend:
    name = "numeric"

    def __init__(self, tolerance: float = 1e-9):
        self.tolerance = tolerance

    def e(self, a: int, n: int) -> complex:
        if n < 0:
            a, n = -a, -n
        return cmath.exp(2j * math.pi * (a % n) / n)

    def root_sum(self, terms, n: int) -> complex:
        if n < 0:
            terms, n = [(c, -k) for c, k in terms], -n
        return sum((float(c) * self.e(k, n) for c, k in terms), 0j)

    def sqrt(self, n: int) -> complex:
        return complex(math.sqrt(n))

    def rational(self, value: Rational) -> complex:
        return complex(float(value))

    def zero(self) -> complex:
        return 0j

    def one(self) -> complex:
        return 1 + 0j

    def to_complex(self, v) -> complex:
        return complex(v)


class ExactBackend:
    name = "exact"
    tolerance = 0.0

    def e(self, a: int, n: int) -> CyclotomicNumber:
        return e_frac(a, n)

    def root_sum(self, terms, n: int) -> CyclotomicNumber:
        if n < 0:
            terms, n = [(c, -k) for c, k in terms], -n
        return CyclotomicNumber.root_sum(terms, n)

    def sqrt(self, n: int) -> CyclotomicNumber:
        return sqrt_exact(n)

    def rational(self, value: Rational) -> CyclotomicNumber:
        return CyclotomicNumber.from_rational(value)

    def zero(self) -> CyclotomicNumber:
        return CyclotomicNumber.from_rational(0)

    def one(self) -> CyclotomicNumber:
        return CyclotomicNumber.from_rational(1)

    def to_complex(self, v) -> complex:
        return complex(v)


def get_backend(name: str = "numeric", tolerance: float = 1e-9):
    if name == "numeric":
        return NumericBackend(tolerance)
    if name == "exact":
        return ExactBackend()
    raise DomainError(f"unknown backend {name!r}")
