"""Dedekind sums, the Rademacher phi function and Gauss-sum reciprocity."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .modgroup import SL2Matrix, as_cf


def sawtooth(x: Fraction) -> Fraction:
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def dedekind_sum(q: int, p: int) -> Fraction:
    """``s(q,p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p))``.

    >>> dedekind_sum(1, 3)
    Fraction(1, 18)
    """
    if p < 1:
        raise DomainError(f"Dedekind sum needs p >= 1, got {p}")
    s = sum((sawtooth(Fraction(k, p)) * sawtooth(Fraction(k * q, p)) for k in range(1, p)),
            Fraction(0))
    assert (6 * p * s).denominator == 1
    return s


def rademacher_phi(U: SL2Matrix) -> Fraction:
    a, b, c, d = U.as_tuple()
    if c == 0:
        raise DomainError("Rademacher phi is only defined here for c != 0")
    sign = 1 if c > 0 else -1
    return Fraction(a + d, c) - 12 * sign * dedekind_sum(d, abs(c))


def rademacher_phi_int(U: SL2Matrix) -> int:
    value = rademacher_phi(U)
    if value.denominator != 1:
        raise DomainError(f"Rademacher phi of {U.as_tuple()} is not an integer: {value}")
    return value.numerator


def rademacher_phi_cf(C) -> int:
    """``-3(t-1) + (m_1 + ... + m_{t-1})`` for a lens-space word ending in 0."""
    C = as_cf(C)
    chain = C.entries[:-1]
    return -3 * len(chain) + sum(chain)


@dataclass(frozen=True)
class ReciprocityInstance:
    n: int
    m: int
    psi: Fraction

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise DomainError("reciprocity needs n, m >= 1")
        if (self.n * self.m) % 2:
            raise DomainError("reciprocity needs n*m even")
        if (self.n * Fraction(self.psi)).denominator != 1:
            raise DomainError("reciprocity needs n*psi integral")


def _e(x: Fraction) -> complex:
    x = Fraction(x)
    return cmath.exp(2j * math.pi * ((x.numerator % x.denominator) / x.denominator))


def gauss_reciprocity(inst: ReciprocityInstance) -> tuple[complex, complex]:
    """Both sides of the quadratic reciprocity law, by direct summation.

    lhs = sum_{l mod n} e(m l^2 / 2n) e(psi l)
    rhs = sqrt(i n / m) sum_{l mod m} e(-n (l + psi)^2 / 2m)
    """
    n, m, psi = inst.n, inst.m, Fraction(inst.psi)
    lhs = sum(_e(Fraction(m * l * l, 2 * n) + psi * l) for l in range(n))
    rhs = cmath.sqrt(1j * n / m) * sum(_e(-n * (l + psi) ** 2 / (2 * m)) for l in range(m))
    return lhs, rhs
