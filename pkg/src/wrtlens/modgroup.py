"""SL(2,Z) words, continued fractions and chain-link linking data.

A continued fraction ``(m_1, ..., m_t)`` stands for the word
``T^{m_t} S ... T^{m_1} S`` with ``S = (0 -1; 1 0)`` and ``T = (1 1; 0 1)``.
Entries are listed with ``m_1`` first, i.e. in the order the factors act.

    >>> cf_to_matrix((2, 3))
    SL2Matrix(a=5, b=-3, c=2, d=-1)
    >>> cf_expand(5, 2).entries
    (2, 3)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError


@dataclass(frozen=True)
class SL2Matrix:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"determinant of {self.as_tuple()} is not 1")

    def __matmul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(self.a * other.a + self.b * other.c,
                         self.a * other.b + self.b * other.d,
                         self.c * other.a + self.d * other.c,
                         self.c * other.b + self.d * other.d)

    def __neg__(self) -> "SL2Matrix":
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


S_MATRIX = SL2Matrix(0, -1, 1, 0)
IDENTITY = SL2Matrix(1, 0, 0, 1)


def t_power(m: int) -> SL2Matrix:
    return SL2Matrix(1, m, 0, 1)


@dataclass(frozen=True)
class ContinuedFraction:
    entries: tuple[int, ...]
    convergents: tuple[tuple[int, int, int, int], ...]

    @classmethod
    def of(cls, entries: Sequence[int]) -> "ContinuedFraction":
        entries = tuple(int(m) for m in entries)
        if not entries:
            raise DomainError("a continued fraction needs at least one entry")
        a, b, c, d = 1, 0, 0, 1
        conv = [(a, b, c, d)]
        for m in entries:
            # b uses the previous b, not a; checked against direct products in the tests
            a, b, c, d = m * a - c, m * b - d, a, b
            conv.append((a, b, c, d))
        return cls(entries, tuple(conv))

    @property
    def t(self) -> int:
        return len(self.entries)

    @property
    def matrix(self) -> SL2Matrix:
        return SL2Matrix(*self.convergents[-1])

    def value(self) -> Fraction:
        """Nested fraction ``m_t - 1/(m_{t-1} - 1/(... - 1/m_1))``."""
        acc = None
        for m in self.entries:
            if acc is None:
                acc = Fraction(m)
            elif acc == 0:
                raise ZeroDivisionError("nested fraction passes through zero")
            else:
                acc = m - 1 / acc
        return acc

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "(" + ", ".join(map(str, self.entries)) + ")"


def as_cf(C) -> ContinuedFraction:
    return C if isinstance(C, ContinuedFraction) else ContinuedFraction.of(C)


def cf_to_matrix(C) -> SL2Matrix:
    return as_cf(C).matrix


def word_product(C) -> SL2Matrix:
    """The same product as :func:`cf_to_matrix`, by explicit 2x2 multiplication."""
    M = IDENTITY
    for m in as_cf(C).entries:
        M = t_power(m) @ S_MATRIX @ M
    return M


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _expand_tail(x: Fraction, rounding) -> list[int]:
    # x = m - 1/x', so x' = 1/(m - x); returns outermost entry first
    out = []
    while True:
        m = rounding(x)
        out.append(m)
        if m == x:
            return out
        x = 1 / (m - x)


def cf_expand(num: int, den: int) -> ContinuedFraction:
    """Normal-form continued fraction of ``num/den``.

    Values above 1 use entries >= 2, values below -1 use entries <= -2, and
    values in (-1, 1) get a trailing zero followed by the expansion of
    ``-1/value``.
    """
    if den == 0:
        raise DomainError("denominator must be nonzero")
    x = Fraction(num, den)
    if abs(x) == 1:
        raise DomainError("no normal-form continued fraction for |value| = 1")
    if x == 0:
        return ContinuedFraction.of((0,))
    if x > 1:
        outer = _expand_tail(x, _ceil)
    elif x < -1:
        outer = _expand_tail(x, _floor)
    else:
        inner = -1 / x
        outer = [0] + _expand_tail(inner, _ceil if inner > 1 else _floor)
    return ContinuedFraction.of(reversed(outer))


def cf_for_lens(p: int, q: int) -> tuple[ContinuedFraction, SL2Matrix]:
    """Gluing word for L(p,q) with ``0 < -q < p``; ``(1, 0)`` gives ``S``."""
    if (p, q) == (1, 0):
        C = ContinuedFraction.of((0,))
        return C, C.matrix
    if not (0 < -q < p) or math.gcd(p, q) != 1:
        raise DomainError(f"lens parameters need 0 < -q < p and gcd(p,q) = 1, got ({p}, {q})")
    chain = cf_expand(p, -q).entries
    C = ContinuedFraction.of(chain + (0,))
    U = C.matrix
    assert U.a == q and U.c == p
    return C, U


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _poly_sign(coeffs: list[int], eps_sign: int) -> int:
    # sign of a polynomial in eps at eps -> 0 with the given sign of eps
    for k, c in enumerate(coeffs):
        if c:
            return _sign(c) * (eps_sign ** k)
    return 0


def _poly_mul_linear(poly: list[int], m: int) -> list[int]:
    # (m + eps) * poly
    out = [m * c for c in poly] + [0]
    for k, c in enumerate(poly):
        out[k + 1] += c
    return out


def tridiagonal_signature(diag: Sequence[int]) -> int:
    """Signature of the tridiagonal matrix with unit off-diagonals.

    Leading principal minors of ``W + eps*I`` are tracked as polynomials in
    ``eps``; sign changes count negative eigenvalues.  Averaging the two sides
    ``eps -> 0+`` and ``eps -> 0-`` removes the kernel from both counts.
    """
    n = len(diag)
    if n == 0:
        return 0
    prev, cur = [0], [1]
    minors = [cur]
    for m in diag:
        nxt = _poly_mul_linear(cur, m)
        for k, c in enumerate(prev):
            nxt[k] -= c
        prev, cur = cur, nxt
        minors.append(cur)
    sig = 0
    for eps_sign in (1, -1):
        signs = [_poly_sign(mn, eps_sign) for mn in minors]
        neg = sum(1 for s0, s1 in zip(signs, signs[1:]) if s0 != s1)
        sig += n - 2 * neg
    return sig // 2


@dataclass(frozen=True)
class LinkingData:
    matrix: tuple[tuple[int, ...], ...]
    trace: int
    signature: int
    weight: int


def linking_data(C) -> LinkingData:
    C = as_cf(C)
    chain = C.entries[:-1]
    n = len(chain)
    W = tuple(tuple(chain[i] if i == j else (1 if abs(i - j) == 1 else 0)
                    for j in range(n)) for i in range(n))
    cs = [conv[2] for conv in C.convergents[1:]]
    weight = sum(_sign(cs[i - 1] * cs[i]) for i in range(1, len(cs)))
    return LinkingData(W, sum(chain), tridiagonal_signature(chain), weight)
