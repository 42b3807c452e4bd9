"""The SO(3) representation of SL(2,Z) on the torus space at odd level r.

Labels run over ``1..(r-1)/2``.  The generators are

    S_jl = (e_r(jl) - e_r(-jl)) / (i sqrt r) = (2/sqrt r) sin(2 pi j l / r)
    T_j  = -i e_r(nu j^2),  nu = (r+1)/2,

where ``e_n(x) = exp(2 pi i x / n)``.  ``T_j`` agrees with ``i e_{2r}(j^2)`` on
odd labels and is the unique extension with ``T_j = T_{r-j}``.

The words ``T^{m_t} S ... T^{m_1} S`` multiplied out literally are the oracle.
For ``r = 5 (mod 8)`` this is a linear representation.  For ``r = 1 (mod 8)``
it satisfies ``(ST)^3 = -S^2`` and the word value picks up ``(-1)^(sum m)``
relative to the linear representation obtained by negating ``T``.

Closed forms.  For ``U = (a b; c d)`` with ``c`` odd write ``~j`` for the odd
member of ``{j, r-j}`` and ``s_j = +1`` or ``-1`` accordingly.  Then the linear
representation is ``eps(U) G(U)`` with

    G(U)_jl = s_j s_l / sqrt(r|c|) e_{2rc}(d ~l^2)
              sum_{beta < |c|} e_{2rc}(a g^2) (e_{rc}(g ~l) - e_{rc}(-g ~l)),
    g = ~j + 2 r beta,

    eps(U) = (a | |c|) i^(k Phi(U)) i^(3 + (|c|-1)/2)   (c > 0)
             (a | |c|) i^(k Phi(U)) i^(1 - (|c|-1)/2)   (c < 0)

with ``k = 1`` for ``r = 5 (mod 8)`` and ``k = -1`` for ``r = 1 (mod 8)``,
``(a | |c|)`` the Jacobi symbol.  Even ``c`` is reduced to odd ``c`` through
``R(U) = S R(SU)``, since ``SU`` has lower-left entry ``a``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import isprime, jacobi_symbol

from .cyclo import CyclotomicNumber, ExactBackend, NumericBackend, e_frac, get_backend
from .errors import DegenerateConvergentError, DomainError
from .modgroup import S_MATRIX, SL2Matrix, as_cf
from .numtheory import rademacher_phi_int

Matrix = list


def check_level(r: int) -> None:
    if r < 5 or r % 4 != 1:
        raise DomainError(f"level r must satisfy r = 1 (mod 4) and r >= 5, got {r}")


@dataclass(frozen=True)
class TheoryParams:
    r: int

    def __post_init__(self):
        check_level(self.r)

    @property
    def dim(self) -> int:
        return (self.r - 1) // 2

    @property
    def A(self) -> CyclotomicNumber:
        return e_frac(1, 2 * self.r)

    @property
    def kappa(self) -> CyclotomicNumber:
        # i * A^{-1}
        return e_frac(self.r - 2, 4 * self.r)

    @property
    def zeta(self) -> CyclotomicNumber:
        return e_frac(1, 8)

    @property
    def experimental(self) -> bool:
        return not isprime(self.r)


def word_sign(r: int) -> int:
    """+1 when the literal generators give a linear representation, else -1."""
    return 1 if r % 8 == 5 else -1


def _be(backend):
    if backend is None:
        return NumericBackend()
    if isinstance(backend, str):
        return get_backend(backend)
    return backend


# generator entries, valid for all integer labels

def _s_value(r: int, k: int, be):
    diff = be.root_sum([(1, k), (-1, -k)], r)
    # 1/(i sqrt r) = -i sqrt(r) / r
    return diff * be.e(3, 4) * be.sqrt(r) * be.rational(Fraction(1, r))


@lru_cache(maxsize=None)
def _s_value_cached(r: int, k: int, name: str):
    return _s_value(r, k, get_backend(name))


def s_entry(r: int, j: int, l: int, backend=None):
    be = _be(backend)
    k = (j * l) % r
    if isinstance(be, (NumericBackend, ExactBackend)):
        return _s_value_cached(r, k, be.name)
    return _s_value(r, k, be)


def t_exponent(r: int, j: int) -> int:
    """``T_j = e_{4r}(t_exponent)``."""
    nu = (r + 1) // 2
    return 3 * r + 4 * nu * j * j


def t_entry(r: int, j: int, backend=None, power: int = 1):
    return _be(backend).e(power * t_exponent(r, j), 4 * r)


def naive_t_entry(r: int, j: int, backend=None):
    """``i e_{2r}(j^2)`` on every label, kept for comparison only."""
    return _be(backend).e(r + 2 * j * j, 4 * r)


def rep_generators(r: int, backend=None) -> tuple[Matrix, Matrix]:
    check_level(r)
    be = _be(backend)
    h = (r - 1) // 2
    S = [[s_entry(r, j, l, be) for l in range(1, h + 1)] for j in range(1, h + 1)]
    T = [[t_entry(r, j, be) if j == l else be.zero() for l in range(1, h + 1)]
         for j in range(1, h + 1)]
    return S, T


# small dense matrix helpers

def matmul(X: Matrix, Y: Matrix, be) -> Matrix:
    n, m, k = len(X), len(Y[0]), len(Y)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = be.zero()
            for s in range(k):
                acc = acc + X[i][s] * Y[s][j]
            row.append(acc)
        out.append(row)
    return out


def identity(n: int, be) -> Matrix:
    return [[be.one() if i == j else be.zero() for j in range(n)] for i in range(n)]


def is_scalar(M: Matrix, tol: float = 1e-9):
    """Return the scalar if ``M`` is scalar (within ``tol``), else None."""
    lam = M[0][0]
    for i, row in enumerate(M):
        for j, v in enumerate(row):
            target = lam if i == j else 0
            if isinstance(v, CyclotomicNumber):
                if not (v == target):
                    return None
            elif abs(complex(v) - complex(target)) > tol:
                return None
    return lam


@lru_cache(maxsize=None)
def _generators_cached(r: int, name: str):
    return rep_generators(r, get_backend(name))


def _generators(r: int, be):
    if isinstance(be, (NumericBackend, ExactBackend)):
        return _generators_cached(r, be.name)
    return rep_generators(r, be)


def rep_bruteforce(r: int, C, backend=None) -> Matrix:
    """Literal product ``T^{m_t} S ... T^{m_1} S``; the oracle."""
    check_level(r)
    be = _be(backend)
    C = as_cf(C)
    S, _ = _generators(r, be)
    h = (r - 1) // 2
    M = identity(h, be)
    for m in C.entries:
        M = matmul(S, M, be)
        M = [[t_entry(r, j + 1, be, m) * M[j][l] for l in range(h)] for j in range(h)]
    return M


# closed forms

def _odd_label(r: int, j: int) -> tuple[int, int]:
    j %= r
    return (j, 1) if j % 2 else (r - j, -1)


def epsilon(U: SL2Matrix, r: int) -> tuple[int, int]:
    """Prefactor ``eps(U) = sign * i^k`` for odd ``c``, returned as ``(sign, k)``."""
    a, _, c, _ = U.as_tuple()
    if c % 2 == 0:
        raise DomainError("epsilon is defined for odd c only")
    ac = abs(c)
    k = 1 if r % 8 == 5 else -1
    phi = rademacher_phi_int(U)
    base = 3 + (ac - 1) // 2 if c > 0 else 1 - (ac - 1) // 2
    return int(jacobi_symbol(a % ac, ac)), (k * phi + base) % 4


def _gauss_entry(U: SL2Matrix, r: int, j: int, l: int, be):
    a, _, c, d = U.as_tuple()
    ac = abs(c)
    jo, sj = _odd_label(r, j)
    lo, sl = _odd_label(r, l)
    terms = []
    for beta in range(ac):
        g = jo + 2 * r * beta
        terms.append((1, d * lo * lo + a * g * g + 2 * g * lo))
        terms.append((-1, d * lo * lo + a * g * g - 2 * g * lo))
    total = be.root_sum(terms, 2 * r * c)
    n = r * ac
    return total * be.sqrt(n) * be.rational(Fraction(sj * sl, n))


def _linear_closed_matrix(U: SL2Matrix, r: int, be) -> Matrix:
    a, b, c, d = U.as_tuple()
    h = (r - 1) // 2
    if c == 0:
        raise DomainError("closed form needs c != 0")
    if c % 2:
        sign, k = epsilon(U, r)
        pre = be.e(k + (2 if sign < 0 else 0), 4)
        return [[pre * _gauss_entry(U, r, j, l, be) for l in range(1, h + 1)]
                for j in range(1, h + 1)]
    S, _ = _generators(r, be)
    return matmul(S, _linear_closed_matrix(S_MATRIX @ U, r, be), be)


def _linear_closed_entry(U: SL2Matrix, r: int, j: int, l: int, be):
    c = U.c
    if c == 0:
        raise DomainError("closed form needs c != 0")
    if c % 2:
        sign, k = epsilon(U, r)
        return be.e(k + (2 if sign < 0 else 0), 4) * _gauss_entry(U, r, j, l, be)
    h = (r - 1) // 2
    SU = S_MATRIX @ U
    acc = be.zero()
    for m in range(1, h + 1):
        acc = acc + s_entry(r, j, m, be) * _linear_closed_entry(SU, r, m, l, be)
    return acc


def _word_factor(r: int, C, be):
    parity = sum(as_cf(C).entries) % 2
    return be.rational(word_sign(r) ** parity)


def rep_closed_entry(r: int, C, j: int, l: int, backend=None):
    """Closed-form entry ``(j, l)`` of the word value; matches :func:`rep_bruteforce`."""
    check_level(r)
    be = _be(backend)
    C = as_cf(C)
    return _word_factor(r, C, be) * _linear_closed_entry(C.matrix, r, j, l, be)


def rep_closed_matrix(r: int, C, backend=None) -> Matrix:
    check_level(r)
    be = _be(backend)
    C = as_cf(C)
    w = _word_factor(r, C, be)
    return [[w * v for v in row] for row in _linear_closed_matrix(C.matrix, r, be)]


def im_sum(r: int, C, j_out: int, j_in: int, mode: str = "direct", backend=None):
    """Entry ``(j_out, j_in)`` of ``S T^{m_t} S ... T^{m_1} S``.

    ``direct`` expands the product as a nested sum over intermediate labels.
    ``closed`` evaluates the Gauss-sum closed form of the extended word
    ``C + (0,)``, whose lower-left entry is ``a_t``.
    """
    check_level(r)
    be = _be(backend)
    C = as_cf(C)
    h = (r - 1) // 2
    if mode == "direct":
        S, _ = _generators(r, be)
        powers = [[t_entry(r, j, be, m) for j in range(1, h + 1)] for m in C.entries]
        total = be.zero()
        for labels in itertools.product(range(h), repeat=C.t):
            path = (j_in - 1,) + labels + (j_out - 1,)
            term = be.one()
            for step in range(C.t):
                term = term * S[path[step + 1]][path[step]] * powers[step][path[step + 1]]
            total = total + term * S[path[-1]][path[-2]]
        return total
    if mode == "closed":
        if any(conv[0] == 0 for conv in C.convergents[1:]):
            raise DegenerateConvergentError(f"a partial convergent a_i vanishes for {C}")
        return rep_closed_entry(r, C.entries + (0,), j_out, j_in, be)
    raise DomainError(f"unknown mode {mode!r}")

