import cmath
import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wrtlens.cyclo import (ComplexApprox, CyclotomicNumber, ExactBackend, NumericBackend, arith,
                           cyclotomic_coeffs, e_frac, embed, sqrt_exact)
from wrtlens.errors import DomainError


def test_e_frac_examples():
    assert e_frac(0, 1) == 1
    assert e_frac(1, 2) == -1
    z = e_frac(1, 8)
    assert embed(z).close_to(cmath.exp(1j * math.pi / 4), 1e-12)
    assert e_frac(13, 8) == e_frac(5, 8)
    assert e_frac(-1, 8) == e_frac(7, 8)


def test_e_frac_minimal_conductor():
    assert e_frac(2, 8).conductor == 4
    assert e_frac(0, 12).conductor == 1
    assert 20 % e_frac(6, 20).conductor == 0


def test_e_frac_rejects_zero_denominator():
    with pytest.raises(DomainError):
        e_frac(1, 0)


def test_arith_examples():
    i = e_frac(1, 4)
    assert arith("mul", i, i) == -1
    assert arith("add", e_frac(1, 3), e_frac(2, 3)) == -1
    assert arith("conj", e_frac(1, 5)) == e_frac(4, 5)
    assert arith("neg", i) == e_frac(3, 4)
    assert arith("scalar_mul", i, Fraction(1, 2)) * 2 == i
    with pytest.raises(DomainError):
        arith("pow", i)


def test_sqrt_examples():
    assert sqrt_exact(1) == 1
    assert sqrt_exact(4) == 2
    gauss = CyclotomicNumber.root_sum(((1, k * k) for k in range(5)), 5)
    assert sqrt_exact(5) == gauss
    assert embed(sqrt_exact(5)).close_to(math.sqrt(5), 1e-12)


@pytest.mark.parametrize("n", range(1, 101))
def test_sqrt_squares_exactly(n):
    s = sqrt_exact(n)
    assert s * s == n
    z = complex(s)
    assert abs(z.imag) < 1e-9 and z.real > 0


def test_cyclotomic_polynomial_vanishes_at_root():
    for n in range(1, 201):
        poly = cyclotomic_coeffs(n)
        value = CyclotomicNumber.root_sum(((c, k) for k, c in enumerate(poly)), n)
        assert value.is_zero(), n


def test_promotion_and_equality():
    x = e_frac(1, 3) + e_frac(1, 4)
    y = x.promote(24)
    assert y.conductor == 24 and x == y
    with pytest.raises(DomainError):
        x.promote(10)


def test_json_round_trip():
    x = sqrt_exact(13) * e_frac(3, 52) + Fraction(2, 7)
    data = json.loads(json.dumps(x.to_json()))
    assert set(data) == {"conductor", "coeffs"}
    assert CyclotomicNumber.from_json(data) == x


def test_invalid_vectors_rejected():
    with pytest.raises(DomainError):
        CyclotomicNumber(5, (Fraction(1),))
    with pytest.raises(DomainError):
        ComplexApprox(float("nan"), 0.0)


def test_backends_agree_on_root_sums():
    terms = [(1, 3), (Fraction(-1, 2), 7), (2, -5)]
    exact = ExactBackend().root_sum(terms, 12)
    numeric = NumericBackend().root_sum(terms, 12)
    assert abs(complex(exact) - numeric) < 1e-12
    assert abs(complex(ExactBackend().root_sum(terms, -12)) - NumericBackend().root_sum(terms, -12)) < 1e-12


conductors = st.sampled_from([1, 3, 4, 5, 8, 9, 12, 15, 20, 24, 28, 40, 52])


@st.composite
def cyclotomic_values(draw):
    n = draw(conductors)
    terms = draw(st.lists(st.tuples(st.builds(Fraction, st.integers(-20, 20), st.integers(1, 5)),
                                    st.integers(-100, 100)), max_size=6))
    return CyclotomicNumber.root_sum(terms, n)


@settings(max_examples=60, deadline=None)
@given(cyclotomic_values(), cyclotomic_values())
def test_embedding_is_a_ring_homomorphism(x, y):
    assert embed(x + y).close_to(complex(x) + complex(y), 1e-10)
    assert embed(x * y).close_to(complex(x) * complex(y), 1e-9)
    assert embed(-x).close_to(-complex(x), 1e-12)


@settings(max_examples=60, deadline=None)
@given(cyclotomic_values(), cyclotomic_values())
def test_equality_matches_embedding(x, y):
    assert (x == y) == (abs(complex(x) - complex(y)) < 1e-10)
    assert x - x == 0


@settings(max_examples=60, deadline=None)
@given(cyclotomic_values())
def test_conjugation(x):
    assert x.conj().conj() == x
    assert embed(x.conj()).close_to(complex(x).conjugate(), 1e-10)
