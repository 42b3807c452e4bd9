import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wrtlens.errors import DomainError
from wrtlens.modgroup import (ContinuedFraction, SL2Matrix, cf_expand, cf_for_lens, cf_to_matrix,
                              linking_data, tridiagonal_signature, word_product)


def test_cf_to_matrix_examples():
    assert cf_to_matrix((4,)) == SL2Matrix(4, -1, 1, 0)
    assert cf_to_matrix((0,)) == SL2Matrix(0, -1, 1, 0)
    assert cf_to_matrix((2, 3)) == SL2Matrix(5, -3, 2, -1)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=8))
def test_convergents_match_direct_products(entries):
    C = ContinuedFraction.of(entries)
    for k in range(1, C.t + 1):
        assert SL2Matrix(*C.convergents[k]) == word_product(entries[:k])


def test_determinant_enforced():
    with pytest.raises(DomainError):
        SL2Matrix(1, 1, 1, 1)


def test_cf_expand_examples():
    assert cf_expand(2, 1).entries == (2,)
    assert cf_expand(5, 2).entries == (2, 3)
    assert cf_expand(1, 2).entries == (-2, 0)
    assert cf_expand(0, 3).entries == (0,)
    with pytest.raises(DomainError):
        cf_expand(3, 3)
    with pytest.raises(DomainError):
        cf_expand(-2, 2)
    with pytest.raises(DomainError):
        cf_expand(1, 0)


@given(st.integers(-200, 200), st.integers(-60, 60).filter(bool))
def test_cf_expand_normal_forms(num, den):
    x = Fraction(num, den)
    if abs(x) == 1:
        return
    C = cf_expand(num, den)
    assert C.value() == x
    assert Fraction(C.matrix.a, C.matrix.c) == x if C.matrix.c else True
    body = C.entries
    if x > 1:
        assert all(m >= 2 for m in body)
    elif x < -1:
        assert all(m <= -2 for m in body)
    elif x > 0:
        assert body[-1] == 0 and all(m <= -2 for m in body[:-1])
    elif x < 0:
        assert body[-1] == 0 and all(m >= 2 for m in body[:-1])


def test_cf_for_lens_examples():
    C, U = cf_for_lens(2, -1)
    assert C.entries == (2, 0) and U == SL2Matrix(-1, 0, 2, -1)
    C, U = cf_for_lens(5, -2)
    assert C.entries == (2, 3, 0) and U == SL2Matrix(-2, 1, 5, -3)
    C, U = cf_for_lens(1, 0)
    assert C.entries == (0,) and U == SL2Matrix(0, -1, 1, 0)
    for bad in [(4, -2), (5, 2), (5, -5), (0, 0)]:
        with pytest.raises(DomainError):
            cf_for_lens(*bad)


def test_lens_round_trip():
    for p in range(2, 51):
        for q in range(-p + 1, 0):
            if math.gcd(p, q) == 1:
                C, U = cf_for_lens(p, q)
                assert (U.a, U.c) == (q, p)
                assert all(m >= 2 for m in C.entries[:-1])


def test_telescoping_identity():
    # b_t / a_t = -sum 1/(a_i a_{i-1}) when no a_i vanishes
    for entries in itertools.product(range(2, 6), repeat=3):
        C = ContinuedFraction.of(entries)
        a = [conv[0] for conv in C.convergents]
        rhs = -sum(Fraction(1, a[i] * a[i - 1]) for i in range(1, C.t + 1))
        assert Fraction(C.convergents[-1][1], a[-1]) == rhs


def test_uniqueness_of_expansion():
    seen = {}
    for t in range(1, 6):
        for entries in itertools.product(range(2, 9), repeat=t):
            v = ContinuedFraction.of(entries).value()
            assert v not in seen, (entries, seen.get(v))
            seen[v] = entries


def test_no_value_below_one():
    for t in range(1, 7):
        for entries in itertools.product(range(2, 9), repeat=t):
            if t > 4 and max(entries) > 4:
                continue
            assert ContinuedFraction.of(entries).value() > 1


def test_linking_data_examples():
    ld = linking_data((2, 0))
    assert (ld.trace, ld.signature, ld.weight) == (2, 1, 1)
    ld = linking_data((2, 2, 0))
    assert (ld.trace, ld.signature) == (4, 2)
    assert ld.matrix == ((2, 1), (1, 2))
    ld = linking_data((0,))
    assert (ld.trace, ld.signature, ld.weight) == (0, 0, 0)


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=7))
def test_signature_matches_eigenvalues(diag):
    n = len(diag)
    W = np.diag(np.array(diag, dtype=float)) + np.eye(n, k=1) + np.eye(n, k=-1)
    eig = np.linalg.eigvalsh(W)
    expected = int(np.sum(eig > 1e-9) - np.sum(eig < -1e-9))
    assert tridiagonal_signature(diag) == expected
