from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupoidal import linalg
from groupoidal.errors import UnsupportedFieldError, ValidationError
from groupoidal.fields import PrimeField, Rationals, parse_field


def matrices(max_entry):
    return st.integers(1, 3).flatmap(
        lambda r: st.integers(1, 3).flatmap(
            lambda c: st.lists(st.lists(st.integers(-max_entry, max_entry), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@settings(max_examples=60, deadline=None)
@given(matrices(4))
def test_nullspace_over_gf5_matches_enumeration(rows):
    F = PrimeField(5)
    A = F.array(rows)
    n = A.shape[1]
    kernel = [v for v in product(range(5), repeat=n) if not np.any(F.matmul(A, F.array(v).reshape(n, 1)))]
    N = linalg.nullspace(F, A)
    assert 5 ** N.shape[1] == len(kernel)
    assert not np.any(F.matmul(A, N))
    assert linalg.rank(F, A) + N.shape[1] == n


@settings(max_examples=60, deadline=None)
@given(matrices(6), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_solve_over_q(rows, x):
    Q = Rationals()
    A = Q.array(rows)
    x = Q.array(x[: A.shape[1]])
    b = Q.matmul(A, x.reshape(-1, 1)).ravel()
    y = linalg.solve(Q, A, b)
    assert y is not None
    assert np.all(Q.matmul(A, y.reshape(-1, 1)).ravel() == b)


def test_inconsistent_system():
    Q = Rationals()
    assert linalg.solve(Q, Q.array([[1, 1], [1, 1]]), Q.array([1, 2])) is None


def test_inverse_and_singular():
    Q = Rationals()
    A = Q.array([[2, 1], [1, 1]])
    assert np.all(Q.matmul(A, linalg.inverse(Q, A)) == Q.eye(2))
    with pytest.raises(ZeroDivisionError):
        linalg.inverse(Q, Q.array([[1, 2], [2, 4]]))


def test_field_parsing():
    assert parse_field("q") == Rationals()
    assert parse_field("gf:7") == PrimeField(7)
    with pytest.raises(ValidationError):
        parse_field("gf:8")
    with pytest.raises(ValidationError):
        parse_field("r")


def test_prime_field_scalars():
    F = PrimeField(7)
    assert F.scalar(Fraction(1, 2)) == 4
    with pytest.raises(ValidationError):
        F.scalar(Fraction(1, 7))
    assert pow(F.root_of_unity(3), 3, 7) == 1 and F.root_of_unity(3) != 1
    with pytest.raises(UnsupportedFieldError):
        F.root_of_unity(4)
    with pytest.raises(UnsupportedFieldError):
        Rationals().root_of_unity(3)


def test_large_prime_uses_exact_products():
    F = PrimeField(1000003)
    A = F.array([[1000002, 1000002], [5, 7]])
    assert linalg.rank(F, A) == 2
    assert F.matmul(A, A)[0, 0] == (1000002 * 1000002 + 1000002 * 5) % 1000003
