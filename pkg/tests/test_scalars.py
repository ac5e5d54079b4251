from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eulertwist.errors import InversionOfNoninvertible
from eulertwist.scalars import (QQ, Extension, Mat, QPoly, det, field_arith, field_from_json,
                                mat_inverse, mat_nullspace, mat_rank, mat_rref, parse_rational,
                                quadratic_field)

small = st.integers(-4, 4)


def test_inverse_of_two_thirds():
    assert field_arith(Fraction(2, 3), None, "inv", QQ) == Fraction(3, 2)


def test_inverse_of_sqrt2():
    K = quadratic_field(2)
    x = K.gen()
    inv = field_arith(x, None, "inv", K)
    assert inv == K.element([0, Fraction(1, 2)])
    # oracle: x * (x/2) = x^2/2 = 1 modulo x^2 - 2
    assert x * inv == K.one()


def test_add_in_q_sqrt3():
    K = quadratic_field(3)
    x = K.gen()
    assert field_arith(x, K.one() - x, "add", K) == K.one()


def test_zero_divisor_inversion_raises():
    K = Extension([-1, 0, 1])          # x^2 - 1 is reducible
    with pytest.raises(InversionOfNoninvertible):
        K.inv(K.element([1, 1]))


def test_rational_literals():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational(7) == 7
    with pytest.raises(ValueError):
        parse_rational("1.5")
    with pytest.raises(ValueError):
        parse_rational(True)


def test_field_from_json():
    assert field_from_json(None) == QQ
    assert field_from_json({"kind": "quadratic", "d": 5}) == quadratic_field(5)
    assert field_from_json({"kind": "extension", "modulus": ["-2", "0", "1"]}) == quadratic_field(2)


def test_rref_examples():
    I3 = Mat.identity(3)
    R, piv = mat_rref(I3)
    assert R == I3 and piv == [0, 1, 2]
    R, piv = mat_rref(Mat.from_rows([[2], [4]]))
    assert R == Mat.from_rows([[1], [2]]) and piv == [0]


def test_rank_and_nullspace_examples():
    ones = Mat.from_rows([[1, 1], [1, 1]])
    assert mat_rank(ones) == 1
    assert mat_nullspace(Mat.zeros(2, 3)).cols == 3


def test_unitriangular_inverse_over_extension():
    K = quadratic_field(2)
    rho = K.gen()
    M = Mat.from_rows([[1, rho], [0, 1]], K)
    assert mat_inverse(M) == Mat.from_rows([[1, -rho], [0, 1]], K)


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=4))


@given(matrices)
def test_rank_nullity(rows):
    M = Mat.from_rows(rows, QQ)
    N = mat_nullspace(M)
    assert mat_rank(M) + N.cols == M.cols
    assert (M @ N).is_zero() if N.cols else True


@given(matrices)
def test_rref_idempotent(rows):
    R, piv = mat_rref(Mat.from_rows(rows, QQ))
    R2, piv2 = mat_rref(R)
    assert R2 == R and piv2 == piv


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse_is_exact(rows):
    M = Mat.from_rows(rows, QQ)
    if det(M) != 0:
        assert M @ mat_inverse(M) == Mat.identity(M.rows)


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=2).filter(any))
def test_irreducible_extension_inverts(coeffs):
    K = quadratic_field(2)       # x^2 - 2 is irreducible over Q
    a = K.element(coeffs)
    assert a * K.inv(a) == K.one()


def test_qpoly_degree_convention():
    assert QPoly().degree == -1
    assert QPoly((1, 0, 3)).degree == 2
