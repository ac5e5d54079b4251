from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eulertwist.continuants import euler_poly
from eulertwist.errors import AmbientMismatch, ShapeMismatch, UnspecializedParameter
from eulertwist.freealg import NCPoly, nc_add, nc_eval, nc_mul, specialize_q
from eulertwist.scalars import Mat, QPoly, quadratic_field

AMB = 3


def x(i, n=AMB):
    return NCPoly.gen(i, n)


def test_monomial_product():
    p = nc_mul(x(1), x(2))
    assert list(p.terms) == [(1, 2)] and p.coefficient((1, 2)) == QPoly.constant(1)


def test_unit_law_and_distributivity():
    e2 = x(1) * x(2) - 1
    assert e2 * NCPoly.one(AMB) == e2
    assert (x(1) + x(3)) * x(2) == x(1) * x(2) + x(3) * x(2)


def test_specialize_e2():
    assert specialize_q(euler_poly(2), -1).to_text() == "x1*x2 - 1"


def test_specialize_leaves_q_free_alone_and_kills_q_terms():
    p = x(1) * x(2) + 3
    assert specialize_q(p, 5) == p
    assert specialize_q(NCPoly.q(AMB) * x(1), 0).is_zero()


def test_eval_examples():
    K = quadratic_field(2)
    one = Mat.from_rows([[1]])
    assert nc_eval(specialize_q(euler_poly(2), -1), [one, one], (1, 1)).is_zero()
    r = Mat.from_rows([[K.gen()]], K)
    assert nc_eval(specialize_q(euler_poly(3), -1), [r, r, r], (1, 1)).is_zero()
    M = Mat.from_rows([[1, 2, 3], [4, 5, 6]])
    assert nc_eval(x(1, 1), [M]) == M


def test_eval_errors():
    M = Mat.from_rows([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ShapeMismatch):
        nc_eval(x(1, 2) * x(2, 2), [M, M])
    with pytest.raises(UnspecializedParameter):
        nc_eval(euler_poly(2), [Mat.identity(1), Mat.identity(1)], (1, 1))
    with pytest.raises(AmbientMismatch):
        x(1, 2) + x(1, 3)


def test_text_round_trip():
    p = x(1) * x(2) * x(3) - x(1) - x(3)
    assert p.to_text() == "x1*x2*x3 - x1 - x3"
    assert NCPoly.from_text(p.to_text(), AMB) == p
    assert NCPoly.from_json(p.to_json()) == p


def test_word_order_is_length_then_lex():
    p = x(3) + x(1) * x(2) + x(2) + 1
    assert list(p.to_json()["terms"][i]["word"] for i in range(4)) == [[], [2], [3], [1, 2]]


words = st.lists(st.integers(1, AMB), max_size=3)
polys = st.lists(st.tuples(words, st.integers(-3, 3), st.integers(0, 2)), max_size=4).map(
    lambda ts: sum((NCPoly.monomial(w, AMB, QPoly.monomial(k, c)) for w, c, k in ts), NCPoly.zero(AMB)))


@given(polys, polys)
def test_canonical_form_is_order_independent(p, q):
    assert (p + q).to_json() == (q + p).to_json()
    assert nc_add(p, q) == p + q


@given(polys, polys, st.integers(-2, 2))
def test_specialize_is_a_ring_map(p, q, q0):
    assert specialize_q(p + q, q0) == specialize_q(p, q0) + specialize_q(q, q0)
    assert specialize_q(p * q, q0) == specialize_q(p, q0) * specialize_q(q, q0)


square = st.lists(st.integers(-2, 2), min_size=4, max_size=4).map(
    lambda v: Mat.from_rows([v[:2], v[2:]]))


@given(polys, polys, st.lists(square, min_size=AMB, max_size=AMB))
def test_eval_is_multiplicative(p, q, mats):
    p, q = specialize_q(p, -1), specialize_q(q, -1)
    lhs = nc_eval(p * q, mats, (2, 2))
    assert lhs == nc_eval(p, mats, (2, 2)) @ nc_eval(q, mats, (2, 2))
