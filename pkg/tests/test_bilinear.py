import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from eulertwist.bilinear import (BilinearSpace, Operator, Subspace, adjoint, adjoint_string,
                                 continuant_at, coordinate_change, glue, gluing_operator,
                                 is_isometry, is_nondegenerate, is_sod, iterated_adjoint,
                                 mutation, mutation_matrix_product, orthogonal, orthogonal_chain,
                                 periodicity_criterion, random_instance, random_isometry_instance,
                                 serre)
from eulertwist.bilinear.suites import periodicity_suite, property_suite, w_matrix_suite
from eulertwist.continuants import fibonacci_value
from eulertwist.errors import DegenerateSubspace, Inapplicable
from eulertwist.scalars import QQ, Mat, mat_inverse, quadratic_field


def e(i, n=2):
    return [1 if j == i else 0 for j in range(n)]


def plane(rho, field=QQ):
    return BilinearSpace(Mat.from_rows([[1, rho], [0, 1]], field))


def one_dim(rho, field=QQ):
    A = BilinearSpace.standard(1, field)
    B = BilinearSpace.standard(1, field)
    return A, B, Operator(A, B, Mat(1, 1, [rho], field))


def basis_vectors(n, field):
    return [[field.one() if j == i else field.zero() for j in range(n)] for i in range(n)]


def test_serre_examples():
    sym = BilinearSpace(Mat.from_rows([[2, 1], [1, 3]]))
    assert serre(sym).matrix == Mat.identity(2)
    rho = Fraction(3)
    assert serre(plane(rho)).matrix == Mat.from_rows([[1 - rho ** 2, -rho], [rho, 1]])
    skew = BilinearSpace(Mat.from_rows([[0, 1], [-1, 0]]))
    assert serre(skew).matrix == -Mat.identity(2)


@pytest.mark.parametrize("seed", range(5))
def test_serre_oracle_on_basis_pairs(seed):
    rng = random.Random(seed)
    A, _, _ = random_instance(rng, rng.randint(1, 4), 1)
    S = serre(A).matrix
    for x in basis_vectors(A.dim, QQ):
        for y in basis_vectors(A.dim, QQ):
            assert A.beta(x, y) == A.beta(y, S.apply(x))


def test_adjoint_examples():
    K = quadratic_field(2)
    A, B, f = one_dim(K.gen(), K)
    for i in range(-3, 4):
        assert iterated_adjoint(f, i).matrix == f.matrix
    A, B, f = random_isometry_instance(random.Random(3), 3)
    assert adjoint(f, "right").matrix == mat_inverse(f.matrix)
    assert adjoint(f, "left").matrix == mat_inverse(f.matrix)


@pytest.mark.parametrize("seed", range(5))
def test_adjoint_oracle(seed):
    rng = random.Random(seed)
    A, B, f = random_instance(rng, 2, 3)
    fs = adjoint(f, "right")
    sf = adjoint(f, "left")
    for a in basis_vectors(A.dim, QQ):
        for b in basis_vectors(B.dim, QQ):
            assert B.beta(f.matrix.apply(a), b) == A.beta(a, fs.matrix.apply(b))
            assert B.beta(b, f.matrix.apply(a)) == A.beta(sf.matrix.apply(b), a)
    assert adjoint(fs, "left") == f and adjoint(sf, "right") == f


def test_orthogonal_examples():
    rho = Fraction(5, 2)
    C = plane(rho)
    A = Subspace.span(C, [e(0)])
    assert orthogonal(A, "left") == Subspace.span(C, [e(1)])
    assert orthogonal(A, "right") == Subspace.span(C, [[-rho, 1]])
    assert orthogonal(C.zero_subspace(), "right") == C.whole()
    assert orthogonal(orthogonal(A, "left"), "right") == A


def test_sod_examples():
    C = plane(Fraction(2))
    A, B = Subspace.span(C, [e(0)]), Subspace.span(C, [e(1)])
    assert is_sod(A, B)
    assert not is_sod(A, A)
    assert is_sod(A, orthogonal(A, "left"))


def test_glue_examples():
    rho = Fraction(7, 3)
    A, B, f = one_dim(rho)
    C, eA, eB = glue(A, B, f)
    assert C.gram == Mat.from_rows([[1, rho], [0, 1]])
    assert gluing_operator(eA, eB).matrix == f.matrix
    A, B, _ = random_instance(random.Random(1), 2, 2)
    C, eA, eB = glue(A, B, Operator(A, B, Mat.zeros(2, 2)))
    assert C.gram.block(0, 2, 2, 4).is_zero() and C.gram.block(2, 4, 0, 2).is_zero()
    assert gluing_operator(eA, eB).is_zero()
    C = plane(rho)
    g = gluing_operator(Subspace.span(C, [e(0)]), Subspace.span(C, [e(1)]))
    assert g.matrix == Mat.from_rows([[rho]])


def test_mutation_examples():
    rho = Fraction(3)
    C = plane(rho)
    A = Subspace.span(C, [e(0)])
    R, L = orthogonal(A, "right"), orthogonal(A, "left")
    M = mutation(A)
    v = Mat.from_columns([[-rho, 1]], 2, QQ)
    image = L.basis @ (M.matrix @ R.coordinates(v))
    assert image == Mat.from_columns([[0, 1]], 2, QQ)
    assert is_isometry(M)
    # orthogonal SOD: M_A is the identity
    D = BilinearSpace(Mat.identity(2))
    A0 = Subspace.span(D, [e(0)])
    assert orthogonal(A0, "right") == orthogonal(A0, "left")
    assert mutation(A0).matrix == Mat.identity(1)


def test_degenerate_subspace_fails_fast():
    C = BilinearSpace(Mat.from_rows([[0, 1], [1, 0]]))
    A = Subspace.span(C, [e(0)])
    assert not is_nondegenerate(A)
    with pytest.raises(DegenerateSubspace):
        mutation(A)


def test_coordinate_change_example():
    rho = Fraction(3)
    C = plane(rho)
    A = Subspace.span(C, [e(0)])
    cc = coordinate_change(A)
    # the block acts on A^perp; read it on the basis vector (-rho, 1)
    v = Mat.from_columns([[-rho, 1]], 2, QQ)
    assert cc.block(1, 1) @ orthogonal(A, "right").coordinates(v) == Mat.from_rows([[-rho]])
    D = BilinearSpace(Mat.identity(2))
    cc0 = coordinate_change(Subspace.span(D, [e(0)]))
    assert cc0.block(0, 0).is_zero() and cc0.block(1, 1).is_zero()
    assert cc0.block(0, 1) == Mat.identity(1) and cc0.block(1, 0) == Mat.identity(1)


def _period(rho, field=QQ, steps=12):
    A, B, f = one_dim(rho, field)
    C, eA, _ = glue(A, B, f)
    return orthogonal_chain(eA, steps)[1]


def test_chain_periods():
    assert _period(0) == 2
    assert _period(1) == 3
    assert _period(quadratic_field(2).gen(), quadratic_field(2)) == 4
    K5 = quadratic_field(5)
    assert _period(K5.element([Fraction(1, 2), Fraction(1, 2)]), K5) == 5
    assert _period(quadratic_field(3).gen(), quadratic_field(3)) == 6
    assert _period(Fraction(3)) is None


def test_criterion_sqrt3_n6():
    K = quadratic_field(3)
    cr = periodicity_criterion(*one_dim(K.gen(), K), 6)
    assert cr.continuant_vanishes and cr.chain_periodic
    assert cr.isometry_E_N_minus_2 and cr.isometry_E_N
    # oracle: Phi_5(x, -1) = x^5 - 4x^3 + 3x vanishes at sqrt 3
    x = K.gen()
    assert x ** 5 - 4 * x ** 3 + 3 * x == K.zero()


def test_criterion_root_vector():
    A = BilinearSpace.standard(1)
    B = BilinearSpace.standard(2)
    v = Mat.from_rows([[1], [1]])
    assert B.beta([1, 1], [1, 1]) == 2
    cr = periodicity_criterion(A, B, Operator(A, B, v), 4)
    assert cr.continuant_vanishes and cr.chain_periodic and cr.biconditional


def test_criterion_odd_n_needs_equal_dims():
    A, B, f = random_instance(random.Random(0), 1, 2)
    with pytest.raises(Inapplicable):
        periodicity_criterion(A, B, f, 5)


@pytest.mark.parametrize("seed", range(10))
def test_random_criterion_biconditional(seed):
    A, B, f = random_instance(random.Random(seed), 2, 2)
    cr = periodicity_criterion(A, B, f, 5)
    assert cr.biconditional


@pytest.mark.parametrize("seed", range(4))
def test_e3_of_isometry_is_minus_inverse(seed):
    A, B, f = random_isometry_instance(random.Random(seed), 1 + seed % 3)
    E3 = continuant_at(adjoint_string(f, 3), 1, 3, A)
    assert is_isometry(E3)
    assert E3.matrix == -mat_inverse(f.matrix)


def test_w_matrix_examples():
    A, B, _ = random_instance(random.Random(2), 1, 2)
    C, eA, _ = glue(A, B, Operator(A, B, Mat.zeros(2, 1)))
    P, rep = mutation_matrix_product(eA, 2)
    assert rep.passed and P.to_mat() == Mat.identity(3)
    C, eA, _ = glue(*one_dim(1))
    P, rep = mutation_matrix_product(eA, 3)
    assert rep.passed and P.off_diagonal_zero()
    A, B, f = random_instance(random.Random(5), 2, 2)
    C, eA, _ = glue(A, B, f)
    P, rep = mutation_matrix_product(eA, 4)
    assert rep.passed and not P.block(1, 0).is_zero()


@given(st.integers(-3, 3), st.integers(2, 7))
def test_one_dim_specialization(rho, N):
    A, B, f = one_dim(Fraction(rho))
    C, eA, _ = glue(A, B, f)
    chain, _ = orthogonal_chain(eA, N)
    assert (chain[N] == eA) == (fibonacci_value(N - 1, Fraction(rho)) == 0)


def test_suites_small():
    assert property_suite(seed=1, instances=30).passed
    assert periodicity_suite(seed=1, instances=30, max_N=5).passed
    rep = w_matrix_suite(seed=1, instances=10, max_N=5)
    assert next(c for c in rep.checks if c.name == "all_instances_pass").passed


def test_property_suite_covers_degenerate_subspaces():
    rep = property_suite(seed=0, instances=40)
    assert rep.data["subspaces"]["degenerate"] > 0
