import random

import pytest
from hypothesis import given, settings, strategies as st

from eulertwist.continuants import fibonacci_value
from eulertwist.errors import CriterionUnavailable
from eulertwist.functorcat import (Complex, CubeDiagram, FunctorMatrix,
                                   adjunction_maps_are_chain_maps, compose, continuant_cube,
                                   counit, determinantal_check, duality_check,
                                   fibonacci_triangle_check, higher_twist, is_n_spherical,
                                   random_complex, random_functor_matrix, right_adjoint_model,
                                   sphericity_library, totalize, triangle_identities, twist,
                                   twist_euler, unit)

k = Complex.trivial({0: 1})
k2 = Complex.trivial({0: 2})
k_plus_k1 = Complex.trivial({0: 1, 1: 1})          # k + k[-1]
Id = FunctorMatrix.identity([0])


def tensor(C):
    return FunctorMatrix.tensor_by(C)


def total_dim(table):
    return sum(sum(h.values()) for h in table.values())


def test_compose_examples():
    G = tensor(Complex.trivial({0: 3}))
    assert compose(Id, G).entry(0, 0).dims() == G.entry(0, 0).dims()
    assert compose(tensor(k2), G).entry(0, 0).dims() == {0: 6}
    F = tensor(k_plus_k1)
    assert compose(right_adjoint_model(F), F).entry(0, 0).dims() == {-1: 1, 0: 2, 1: 1}


def test_unit_counit_examples():
    F = tensor(k)
    for eta in (unit(F), counit(F)):
        (row,) = eta.components[(0, 0)].values()
        assert eta.source.entry(0, 0).dim == eta.target.entry(0, 0).dim == 1
        assert list(row.values()) == [1]
    # the trace pairing k^4 -> k has rank 1
    ev = counit(tensor(k2))
    assert ev.source.entry(0, 0).dim == 4 and ev.rank_matrix() == {(0, 0): 1}
    F = tensor(k_plus_k1)
    assert all(triangle_identities(F).values())
    eta = unit(F)
    assert eta.target.entry(0, 0).dims() == {-1: 1, 0: 2, 1: 1}
    image = next(iter(eta.components[(0, 0)].values()))
    assert len(image) == 2 and all(eta.target.entry(0, 0).basis[t] == 0 for t in image)


def test_one_cube_convention():
    f = counit(tensor(k2))                 # k^4 -> k
    E = totalize(CubeDiagram.one_cube(f, "homological"))
    assert E.entry(0, 0).euler() == f.source.entry(0, 0).euler() - f.target.entry(0, 0).euler()
    dims = E.entry(0, 0).dims()
    assert dims == {0: 4, 1: 1}


def test_identity_cube_n3():
    E = twist(Id, 3)
    assert E.entry(0, 0).euler() == -1 == fibonacci_value(3, 1)


def test_zero_cube():
    Z = FunctorMatrix.zero([0], [0])
    assert twist(Z, 3).is_zero()


def test_cube_shapes():
    for N, (nv, ne) in {2: (2, 1), 3: (3, 2), 4: (5, 5)}.items():
        cube = continuant_cube(tensor(k2), N, "homological")
        assert (len(cube.vertices), len(cube.edges)) == (nv, ne)
        assert cube.squares_commute()
    cube = continuant_cube(tensor(k2), 2, "homological")
    (edge,) = cube.edges.values()
    assert edge.rank_matrix() == counit(tensor(k2)).rank_matrix()


def test_higher_twist_examples():
    E, table = higher_twist(Id, 2)
    assert E.is_acyclic()
    E, table = higher_twist(tensor(k2), 2)
    assert total_dim(table) == 3
    assert twist_euler(tensor(k2), 3) == {(0, 0): 4}


def test_fibonacci_triangle_examples():
    assert fibonacci_triangle_check(Id, 3).passed
    assert fibonacci_triangle_check(FunctorMatrix.zero([0], [0]), 4).passed
    rep = fibonacci_triangle_check(tensor(k2), 4)
    assert rep.passed
    assert any(c.name.endswith("graded_dims_match") for c in rep.checks)


@pytest.mark.parametrize("N", range(1, 7))
def test_duality_identity(N):
    assert duality_check(Id, N).passed


def test_duality_examples():
    assert duality_check(FunctorMatrix.zero([0], [0]), 3).passed
    rep = duality_check(tensor(k_plus_k1), 3)
    assert rep.passed and "shift" in rep.data


def test_determinantal_examples():
    assert determinantal_check(tensor(k2), 2).passed
    assert determinantal_check(Id, 3).passed
    assert determinantal_check(FunctorMatrix.zero([0], [0]), 2).passed


def test_determinantal_nonsquare_index_sets():
    rng = random.Random(11)
    for _ in range(5):
        F = random_functor_matrix(rng, 1, 3)
        for N in range(1, 5):
            assert determinantal_check(F, N).passed


def test_sphericity_examples():
    for N in (3, 6, 9):
        assert is_n_spherical(Id, N)
    for N in (4, 5):
        assert not is_n_spherical(Id, N)
    Z = FunctorMatrix.zero([0], [0])
    for M in range(1, 5):
        assert is_n_spherical(Z, 2 * M)
    assert is_n_spherical(FunctorMatrix.permutation_of_shifts([0], [1]), 3)


def test_sphericity_library_and_modes():
    for name, F, expected in sphericity_library():
        for N, exp in expected.items():
            assert is_n_spherical(F, N, "both") == exp, (name, N)
            if N % 2 == 0:
                try:
                    assert is_n_spherical(F, N, "even_criterion") == exp
                except CriterionUnavailable:
                    pass


def test_even_criterion_unavailable_for_odd_n():
    with pytest.raises(CriterionUnavailable):
        is_n_spherical(Id, 3, "even_criterion")


def test_composite_periods_on_positive_library():
    Z = FunctorMatrix.zero([0], [0])
    for N, F, Ms in ((3, Id, range(1, 4)), (2, Z, range(1, 5))):
        assert is_n_spherical(F, N)
        for M in Ms:
            assert is_n_spherical(F, N * M)


seeds = st.integers(0, 2 ** 32)


@settings(max_examples=20)
@given(seeds)
def test_triangle_identities_on_random_functors(seed):
    rng = random.Random(seed)
    F = random_functor_matrix(rng, rng.randint(1, 3), rng.randint(1, 3))
    assert all(triangle_identities(F).values())
    assert adjunction_maps_are_chain_maps(F)


@settings(max_examples=20)
@given(seeds)
def test_d_squared_zero_and_euler_multiplicative(seed):
    rng = random.Random(seed)
    F = random_functor_matrix(rng, 2, 2)
    G = random_functor_matrix(rng, 2, 2)
    GF = compose(G, F)
    assert GF.d_squared_zero() and right_adjoint_model(F).d_squared_zero()
    chiF, chiG = F.euler_matrix(), G.euler_matrix()
    prod = {}
    for (u, t), a in chiG.items():
        for (t2, s), b in chiF.items():
            if t == t2:
                prod[(u, s)] = prod.get((u, s), 0) + a * b
    assert GF.euler_matrix() == {kk: v for kk, v in prod.items() if v}
    transposed = {(s, t): v for (t, s), v in chiF.items()}
    assert right_adjoint_model(F).euler_matrix() == transposed


@settings(max_examples=20)
@given(seeds)
def test_euler_characteristic_is_continuant(seed):
    rng = random.Random(seed)
    C = random_complex(rng, 4)
    F = tensor(C)
    for N in range(0, 9):
        for v in ("homological", "cohomological"):
            assert twist_euler(F, N, v).get((0, 0), 0) == fibonacci_value(N, C.euler())


@settings(max_examples=8)
@given(seeds, st.integers(2, 4))
def test_built_twists_match_graded_dims(seed, N):
    rng = random.Random(seed)
    F = tensor(random_complex(rng, 3))
    for v in ("homological", "cohomological"):
        E = twist(F, N, v)
        assert E.d_squared_zero()
        assert E.euler_matrix() == twist_euler(F, N, v)


@settings(max_examples=8)
@given(seeds, st.integers(2, 4))
def test_fibonacci_triangle_on_random_functors(seed, N):
    rng = random.Random(seed)
    F = random_functor_matrix(rng, rng.randint(1, 2), rng.randint(1, 2), max_entry_dim=2)
    assert fibonacci_triangle_check(F, N).passed
