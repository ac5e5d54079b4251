import pytest

from eulertwist.bilinear import chain_mutations
from eulertwist.errors import UnsupportedQuiver
from eulertwist.quiverk0 import (coxeter_matrix, coxeter_order, coxeter_relation_check,
                                 euler_form, euler_matrix, quiver_from_name, quiver_report,
                                 sod_chain_an, sod_chain_dn, theta)
from eulertwist.scalars import Mat, mat_inverse


def transposed_coxeter(E):
    return -(mat_inverse(E.T) @ E)


def mat_power(M, k):
    P = Mat.identity(M.rows, M.field)
    for _ in range(k):
        P = P @ M
    return P


def test_a2_euler_and_coxeter():
    E = euler_matrix(quiver_from_name("A", 2))
    assert E == Mat.from_rows([[1, -1], [0, 1]])
    C = coxeter_matrix(E)
    assert C == Mat.from_rows([[0, -1], [1, -1]])
    assert mat_power(C, 3) == Mat.identity(2)


def test_a1():
    lat = euler_form(quiver_from_name("A", 1))
    assert lat.euler == Mat.from_rows([[1]]) and lat.coxeter == Mat.from_rows([[-1]])


def test_coxeter_relations():
    C3 = euler_form(quiver_from_name("A", 3)).coxeter
    assert mat_power(C3, 4) == Mat.identity(3)
    C4 = euler_form(quiver_from_name("D", 4)).coxeter
    assert mat_power(C4, 3) == -Mat.identity(4)
    C5 = euler_form(quiver_from_name("D", 5)).coxeter
    assert mat_power(C5, 4) == -theta(5) and mat_power(C5, 8) == Mat.identity(5)


@pytest.mark.parametrize("kind,n", [("A", n) for n in range(1, 9)] + [("D", n) for n in range(4, 9)])
def test_coxeter_relation_reports(kind, n):
    rep = coxeter_relation_check(quiver_from_name(kind, n))
    assert rep.passed


def test_chain_periods():
    assert sod_chain_an(3).data["least_period"] == 8
    assert sod_chain_dn(4).data["least_period"] == 6
    # A_1 and A_2 are 2(n+1)-periodic with shorter least periods 2 and 3
    assert sod_chain_an(1).passed and sod_chain_an(1).data["least_period"] == 2
    assert sod_chain_an(2).passed and sod_chain_an(2).data["least_period"] == 3
    for n in range(3, 9):
        assert sod_chain_an(n).passed and sod_chain_an(n).data["least_period"] == 2 * (n + 1)
    for n in range(4, 9):
        assert sod_chain_dn(n).passed and sod_chain_dn(n).data["least_period"] == 2 * (n - 1)


def test_a3_table_is_checked():
    rep = sod_chain_an(3)
    assert sum(c.name.startswith("table[") for c in rep.checks) == 9


@pytest.mark.parametrize("n", range(3, 8))
def test_transposed_coxeter_convention_is_rejected(n):
    """The B-side twist of the A_n chain pins C = -E^-1 E^T, not its transpose."""
    lat = euler_form(quiver_from_name("A", n))
    A = lat.span(lat.e(1))
    B = lat.span(*[lat.e(i) for i in range(2, n + 1)])
    N = 2 * (n + 1)
    X, _, mu = chain_mutations(A, N)
    twist_B = mu[N - 1].matrix
    G = B.restricted_gram()
    assert twist_B == coxeter_matrix(G)
    assert twist_B != transposed_coxeter(G)


def test_unsupported_quiver():
    with pytest.raises(UnsupportedQuiver):
        quiver_report("E", 6)
    with pytest.raises(UnsupportedQuiver):
        quiver_report("D", 3)


def test_coxeter_order_sign():
    assert coxeter_order(euler_form(quiver_from_name("D", 4)).coxeter) == (3, -1)
    assert coxeter_order(euler_form(quiver_from_name("A", 2)).coxeter) == (3, 1)
