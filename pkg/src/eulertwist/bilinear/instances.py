"""Seeded random instances and the library of known periodic gluings."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from ..scalars import QQ, Mat, det, mat_rank, quadratic_field
from .spaces import BilinearSpace, Operator, Subspace, is_nondegenerate


def random_scalar(rng: random.Random, field=QQ, lo: int = -3, hi: int = 3):
    if field == QQ:
        return Fraction(rng.randint(lo, hi))
    # keep the irrational parts small so entries stay readable
    coeffs = [rng.randint(lo, hi)] + [rng.randint(-1, 1) for _ in range(field.degree - 1)]
    return field.element(coeffs)


def random_matrix(rng: random.Random, rows: int, cols: int, field=QQ, lo: int = -3, hi: int = 3) -> Mat:
    return Mat(rows, cols, [random_scalar(rng, field, lo, hi) for _ in range(rows * cols)], field)


def random_invertible(rng: random.Random, n: int, field=QQ) -> Mat:
    while True:
        M = random_matrix(rng, n, n, field)
        if n == 0 or det(M) != 0:
            return M


def random_gram(rng: random.Random, n: int, field=QQ) -> Mat:
    return random_invertible(rng, n, field)


def random_space(rng: random.Random, n: int, field=QQ) -> BilinearSpace:
    return BilinearSpace(random_gram(rng, n, field), check=False)


def random_nondegenerate_subspace(rng: random.Random, C: BilinearSpace, k: int,
                                  max_tries: int = 200) -> Subspace:
    for _ in range(max_tries):
        V = random_matrix(rng, C.dim, k, C.field, -2, 2)
        if mat_rank(V) != k:
            continue
        A = Subspace(C, V)
        if is_nondegenerate(A):
            return A
    raise RuntimeError("no nondegenerate subspace found")


def random_instance(rng: random.Random, dim_a: int, dim_b: int, field=QQ):
    """``(A_space, B_space, f)`` with random nonsingular Gram matrices."""
    A = random_space(rng, dim_a, field)
    B = random_space(rng, dim_b, field)
    f = Operator(A, B, random_matrix(rng, dim_b, dim_a, field))
    return A, B, f


def random_isometry_instance(rng: random.Random, n: int, field=QQ):
    """A random isometry ``f: A -> B``, by pulling the form of ``B`` back."""
    B = random_space(rng, n, field)
    F = random_invertible(rng, n, field)
    A = BilinearSpace(F.T @ B.gram @ F, check=False)
    return A, B, Operator(A, B, F)


@dataclass
class PositiveCase:
    name: str
    A_space: BilinearSpace
    B_space: BilinearSpace
    f: Operator
    N: int


def _one_dim(rho, field, N: int, name: str) -> PositiveCase:
    A = BilinearSpace.standard(1, field)
    B = BilinearSpace.standard(1, field)
    return PositiveCase(name, A, B, Operator(A, B, Mat(1, 1, [rho], field)), N)


def positive_library(seed: int = 0, isometries: int = 4) -> List[PositiveCase]:
    """Gluings known to be ``N``-periodic.

    ``f = 0`` (N = 2), random isometries (N = 3), one-dimensional
    ``rho = 2 cos(k pi / N)`` for N in {3, 4, 5, 6}, and the root vector
    ``v = (1, 1)`` in the standard plane (N = 4).
    """
    rng = random.Random(seed)
    cases: List[PositiveCase] = []
    for a, b in ((1, 1), (2, 3), (3, 1)):
        A, B = random_space(rng, a), random_space(rng, b)
        cases.append(PositiveCase(f"zero[{a},{b}]", A, B, Operator(A, B, Mat.zeros(b, a)), 2))
    for j in range(isometries):
        n = 1 + j % 3
        A, B, f = random_isometry_instance(rng, n)
        cases.append(PositiveCase(f"isometry[{j}]", A, B, f, 3))
    for rho in (1, -1):
        cases.append(_one_dim(Fraction(rho), QQ, 3, f"rho={rho},N=3"))
    K2 = quadratic_field(2)
    for name, rho in (("sqrt2", K2.gen()), ("0", K2.zero()), ("-sqrt2", -K2.gen())):
        cases.append(_one_dim(rho, K2, 4, f"rho={name},N=4"))
    K5 = quadratic_field(5)
    for name, rho in (("(1+sqrt5)/2", K5.element([Fraction(1, 2), Fraction(1, 2)])),
                      ("(1-sqrt5)/2", K5.element([Fraction(1, 2), Fraction(-1, 2)])),
                      ("(-1+sqrt5)/2", K5.element([Fraction(-1, 2), Fraction(1, 2)])),
                      ("(-1-sqrt5)/2", K5.element([Fraction(-1, 2), Fraction(-1, 2)]))):
        cases.append(_one_dim(rho, K5, 5, f"rho={name},N=5"))
    K3 = quadratic_field(3)
    for name, rho in (("sqrt3", K3.gen()), ("1", K3.one()), ("0", K3.zero()),
                      ("-1", -K3.one()), ("-sqrt3", -K3.gen())):
        cases.append(_one_dim(rho, K3, 6, f"rho={name},N=6"))
    A = BilinearSpace.standard(1)
    B = BilinearSpace.standard(2)
    cases.append(PositiveCase("root_vector", A, B, Operator(A, B, Mat.from_rows([[1], [1]])), 4))
    return cases


__all__ = [
    "random_scalar", "random_matrix", "random_invertible", "random_gram",
    "random_space", "random_nondegenerate_subspace", "random_instance",
    "random_isometry_instance", "PositiveCase", "positive_library",
]
