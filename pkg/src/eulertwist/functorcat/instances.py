"""Seeded random complexes and functor matrices, plus the sphericity library."""

from __future__ import annotations

import random
from typing import Dict, List, Tuple

from ..bilinear.instances import random_invertible
from ..scalars import Mat, mat_inverse
from .complexes import Complex
from .functors import FunctorMatrix


def random_complex(rng: random.Random, max_dim: int = 4, min_dim: int = 1,
                   degrees: Tuple[int, int] = (-2, 2)) -> Complex:
    """A complex of total dim in ``[min_dim, max_dim]``, in general position.

    Built from lines ``k[-m]`` and contractible pairs, then conjugated by a
    random change of basis in each degree so the differentials are dense.
    """
    n = rng.randint(min_dim, max_dim)
    lo, hi = degrees
    dims: Dict[int, int] = {}
    pairs: List[int] = []
    left = n
    while left:
        if left >= 2 and rng.random() < 0.4:
            m = rng.randint(lo, hi - 1)
            pairs.append(m)
            dims[m] = dims.get(m, 0) + 1
            dims[m + 1] = dims.get(m + 1, 0) + 1
            left -= 2
        else:
            m = rng.randint(lo, hi)
            dims[m] = dims.get(m, 0) + 1
            left -= 1
    # elementary differential: pair number p joins slot p in degree m to slot p in m + 1
    used_src: Dict[int, int] = {}
    used_tgt: Dict[int, int] = {}
    elem: Dict[int, List[Tuple[int, int]]] = {}
    for m in pairs:
        i = used_src.get(m, 0)
        j = used_tgt.get(m + 1, 0)
        used_src[m] = i + 1
        used_tgt[m + 1] = j + 1
        elem.setdefault(m, []).append((j, i))
    # sources use the first slots of degree m, targets the last slots of m + 1
    P = {m: random_invertible(rng, k) for m, k in dims.items()}
    diffs = {}
    for m, entries in elem.items():
        rows, cols = dims[m + 1], dims[m]
        D = [[0] * cols for _ in range(rows)]
        for j, i in entries:
            D[rows - 1 - j][i] = 1
        M = Mat.from_rows(D, cols=cols)
        diffs[m] = P[m + 1] @ M @ mat_inverse(P[m])
    return Complex.from_matrices(dims, diffs)


def random_functor_matrix(rng: random.Random, n_source: int = 2, n_target: int = 2,
                          max_entry_dim: int = 2, density: float = 0.6) -> FunctorMatrix:
    entries = {}
    for t in range(n_target):
        for s in range(n_source):
            if rng.random() < density:
                entries[(t, s)] = random_complex(rng, max_entry_dim)
    return FunctorMatrix(range(n_source), range(n_target), entries, label="F")


def sphericity_library() -> List[Tuple[str, FunctorMatrix, Dict[int, bool]]]:
    """``(name, F, {N: expected})`` for the positive and negative cases."""
    Id = FunctorMatrix.identity([0])
    zero = FunctorMatrix.zero([0], [0])
    perm = FunctorMatrix.permutation_of_shifts([1, 2, 0], [1, 0, -2])
    return [
        ("identity", Id, {3: True, 6: True, 9: True, 4: False, 5: False}),
        ("zero", zero, {2: True, 4: True, 6: True, 8: True}),
        ("shift", FunctorMatrix.permutation_of_shifts([0], [1]), {3: True}),
        ("permutation_of_shifts", perm, {3: True}),
    ]


__all__ = ["random_complex", "random_functor_matrix", "sphericity_library"]
