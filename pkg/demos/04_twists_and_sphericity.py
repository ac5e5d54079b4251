"""Continuant twists of functors between categories of complexes.

A functor is modelled by a matrix of complexes.  Its N-th twist totalizes a
cube of composites of iterated adjoints; entrywise Euler characteristics
follow the Fibonacci-type polynomials.

Run: python demos/04_twists_and_sphericity.py
"""

from eulertwist.continuants import fibonacci_value
from eulertwist.functorcat import (Complex, FunctorMatrix, is_n_spherical, table_to_json,
                                   twist, twist_euler)

# tensoring with a two-dimensional vector space in degree 0
F = FunctorMatrix.tensor_by(Complex.trivial({0: 2}))
for N in range(0, 5):
    E = twist(F, N)
    chi = twist_euler(F, N).get((0, 0), 0)
    print(f"N={N}: cohomology {table_to_json(E.cohomology_table())}, "
          f"chi {chi}, continuant at 2 gives {fibonacci_value(N, 2)}")

print("\nSphericity detection (E_{N-1} = 0, E_N and E_{N-2} equivalences):")
cases = [
    ("identity", FunctorMatrix.identity([0])),
    ("zero", FunctorMatrix.zero([0], [0])),
    ("shift [1]", FunctorMatrix.permutation_of_shifts([0], [1])),
]
for name, G in cases:
    found = [N for N in range(2, 8) if is_n_spherical(G, N)]
    print(f"  {name:<10} is N-spherical for N in {found}")
