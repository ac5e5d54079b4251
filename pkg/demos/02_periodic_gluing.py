"""Periodic orthogonal chains of a one-dimensional gluing.

Glue two copies of the unit line along ``f = rho``.  The chain of iterated
right orthogonals of the first summand closes up after N steps exactly when
the continuant of the adjoint string vanishes.

Run: python demos/02_periodic_gluing.py
"""

from eulertwist.bilinear import BilinearSpace, Operator, periodicity_criterion
from eulertwist.scalars import QQ, Mat, quadratic_field

cases = [
    # an extension scalar is written by its coefficients in the generator
    ("rho = 1 over Q", QQ, 1, 3),
    ("rho = sqrt 2", quadratic_field(2), ["0", "1"], 4),
    ("rho = sqrt 3", quadratic_field(3), ["0", "1"], 6),
    ("rho = 1/2 over Q", QQ, "1/2", 6),
]

for title, field, rho, N in cases:
    A = BilinearSpace(Mat.identity(1, field), "A")
    B = BilinearSpace(Mat.identity(1, field), "B")
    f = Operator(A, B, Mat.from_rows([[rho]], field))
    cr = periodicity_criterion(A, B, f, N)
    print(f"{title:<18} N={N}: continuant vanishes {cr.continuant_vanishes!s:<5} "
          f"chain periodic {cr.chain_periodic!s:<5} least period {cr.period}")
