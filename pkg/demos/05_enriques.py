"""Fourth and fifth cotwist complexes of the structure sheaf of an Enriques manifold.

Vertices carry formal line objects O[m] or w[m].  The fourth complex has
one-dimensional cohomology and the fifth is acyclic, which the filtration
checks make explicit.

Run: python demos/05_enriques.py
"""

from eulertwist.functorcat import enriques_check

for n in (2, 3, 4):
    rep = enriques_check(n)
    print(f"n={n}: {len(rep.checks)} checks, {'all pass' if rep.passed else 'FAILURES'}")
    for c in rep.checks:
        print(f"   {'PASS' if c.passed else 'FAIL'} {c.name}")
