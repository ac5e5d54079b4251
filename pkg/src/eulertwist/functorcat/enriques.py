"""The fourth and fifth cotwist complexes of the structure sheaf of an Enriques manifold.

Each vertex of the cohomological continuant cube carries a formal line
object ``label[shift]`` with ``label`` in ``{O, w}``; the relation
``w (x) w = O[2n]`` is used only to name the vertices.  Edge maps are the
identity between equal labels and equal shifts and zero otherwise, so the
only map that changes the shift (``s_*`` in the fourth cotwist) vanishes.
"""

from __future__ import annotations

from typing import Dict, Iterable, Tuple

from ..continuants import cotwinned_subsets
from ..report import Report
from .complexes import Complex
from .cubes import edge_sign

Line = Tuple[str, int]   # (label, shift): the object label[shift]


def e4_objects(n: int) -> Dict[Tuple[int, ...], Line]:
    """Vertices of the fourth cotwist applied to ``k``, keyed by members."""
    return {
        (): ("O", 0),               # k
        (1, 2): ("O", 0),           # F* F (k) = A = k
        (3, 4): ("O", 0),           # F''' F'' (k) = A
        (1, 4): ("O", -2 * n),      # Hom(E w, E) = k[-2n]
        (1, 2, 3, 4): ("O", 0),     # A (x) A
    }


def e5_objects(n: int) -> Dict[Tuple[int, ...], Line]:
    """Vertices of the fifth cotwist applied to ``k``, keyed by members."""
    return {
        (1,): ("O", 0),             # E
        (3,): ("w", 0),             # E w
        (5,): ("O", 2 * n),         # E w^2
        (3, 4, 5): ("O", 2 * n),    # A E w^2
        (1, 4, 5): ("O", 0),        # Hom(E w, E) E w^2
        (1, 2, 5): ("O", 2 * n),    # A E w^2
        (1, 2, 3): ("w", 0),        # A E w
        (1, 2, 3, 4, 5): ("O", 2 * n),
    }


def line_cube_complex(N: int, objects: Dict[Tuple[int, ...], Line]) -> Complex:
    """Totalize the cohomological cube of line objects with identity edges.

    Keys are ``(members, label)``; the vertex of depth ``d`` sits in cube
    degree ``-d`` and ``label[shift]`` adds internal degree ``-shift``.
    """
    subs = {c.members: c for c in cotwinned_subsets(N)}
    if set(subs) != set(objects):
        raise ValueError("objects must be given on every cotwinned subset")
    basis = {}
    d: Dict = {}
    for I, (label, shift) in objects.items():
        J = subs[I].missing_twins
        basis[(I, label)] = -len(J) - shift
    for I, (label, shift) in objects.items():
        J = subs[I].missing_twins
        row = {}
        for j in J:
            I2 = tuple(sorted(I + (j, j + 1)))
            if objects[I2] == (label, shift):
                row[(I2, label)] = edge_sign(J, j)
        if row:
            d[(I, label)] = row
    return Complex(basis, d, check=True)


def subcomplex(C: Complex, keys: Iterable) -> Complex:
    keys = set(keys)
    return Complex({k: C.basis[k] for k in C.basis if k in keys},
                   {k: {t: c for t, c in row.items() if t in keys}
                    for k, row in C.d.items() if k in keys})


def is_subcomplex(C: Complex, keys: Iterable) -> bool:
    keys = set(keys)
    return all(t in keys for k in keys for t in C.d.get(k, {}))


def quotient(C: Complex, keys: Iterable) -> Complex:
    """``C`` modulo the span of ``keys`` (assumed to be a subcomplex)."""
    keys = set(keys)
    return subcomplex(C, [k for k in C.basis if k not in keys])


def _labels_respected(C: Complex) -> bool:
    return all(t[1] == k[1] for k, row in C.d.items() for t in row)


def enriques_check(n: int) -> Report:
    if n < 1:
        raise ValueError("n must be >= 1")
    rep = Report("enriques", {"n": n})

    e4 = line_cube_complex(4, e4_objects(n))
    rim = [k for k in e4.basis if k[0] != (1, 4)]
    rep.add("e4.d_squared_zero", e4.d_squared_zero())
    rep.add("e4.rim_is_subcomplex", is_subcomplex(e4, rim))
    rep.add("e4.rim_exact", subcomplex(e4, rim).is_acyclic())
    q = quotient(e4, rim)
    rep.add("e4.quotient_is_k[-2n]", q.cohomology() == {2 * n - 1: 1},
            quotient={str(m): v for m, v in q.cohomology().items()})
    h4 = e4.cohomology()
    rep.add("e4.total_cohomology_dim_1", sum(h4.values()) == 1,
            cohomology={str(m): v for m, v in h4.items()})

    e5 = line_cube_complex(5, e5_objects(n))
    C1 = [k for k in e5.basis if e5_objects(n)[k[0]] == ("O", 2 * n)]
    C2 = C1 + [k for k in e5.basis if k[1] == "w"]
    rep.add("e5.line_objects", len(e5.basis) == 8)
    rep.add("e5.labels_respected", _labels_respected(e5))
    rep.add("e5.d_squared_zero", e5.d_squared_zero())
    rep.add("e5.C1_four_summands", len(C1) == 4)
    rep.add("e5.C1_is_subcomplex", is_subcomplex(e5, C1))
    rep.add("e5.C1_exact", subcomplex(e5, C1).is_acyclic())
    rep.add("e5.C2_is_subcomplex", is_subcomplex(e5, C2))
    C2C1 = quotient(subcomplex(e5, C2), C1)
    rep.add("e5.C2/C1_is_w_to_w", C2C1.dim == 2 and _has_identity(C2C1))
    rep.add("e5.C2/C1_exact", C2C1.is_acyclic())
    CC2 = quotient(e5, C2)
    rep.add("e5.C/C2_is_O_to_O", CC2.dim == 2 and _has_identity(CC2))
    rep.add("e5.C/C2_exact", CC2.is_acyclic())
    rep.add("e5.acyclic", e5.is_acyclic())
    rep.data["e4_cohomology"] = {str(m): v for m, v in h4.items()}
    rep.data["degree_convention"] = "cube degree -depth, label[s] adds internal degree -s"
    return rep


def _has_identity(C: Complex) -> bool:
    return sum(len(r) for r in C.d.values()) == 1 and all(
        abs(c) == 1 for r in C.d.values() for c in r.values())


__all__ = ["e4_objects", "e5_objects", "line_cube_complex", "enriques_check",
           "subcomplex", "quotient", "is_subcomplex"]
