"""Continuant cubes of functor matrices and their totalizations.

Vertices of the continuant cube of ``F_1, ..., F_N`` are indexed by the
missing-twin tuples ``J`` of cotwinned subsets of ``[1, N]``.  In the
homological variant the vertex is the ascending word ``F_{i_1} ... F_{i_k}``
and edges remove a twin by a counit; in the cohomological variant it is the
descending word and edges insert a twin by a unit.

Totalization places the vertex ``J`` in degree ``+|J|`` (homological) or
``-|J|`` (cohomological), so the full monomial sits in degree 0.  With
internal sign ``(-1)^{|J|}`` and edge sign ``(-1)^{#{j' in J_src : j' < j}}``
the total differential squares to zero exactly when every square commutes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple

from ..continuants import cotwinned_subsets
from ..errors import IndexSetMismatch, NonCommutingCube
from .complexes import Complex, SparseMap
from .functors import (FunctorMatrix, Transformation, contraction, insertion,
                       right_adjoint_model, word)

Twins = Tuple[int, ...]
VARIANTS = ("homological", "cohomological")


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def edge_sign(J_src: Sequence[int], j: int) -> int:
    """Alternating cube sign of the edge out of ``J_src`` along coordinate ``j``."""
    return _sign(sum(1 for x in J_src if x < j))


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


@dataclass
class CubeDiagram:
    """A diagram on a (sub)poset of a cube, with ``J -> J + j`` or ``J -> J - j`` edges.

    ``edges[(J, j)]`` is the map out of vertex ``J`` along coordinate ``j``;
    ``direction`` is +1 when edges add the coordinate and -1 when they remove it.
    """

    variant: str
    vertices: Dict[Twins, FunctorMatrix]
    edges: Dict[Tuple[Twins, int], Transformation]
    direction: int = 1
    N: int = 0
    letters: List[FunctorMatrix] = field(default_factory=list)
    members: Dict[Twins, Tuple[int, ...]] = field(default_factory=dict)

    def target_of(self, J: Twins, j: int) -> Twins:
        if self.direction > 0:
            return tuple(sorted(J + (j,)))
        return tuple(x for x in J if x != j)

    def degree_offset(self, J: Twins) -> int:
        return len(J) if self.variant == "homological" else -len(J)

    @classmethod
    def one_cube(cls, f: Transformation, variant: str = "homological") -> "CubeDiagram":
        """``[A -> B]`` with ``A`` at ``()`` and ``B`` at ``(1,)``."""
        _check_variant(variant)
        if variant == "homological":
            return cls(variant, {(): f.source, (1,): f.target}, {((), 1): f}, direction=1)
        return cls(variant, {(1,): f.source, (): f.target}, {((1,), 1): f}, direction=-1)

    def squares_commute(self) -> bool:
        """Every square of edges commutes on the nose."""
        for (J, j), e1 in self.edges.items():
            K = self.target_of(J, j)
            for (J2, k), e2 in self.edges.items():
                if J2 != J or k <= j:
                    continue
                a = self.edges.get((K, k))
                b_src = self.target_of(J, k)
                b = self.edges.get((b_src, j))
                if a is None or b is None:
                    continue
                if not _same_map(a @ e1, b @ e2):
                    return False
        return True


def _same_map(f: Transformation, g: Transformation) -> bool:
    keys = set(f.components) | set(g.components)
    return all(f.component(*ts) == g.component(*ts) for ts in keys)


# -- the continuant cube -------------------------------------------------------

def adjoint_string(F: FunctorMatrix, N: int) -> List[FunctorMatrix]:
    """``[F^{(0)}, ..., F^{(N-1)}]`` by iterated right adjoints."""
    out = [F]
    for _ in range(N - 1):
        out.append(right_adjoint_model(out[-1]))
    return out[:N]


def _vertex_word(letters, members, variant):
    order = members if variant == "homological" else tuple(reversed(members))
    return [letters[i - 1] for i in order]


def _empty_base(letters, variant):
    return letters[0].target if variant == "homological" else letters[0].source


def continuant_cube(F: FunctorMatrix, N: int, variant: str = "homological") -> CubeDiagram:
    """The (co)homological continuant cube of the adjoint string of ``F``."""
    _check_variant(variant)
    if N < 1:
        raise ValueError("continuant cubes need N >= 1")
    letters = adjoint_string(F, N)
    base = _empty_base(letters, variant)
    subs = cotwinned_subsets(N)
    vertices: Dict[Twins, FunctorMatrix] = {}
    members: Dict[Twins, Tuple[int, ...]] = {}
    for c in subs:
        J = c.missing_twins
        members[J] = c.members
        vertices[J] = word(_vertex_word(letters, c.members, variant), base)
    edges: Dict[Tuple[Twins, int], Transformation] = {}
    for J, I in members.items():
        ws = _vertex_word(letters, I, variant)
        if variant == "homological":
            # remove a twin {j, j+1} of consecutive members by the counit
            for p, j in enumerate(I[:-1]):
                if I[p + 1] == j + 1:
                    edges[(J, j)] = contraction(ws, p, base)
        else:
            # insert a missing twin j by the unit Id -> F_{j+1} F_j
            for j in J:
                p = sum(1 for m in I if m > j + 1)
                pair = (letters[j], letters[j - 1])
                edges[(J, j)] = insertion(ws, p, pair, base)
    cube = CubeDiagram(variant, vertices, edges, direction=1 if variant == "homological" else -1,
                       N=N, letters=letters, members=members)
    for (J, j) in edges:
        if cube.target_of(J, j) not in vertices:
            raise IndexSetMismatch(f"edge {(J, j)} leaves the cube")
    return cube


# -- totalization -------------------------------------------------------------

def totalize(cube: CubeDiagram, check: bool = True) -> FunctorMatrix:
    """Total functor matrix; basis keys ``(J, key)``.

    Raises ``NonCommutingCube`` when the total differential fails ``d^2 = 0``,
    which for chain-map edges happens exactly when some square fails to commute.
    """
    if not cube.vertices:
        raise IndexSetMismatch("empty cube")
    some = next(iter(cube.vertices.values()))
    source, target = some.source, some.target
    for V in cube.vertices.values():
        if (V.source, V.target) != (source, target):
            raise IndexSetMismatch("cube vertices with different index sets")
    out_edges: Dict[Twins, List[Tuple[int, Twins, Transformation]]] = {}
    for (J, j), e in cube.edges.items():
        out_edges.setdefault(J, []).append((edge_sign(J, j), cube.target_of(J, j), e))
    entries: Dict = {}
    ts_all = {ts for V in cube.vertices.values() for ts in V.entries}
    for ts in sorted(ts_all, key=repr):
        basis: Dict = {}
        d: SparseMap = {}
        for J, V in cube.vertices.items():
            C = V.entries.get(ts)
            if C is None:
                continue
            off = cube.degree_offset(J)
            inner = _sign(len(J))
            for k, m in C.basis.items():
                basis[(J, k)] = m + off
                row = {(J, t): inner * c for t, c in C.d.get(k, {}).items()}
                for eps, K, e in out_edges.get(J, ()):
                    for t, c in e.component(*ts).get(k, {}).items():
                        row[(K, t)] = row.get((K, t), 0) + eps * c
                if row:
                    d[(J, k)] = row
        entries[ts] = Complex(basis, d)
    tot = FunctorMatrix(source, target, entries, label="Tot")
    if check and not tot.d_squared_zero():
        raise NonCommutingCube("total differential does not square to zero")
    return tot


# -- graded dimensions without building differentials ------------------------

def _poly_mul(a: Mapping[int, int], b: Mapping[int, int]) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return out


def _poly_add(into: Dict[int, int], a: Mapping[int, int]) -> None:
    for i, x in a.items():
        into[i] = into.get(i, 0) + x


def word_graded_dims(letters: Sequence[FunctorMatrix], base=None) -> Dict[Tuple, Dict[int, int]]:
    """Graded dims of each entry of a composite, by convolution along paths."""
    letters = list(letters)
    if not letters:
        return {(x, x): {0: 1} for x in base}
    cur = {ts: C.dims() for ts, C in letters[0].entries.items()}
    for L in letters[1:]:
        nxt: Dict[Tuple, Dict[int, int]] = {}
        for (t0, tm), p in cur.items():
            for (u, s), C in L.entries.items():
                if u == tm:
                    _poly_add(nxt.setdefault((t0, s), {}), _poly_mul(p, C.dims()))
        cur = nxt
    return cur


def twist_graded_dims(F: FunctorMatrix, N: int, variant: str = "homological") -> Dict[Tuple, Dict[int, int]]:
    """Graded dims of the totalized continuant cube, without building it."""
    _check_variant(variant)
    if N == 0:
        labels = F.target if variant == "homological" else F.source
        return {(x, x): {0: 1} for x in labels}
    letters = adjoint_string(F, N)
    base = _empty_base(letters, variant)
    out: Dict[Tuple, Dict[int, int]] = {}
    for c in cotwinned_subsets(N):
        off = c.depth if variant == "homological" else -c.depth
        for ts, p in word_graded_dims(_vertex_word(letters, c.members, variant), base).items():
            _poly_add(out.setdefault(ts, {}), {m + off: v for m, v in p.items()})
    return {ts: {m: v for m, v in sorted(p.items()) if v} for ts, p in out.items()}


def euler_of_dims(dims: Mapping[Tuple, Mapping[int, int]]) -> Dict[Tuple, int]:
    out = {}
    for ts, p in dims.items():
        chi = sum(_sign(m) * v for m, v in p.items())
        if chi:
            out[ts] = chi
    return out


__all__ = [
    "CubeDiagram", "VARIANTS", "adjoint_string", "continuant_cube", "edge_sign",
    "euler_of_dims", "totalize", "twist_graded_dims", "word_graded_dims",
]
