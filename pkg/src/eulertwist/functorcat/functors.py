"""Functor matrices between products of ``D(Q)`` and their adjunction data.

A functor ``F: prod_S D(Q) -> prod_T D(Q)`` is a matrix of complexes
``F[t, s]`` acting by ``(F X)_t = sum_s F[t, s] (x) X_s``.  Composites of
several letters are kept flat: a basis key of ``L_1 ... L_k`` at entry
``(t_0, t_k)`` is ``(path, keys)`` with ``path = (t_0, ..., t_k)`` and
``keys[i]`` a basis key of ``L_{i+1}[t_i, t_{i+1}]``.

The right adjoint is the entrywise graded dual with transposed indexing.
Its own right adjoint is identified with ``F``, so the adjoint string is
``F, F*, F, F*, ...`` and only two adjunctions occur:

* ``(F, F*)``: counit ``v (x) phi -> phi(v)``, unit ``1 -> sum eps_k (x) e_k``;
* ``(F*, F)``: counit ``phi (x) v -> (-1)^{|v|} phi(v)``,
  unit ``1 -> sum (-1)^{|e_k|} e_k (x) eps_k``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from ..errors import IndexSetMismatch, NotAChainMap
from .complexes import Complex, SparseMap, compose_maps, is_chain_map

Label = Hashable
Entry = Tuple[Label, Label]


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


class FunctorMatrix:
    __slots__ = ("source", "target", "entries", "dual_of", "label", "_adjoint")

    def __init__(self, source: Sequence[Label], target: Sequence[Label],
                 entries: Mapping[Entry, Complex] = (), dual_of: "FunctorMatrix | None" = None,
                 label: str = "F"):
        self.source = tuple(source)
        self.target = tuple(target)
        self.entries: Dict[Entry, Complex] = {}
        for (t, s), C in dict(entries).items():
            if t not in self.target or s not in self.source:
                raise IndexSetMismatch(f"entry ({t!r}, {s!r}) outside the index sets")
            if not C.is_zero():
                self.entries[(t, s)] = C
        self.dual_of = dual_of
        self.label = label
        self._adjoint = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def identity(cls, labels: Sequence[Label]) -> "FunctorMatrix":
        return cls(labels, labels, {(x, x): Complex.unit() for x in labels}, label="Id")

    @classmethod
    def zero(cls, source: Sequence[Label], target: Sequence[Label]) -> "FunctorMatrix":
        return cls(source, target, {}, label="0")

    @classmethod
    def tensor_by(cls, C: Complex, label: str = "F") -> "FunctorMatrix":
        """``- (x) C`` on the singleton index set."""
        return cls((0,), (0,), {(0, 0): C}, label=label)

    @classmethod
    def permutation_of_shifts(cls, perm: Sequence[int], shifts: Sequence[int]) -> "FunctorMatrix":
        """``X_s -> X_s[shifts[s]]`` placed at ``perm[s]``; an equivalence."""
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise IndexSetMismatch("perm must be a permutation of range(n)")
        entries = {(perm[s], s): Complex({(-shifts[s], 0): -shifts[s]}) for s in range(n)}
        return cls(range(n), range(n), entries, label="P")

    # -- data ---------------------------------------------------------------
    def entry(self, t: Label, s: Label) -> Complex:
        return self.entries.get((t, s), _ZERO)

    @property
    def is_dual(self) -> bool:
        return self.dual_of is not None

    def is_zero(self) -> bool:
        return not self.entries

    @property
    def total_dim(self) -> int:
        return sum(C.dim for C in self.entries.values())

    def d_squared_zero(self) -> bool:
        return all(C.d_squared_zero() for C in self.entries.values())

    def euler_matrix(self) -> Dict[Entry, int]:
        return {ts: C.euler() for ts, C in self.entries.items() if C.euler()}

    def cohomology_table(self) -> Dict[Entry, Dict[int, int]]:
        out = {}
        for ts, C in self.entries.items():
            h = C.cohomology()
            if h:
                out[ts] = h
        return out

    def is_acyclic(self) -> bool:
        return not self.cohomology_table()

    def same_data(self, other: "FunctorMatrix") -> bool:
        """Equal index sets, graded dims and differentials in key order."""
        if (self.source, self.target) != (other.source, other.target):
            return False
        if set(self.entries) != set(other.entries):
            return False
        return all(self.entries[k].to_json() == other.entries[k].to_json() for k in self.entries)

    def to_json(self) -> dict:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "entries": [dict(target=t, source=s, **C.to_json())
                        for (t, s), C in self.entries.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "FunctorMatrix":
        source = [_label(x) for x in data["source"]]
        target = [_label(x) for x in data["target"]]
        entries = {}
        for e in data.get("entries", []):
            key = (_label(e["target"]), _label(e["source"]))
            if key in entries:
                raise IndexSetMismatch(f"duplicate entry {key}")
            entries[key] = Complex.from_json(e)
        return cls(source, target, entries)

    def __repr__(self):
        return f"FunctorMatrix({self.label}: {list(self.source)} -> {list(self.target)}, dim {self.total_dim})"


_ZERO = Complex.zero()


def _label(x):
    return tuple(x) if isinstance(x, list) else x


def table_to_json(table: Mapping[Entry, Mapping[int, int]]) -> Dict[str, Dict[str, int]]:
    return {f"{t}|{s}": {str(m): v for m, v in sorted(h.items())}
            for (t, s), h in sorted(table.items(), key=lambda kv: repr(kv[0]))}


# -- adjoints and composites -------------------------------------------------

def right_adjoint_model(F: FunctorMatrix) -> FunctorMatrix:
    """Entrywise graded dual, transposed; the adjoint of ``F*`` is ``F``."""
    if F.dual_of is not None:
        return F.dual_of
    if F._adjoint is None:
        entries = {(s, t): C.dual() for (t, s), C in F.entries.items()}
        F._adjoint = FunctorMatrix(F.target, F.source, entries, dual_of=F, label=F.label + "*")
    return F._adjoint


def are_adjoint(L: FunctorMatrix, R: FunctorMatrix) -> bool:
    """Whether ``(L, R)`` is one of the two modelled adjunctions."""
    return right_adjoint_model(L) is R


def word(letters: Sequence[FunctorMatrix], base: Optional[Sequence[Label]] = None) -> FunctorMatrix:
    """The composite ``L_1 o ... o L_k`` with flat ``(path, keys)`` basis keys.

    The empty word needs ``base`` and gives the identity with keys ``((x,), ())``.
    """
    letters = list(letters)
    if not letters:
        if base is None:
            raise IndexSetMismatch("the empty word needs a base index set")
        return FunctorMatrix(base, base, {(x, x): Complex({((x,), ()): 0}) for x in base}, label="Id")
    for a, b in zip(letters, letters[1:]):
        if a.source != b.target:
            raise IndexSetMismatch(f"cannot compose {a.label} after {b.label}")
    # partial[(t0, tm)] = list of (path, keys, degrees)
    partial: Dict[Entry, list] = {}
    first = letters[0]
    for (t, s), C in first.entries.items():
        partial.setdefault((t, s), []).extend(((t, s), (k,), (m,)) for k, m in C.basis.items())
    for L in letters[1:]:
        nxt: Dict[Entry, list] = {}
        for (t0, tm), elems in partial.items():
            for s in L.source:
                C = L.entries.get((tm, s))
                if C is None:
                    continue
                out = nxt.setdefault((t0, s), [])
                for path, keys, degs in elems:
                    for k, m in C.basis.items():
                        out.append((path + (s,), keys + (k,), degs + (m,)))
        partial = nxt
    entries = {}
    for ts, elems in partial.items():
        basis = {}
        d: SparseMap = {}
        for path, keys, degs in elems:
            key = (path, keys)
            basis[key] = sum(degs)
            row: Dict = {}
            sign = 1
            for i, L in enumerate(letters):
                C = L.entries[(path[i], path[i + 1])]
                for t, c in C.d.get(keys[i], {}).items():
                    nk = (path, keys[:i] + (t,) + keys[i + 1:])
                    row[nk] = row.get(nk, 0) + sign * c
                sign *= _sign(degs[i])
            if row:
                d[key] = row
        entries[ts] = Complex(basis, d)
    label = "".join(L.label for L in letters)
    return FunctorMatrix(letters[-1].source, letters[0].target, entries, label=label)


def compose(G: FunctorMatrix, F: FunctorMatrix) -> FunctorMatrix:
    """``G o F``; entry keys are ``((u, t, s), (g, f))``."""
    if G.source != F.target:
        raise IndexSetMismatch(f"source of {G.label} is not the target of {F.label}")
    return word([G, F])


# -- transformations ---------------------------------------------------------

class Transformation:
    """Per-entry degree-0 maps ``source[t, s] -> target[t, s]``."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source: FunctorMatrix, target: FunctorMatrix,
                 components: Mapping[Entry, SparseMap]):
        if (source.source, source.target) != (target.source, target.target):
            raise IndexSetMismatch("transformation between functors with different index sets")
        self.source = source
        self.target = target
        self.components = {ts: m for ts, m in components.items() if m}

    def component(self, t, s) -> SparseMap:
        return self.components.get((t, s), {})

    def is_chain_map(self) -> bool:
        keys = set(self.source.entries) | set(self.target.entries)
        return all(is_chain_map(self.component(*ts), self.source.entry(*ts), self.target.entry(*ts))
                   for ts in keys)

    def require_chain_map(self) -> "Transformation":
        if not self.is_chain_map():
            raise NotAChainMap(f"{self.source.label} -> {self.target.label} is not a chain map")
        return self

    def __matmul__(self, other: "Transformation") -> "Transformation":
        """Vertical composite ``self o other``."""
        comps = {ts: compose_maps(self.component(*ts), m) for ts, m in other.components.items()}
        return Transformation(other.source, self.target, comps)

    def is_identity(self) -> bool:
        if not (self.source.same_data(self.target)):
            return False
        for ts, C in self.source.entries.items():
            m = self.component(*ts)
            for k in C.basis:
                if m.get(k) != {k: 1}:
                    return False
        return True

    def rank_matrix(self) -> Dict[Entry, int]:
        from ..scalars.sparse import sparse_rank
        out = {}
        for ts, m in self.components.items():
            index = {k: i for i, k in enumerate(self.target.entry(*ts).basis)}
            out[ts] = sparse_rank({index[t]: c for t, c in row.items()} for row in m.values())
        return out


def _pair_kind(L: FunctorMatrix, R: FunctorMatrix) -> str:
    if not are_adjoint(L, R):
        raise NotAChainMap(f"({L.label}, {R.label}) is not a modelled adjoint pair")
    return "dual_right" if R.is_dual else "dual_left"


def contraction(letters: Sequence[FunctorMatrix], p: int,
                base: Optional[Sequence[Label]] = None) -> Transformation:
    """Counit of ``(letters[p], letters[p+1])`` whiskered into the word."""
    letters = list(letters)
    kind = _pair_kind(letters[p], letters[p + 1])
    right = letters[p + 1]
    src = word(letters, base)
    rest = letters[:p] + letters[p + 2:]
    tgt = word(rest, base if base is not None else (letters[-1].source if rest == [] else None))
    comps: Dict[Entry, SparseMap] = {}
    for ts, C in src.entries.items():
        m: SparseMap = {}
        for key in C.basis:
            path, keys = key
            if path[p] != path[p + 2] or keys[p] != keys[p + 1]:
                continue
            c = 1
            if kind == "dual_left":   # phi (x) v -> (-1)^{|v|} phi(v)
                c = _sign(right.entries[(path[p + 1], path[p + 2])].basis[keys[p + 1]])
            nk = (path[:p + 1] + path[p + 3:], keys[:p] + keys[p + 2:])
            m[key] = {nk: Fraction(c)}
        comps[ts] = m
    return Transformation(src, tgt, comps)


def insertion(letters: Sequence[FunctorMatrix], p: int, pair: Tuple[FunctorMatrix, FunctorMatrix],
              base: Optional[Sequence[Label]] = None) -> Transformation:
    """Unit ``Id -> A B`` of the adjunction ``(B, A)`` inserted before ``letters[p]``."""
    letters = list(letters)
    A, B = pair
    kind = _pair_kind(B, A)
    src = word(letters, base)
    tgt = word(letters[:p] + [A, B] + letters[p:], base)
    comps: Dict[Entry, SparseMap] = {}
    for ts, C in src.entries.items():
        m: SparseMap = {}
        for key in C.basis:
            path, keys = key
            x = path[p]
            img = {}
            for t in A.source:
                entry = A.entries.get((x, t))
                if entry is None:
                    continue
                for k, deg in entry.basis.items():
                    c = 1 if kind == "dual_right" else _sign(deg)
                    nk = (path[:p + 1] + (t, x) + path[p + 1:], keys[:p] + (k, k) + keys[p:])
                    img[nk] = Fraction(c)
            if img:
                m[key] = img
        comps[ts] = m
    return Transformation(src, tgt, comps)


def unit(F: FunctorMatrix) -> Transformation:
    """``Id -> F* F`` for the adjunction ``(F, F*)``."""
    return insertion([], 0, (right_adjoint_model(F), F), base=F.source)


def counit(F: FunctorMatrix) -> Transformation:
    """``F F* -> Id`` for the adjunction ``(F, F*)``."""
    return contraction([F, right_adjoint_model(F)], 0, base=F.target)


def triangle_identities(F: FunctorMatrix) -> Dict[str, bool]:
    """Both zigzag identities for ``(F, F*)`` and for ``(F*, F)``."""
    Fs = right_adjoint_model(F)
    out = {}
    # (epsilon F)(F eta) = id_F and (F* epsilon)(eta F*) = id_F*
    out["F,F*:left"] = (contraction([F, Fs, F], 0) @ insertion([F], 1, (Fs, F))).is_identity()
    out["F,F*:right"] = (contraction([Fs, F, Fs], 1) @ insertion([Fs], 0, (Fs, F))).is_identity()
    # the same for the second adjunction (F*, F)
    out["F*,F:left"] = (contraction([Fs, F, Fs], 0) @ insertion([Fs], 1, (F, Fs))).is_identity()
    out["F*,F:right"] = (contraction([F, Fs, F], 1) @ insertion([F], 0, (F, Fs))).is_identity()
    return out


def adjunction_maps_are_chain_maps(F: FunctorMatrix) -> bool:
    Fs = right_adjoint_model(F)
    maps = [unit(F), counit(F), unit(Fs), counit(Fs)]
    return all(m.is_chain_map() for m in maps)


__all__ = [
    "FunctorMatrix", "Transformation", "right_adjoint_model", "are_adjoint",
    "word", "compose", "contraction", "insertion", "unit", "counit",
    "triangle_identities", "adjunction_maps_are_chain_maps", "table_to_json",
]
