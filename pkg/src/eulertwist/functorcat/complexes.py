"""Finite cochain complexes of Q-vector spaces on keyed bases.

A complex is an ordered basis ``{key: degree}`` and a sparse differential
``{key: {key: coeff}}`` of degree +1.  Keys are arbitrary hashables, which
lets tensor products, duals and totalizations keep readable labels.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable, Mapping, Tuple

from ..errors import NotAChainMap, ShapeMismatch
from ..scalars import Mat, format_rational, parse_rational
from ..scalars.sparse import RankAccumulator, apply as sparse_apply, compose as sparse_compose

Key = Hashable
SparseMap = Dict[Key, Dict[Key, Fraction]]


def _clean(d: Mapping[Key, Mapping[Key, object]]) -> SparseMap:
    out: SparseMap = {}
    for k, row in d.items():
        r = {t: Fraction(c) for t, c in row.items() if c != 0}
        if r:
            out[k] = r
    return out


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


class Complex:
    __slots__ = ("basis", "d")

    def __init__(self, basis: Mapping[Key, int], d: Mapping[Key, Mapping[Key, object]] = (),
                 check: bool = False):
        self.basis: Dict[Key, int] = dict(basis)
        self.d: SparseMap = _clean(dict(d))
        if check:
            self.validate()

    # -- construction -----------------------------------------------------
    @classmethod
    def zero(cls) -> "Complex":
        return cls({})

    @classmethod
    def unit(cls, key: Key = ()) -> "Complex":
        """The ground field ``k`` in degree 0."""
        return cls({key: 0})

    @classmethod
    def trivial(cls, dims: Mapping[int, int]) -> "Complex":
        """``k^{dims[m]}`` in each degree ``m`` with zero differential."""
        return cls({(m, i): m for m in sorted(dims) for i in range(dims[m])})

    @classmethod
    def from_matrices(cls, dims: Mapping[int, int], diffs: Mapping[int, Mat] = (),
                      check: bool = True) -> "Complex":
        """Keys ``(degree, i)``; ``diffs[m]`` is the ``dims[m+1] x dims[m]`` matrix."""
        basis = {(m, i): m for m in sorted(dims) for i in range(dims[m])}
        d: SparseMap = {}
        for m, M in dict(diffs).items():
            if M.shape != (dims.get(m + 1, 0), dims.get(m, 0)):
                raise ShapeMismatch(f"d_{m} has shape {M.shape}")
            for j in range(M.cols):
                row = {(m + 1, i): M[i, j] for i in range(M.rows) if M[i, j] != 0}
                if row:
                    d[(m, j)] = row
        return cls(basis, d, check=check)

    # -- basic data ---------------------------------------------------------
    def __len__(self):
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def dims(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for m in self.basis.values():
            out[m] = out.get(m, 0) + 1
        return dict(sorted(out.items()))

    def euler(self) -> int:
        return sum(_sign(m) for m in self.basis.values())

    def apply(self, vec: Mapping[Key, Fraction]) -> Dict[Key, Fraction]:
        return sparse_apply(self.d, vec)

    def d_squared_zero(self) -> bool:
        return all(not self.apply(row) for row in self.d.values())

    def validate(self) -> None:
        for k, row in self.d.items():
            if k not in self.basis:
                raise ShapeMismatch(f"differential on unknown key {k!r}")
            for t in row:
                if self.basis.get(t) != self.basis[k] + 1:
                    raise ShapeMismatch(f"differential {k!r} -> {t!r} is not of degree +1")
        if not self.d_squared_zero():
            raise NotAChainMap("d o d != 0")

    # -- cohomology ----------------------------------------------------------
    def ranks(self) -> Dict[int, int]:
        """Rank of ``d_m`` for every degree ``m``."""
        index = {k: i for i, k in enumerate(self.basis)}
        acc: Dict[int, RankAccumulator] = {}
        for k, row in self.d.items():
            m = self.basis[k]
            a = acc.setdefault(m, RankAccumulator())
            a.add({index[t]: c for t, c in row.items()})
        return {m: a.rank for m, a in sorted(acc.items())}

    def cohomology(self) -> Dict[int, int]:
        """``{degree: dim H^degree}``, zero degrees omitted."""
        r = self.ranks()
        out = {}
        for m, n in self.dims().items():
            h = n - r.get(m, 0) - r.get(m - 1, 0)
            if h:
                out[m] = h
        return out

    def is_acyclic(self) -> bool:
        return not self.cohomology()

    # -- constructions -------------------------------------------------------
    def relabel(self, f) -> "Complex":
        return Complex({f(k): m for k, m in self.basis.items()},
                       {f(k): {f(t): c for t, c in row.items()} for k, row in self.d.items()})

    def shift(self, m: int) -> "Complex":
        """``C[m]``: ``C[m]^k = C^{k+m}``, differential times ``(-1)^m``."""
        s = _sign(m)
        return Complex({k: deg - m for k, deg in self.basis.items()},
                       {k: {t: s * c for t, c in row.items()} for k, row in self.d.items()})

    def dual(self) -> "Complex":
        """Graded dual on the same keys; ``(d phi) = (-1)^{|phi|} phi o d``."""
        basis = {k: -m for k, m in self.basis.items()}
        d: Dict[Key, Dict[Key, Fraction]] = {}
        for j, row in self.d.items():
            for k, c in row.items():
                d.setdefault(k, {})[j] = _sign(basis[k]) * c
        return Complex(basis, d)

    def to_json(self) -> dict:
        """Graded dims and per-degree matrices in the insertion order of keys."""
        by_deg: Dict[int, list] = {}
        for k, m in self.basis.items():
            by_deg.setdefault(m, []).append(k)
        pos = {k: i for ks in by_deg.values() for i, k in enumerate(ks)}
        diffs = {}
        for m, ks in sorted(by_deg.items()):
            tgt = by_deg.get(m + 1, [])
            if not tgt or not any(k in self.d for k in ks):
                continue
            rows = [[0] * len(ks) for _ in tgt]
            for j, k in enumerate(ks):
                for t, c in self.d.get(k, {}).items():
                    rows[pos[t]][j] = c
            diffs[str(m)] = [[format_rational(Fraction(c)) for c in r] for r in rows]
        return {"dims": {str(m): len(ks) for m, ks in sorted(by_deg.items())},
                "differentials": diffs}

    @classmethod
    def from_json(cls, data: Mapping) -> "Complex":
        dims = {int(m): int(n) for m, n in data.get("dims", {}).items()}
        diffs = {}
        for m, rows in data.get("differentials", {}).items():
            m = int(m)
            M = Mat(dims.get(m + 1, 0), dims.get(m, 0),
                    [parse_rational(x) for r in rows for x in r])
            diffs[m] = M
        return cls.from_matrices(dims, diffs)

    def __repr__(self):
        return f"Complex(dims={self.dims()})"


def tensor(A: Complex, B: Complex) -> Complex:
    """``A (x) B`` on keys ``(a, b)``; ``d(a b) = da b + (-1)^{|a|} a db``."""
    basis = {(a, b): ma + mb for a, ma in A.basis.items() for b, mb in B.basis.items()}
    d: SparseMap = {}
    for a, ma in A.basis.items():
        da = A.d.get(a, {})
        s = _sign(ma)
        for b in B.basis:
            row: Dict[Key, Fraction] = {}
            for t, c in da.items():
                row[(t, b)] = c
            for t, c in B.d.get(b, {}).items():
                row[(a, t)] = row.get((a, t), 0) + s * c
            if row:
                d[(a, b)] = row
    return Complex(basis, d)


def direct_sum(parts: Iterable[Tuple[Key, Complex]]) -> Complex:
    """Sum of complexes with keys prefixed by the given labels."""
    basis: Dict[Key, int] = {}
    d: SparseMap = {}
    for label, C in parts:
        for k, m in C.basis.items():
            basis[(label, k)] = m
        for k, row in C.d.items():
            d[(label, k)] = {(label, t): c for t, c in row.items()}
    return Complex(basis, d)


def is_chain_map(f: Mapping[Key, Mapping[Key, Fraction]], A: Complex, B: Complex) -> bool:
    """``f: A -> B`` of degree 0 with ``d_B f = f d_A``."""
    for k in A.basis:
        lhs = B.apply(f.get(k, {}))
        rhs = sparse_apply(f, A.d.get(k, {}))
        if lhs != rhs:
            return False
    return True


def compose_maps(g: Mapping, f: Mapping) -> SparseMap:
    """``g o f`` for sparse maps."""
    return sparse_compose(g, f)


def mapping_fiber(f: Mapping[Key, Mapping[Key, Fraction]], A: Complex, B: Complex) -> Complex:
    """``Fib(f)^k = A^k + B^{k-1}``, ``d(a) = d a + f a``, ``d(b) = -d b``."""
    basis = {("A", k): m for k, m in A.basis.items()}
    basis.update({("B", k): m + 1 for k, m in B.basis.items()})
    d: SparseMap = {}
    for k in A.basis:
        row = {("A", t): c for t, c in A.d.get(k, {}).items()}
        for t, c in f.get(k, {}).items():
            row[("B", t)] = c
        if row:
            d[("A", k)] = row
    for k, r in B.d.items():
        d[("B", k)] = {("B", t): -c for t, c in r.items()}
    return Complex(basis, d)


def mapping_cone(f: Mapping[Key, Mapping[Key, Fraction]], A: Complex, B: Complex) -> Complex:
    """``Cof(f) = Fib(f)[1]``."""
    return mapping_fiber(f, A, B).shift(1)


def shift_table(table: Mapping[int, int], m: int) -> Dict[int, int]:
    return {k - m: v for k, v in table.items()}


__all__ = [
    "Complex", "tensor", "direct_sum", "is_chain_map", "compose_maps",
    "mapping_fiber", "mapping_cone", "shift_table",
]
