"""Sparse rational matrices as ``{row_key: {col_key: Fraction}}`` dicts.

Only what the chain-complex code needs: products, composition checks and
rank by incremental pivoting. Column keys must be mutually comparable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, Iterable

SparseRow = Dict[Hashable, Fraction]
SparseMat = Dict[Hashable, SparseRow]


def add_into(target: SparseRow, row: SparseRow, scale=1) -> None:
    """``target += scale * row`` in place, dropping cancelled entries."""
    for k, v in row.items():
        nv = target.get(k, 0) + scale * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


def apply(mat: SparseMat, vec: SparseRow) -> SparseRow:
    """Image of ``vec`` (a combination of row keys) under the map whose
    value on each basis key ``b`` is ``mat[b]``."""
    out: SparseRow = {}
    for b, c in vec.items():
        img = mat.get(b)
        if img:
            add_into(out, img, c)
    return out


def compose(second: SparseMat, first: SparseMat) -> SparseMat:
    """The map ``second o first`` in the same key-to-image convention."""
    out = {}
    for b, img in first.items():
        res = apply(second, img)
        if res:
            out[b] = res
    return out


class RankAccumulator:
    """Echelon basis grown one vector at a time."""

    def __init__(self):
        self.pivots: Dict[Hashable, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: SparseRow) -> SparseRow:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            c = min(row)
            p = self.pivots.get(c)
            if p is None:
                return row
            add_into(row, p, -row[c])
        return row

    def add(self, row: SparseRow) -> bool:
        """Insert ``row``; return True when it raised the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        inv = 1 / row[c]
        self.pivots[c] = {k: v * inv for k, v in row.items()}
        return True

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)


def sparse_rank(rows: Iterable[SparseRow]) -> int:
    acc = RankAccumulator()
    for r in rows:
        acc.add(r)
    return acc.rank
