"""Grothendieck-group shadows of Dynkin quivers of types A and D.

K0 of the derived category of representations is modelled as Q^n (dimension
vectors) with the Euler form as Gram matrix.  Shifts act as +-identity, so
the categorical relations among tau and [1] become matrix identities for the
Coxeter matrix ``C = -E^{-1} E^T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .bilinear import (BilinearSpace, Subspace, chain_mutations, orthogonal_at,
                       orthogonal_chain, serre)
from .errors import UnsupportedQuiver
from .report import Report
from .scalars import Mat, mat_inverse


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: Tuple[Tuple[int, int], ...]
    kind: str = ""

    @classmethod
    def A(cls, n: int) -> "Quiver":
        """The linear orientation ``1 -> 2 -> ... -> n``."""
        if n < 1:
            raise UnsupportedQuiver("A_n needs n >= 1")
        return cls(n, tuple((i, i + 1) for i in range(1, n)), "A")

    @classmethod
    def D(cls, n: int) -> "Quiver":
        """``1 -> ... -> n-2`` followed by the two sinks ``n-1`` and ``n``."""
        if n < 4:
            raise UnsupportedQuiver("D_n needs n >= 4")
        arrows = [(i, i + 1) for i in range(1, n - 2)] + [(n - 2, n - 1), (n - 2, n)]
        return cls(n, tuple(arrows), "D")

    @property
    def name(self) -> str:
        return f"{self.kind}{self.n}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "n": self.n, "arrows": [list(a) for a in self.arrows]}


def quiver_from_name(kind: str, n: int) -> Quiver:
    if kind == "A":
        return Quiver.A(n)
    if kind == "D":
        return Quiver.D(n)
    raise UnsupportedQuiver(f"unsupported quiver type {kind!r}")


def _require_supported(q: Quiver) -> None:
    if q.kind == "A" and q == Quiver.A(q.n):
        return
    if q.kind == "D" and q.n >= 4 and q == Quiver.D(q.n):
        return
    raise UnsupportedQuiver(f"only the standard A_n and D_n orientations are supported, got {q}")


@dataclass
class K0Lattice:
    quiver: Quiver
    space: BilinearSpace
    coxeter: Mat

    @property
    def euler(self) -> Mat:
        return self.space.gram

    def e(self, *vertices: int) -> List[int]:
        """Sum of the basis vectors at the given (1-based) vertices."""
        v = [0] * self.quiver.n
        for i in vertices:
            v[i - 1] += 1
        return v

    def span(self, *vectors: Sequence[int]) -> Subspace:
        return Subspace.span(self.space, [list(v) for v in vectors])


def euler_matrix(q: Quiver) -> Mat:
    n = q.n
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for s, t in q.arrows:
        rows[s - 1][t - 1] -= 1
    return Mat.from_rows(rows)


def coxeter_matrix(E: Mat) -> Mat:
    return -(mat_inverse(E) @ E.T)


def euler_form(q: Quiver) -> K0Lattice:
    _require_supported(q)
    E = euler_matrix(q)
    return K0Lattice(q, BilinearSpace(E, label=q.name), coxeter_matrix(E))


def theta(n: int) -> Mat:
    """Permutation matrix swapping the two sinks ``n-1`` and ``n`` of D_n."""
    perm = list(range(n))
    perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
    return Mat.from_rows([[1 if perm[i] == j else 0 for j in range(n)] for i in range(n)])


def coxeter_order(C: Mat, bound: int = 200) -> Tuple[Optional[int], Optional[int]]:
    """Least ``q`` with ``C^q = +-Id`` and that sign."""
    Id = Mat.identity(C.rows, C.field)
    P = Id
    for q in range(1, bound + 1):
        P = P @ C
        if P == Id:
            return q, 1
        if P == -Id:
            return q, -1
    return None, None


def coxeter_relation_check(q: Quiver) -> Report:
    lat = euler_form(q)
    C, n = lat.coxeter, q.n
    Id = Mat.identity(n)
    rep = Report("coxeter_relation", {"quiver": q.name})
    rep.add("coxeter_isometry", C.T @ lat.euler @ C == lat.euler)
    if q.kind == "A":
        rep.add(f"C^{n + 1}=Id", C ** (n + 1) == Id)
    elif n % 2 == 0:
        rep.add(f"C^{n - 1}=-Id", C ** (n - 1) == -Id)
    else:
        rep.add(f"C^{n - 1}=-Theta", C ** (n - 1) == -theta(n))
        rep.add(f"C^{2 * (n - 1)}=Id", C ** (2 * (n - 1)) == Id)
    order, sign = coxeter_order(C)
    rep.data["coxeter_order"] = order
    rep.data["coxeter_sign"] = sign
    return rep


# -- periodic SOD chains --------------------------------------------------

def _a_table(lat: K0Lattice) -> Dict[int, Subspace]:
    """The n = 3 mutation table, indexed by the left orthogonal step."""
    e = lat.e
    return {
        -1: lat.span(e(2), e(3)),          # B
        -2: lat.span(e(1, 2, 3)),          # A'
        -3: lat.span(e(1), e(2)),          # B'
        -4: lat.span(e(3)),                # A''
        -5: lat.span(e(1), e(2, 3)),       # B''
        -6: lat.span(e(2)),                # A^(3)
        -7: lat.span(e(1, 2), e(3)),       # B^(3)
        -8: lat.span(e(1)),                # A^(4)
        # the displayed B^(4) repeats A' on the right; the summand forced by
        # A^(4) = A is B itself
        -9: lat.span(e(2), e(3)),          # B^(4)
    }


def _d4_table(lat: K0Lattice) -> Dict[int, Subspace]:
    e = lat.e
    return {
        -1: lat.span(e(2), e(3), e(4)),           # B
        -2: lat.span(e(1, 2, 3, 4)),              # A^(1)
        -3: lat.span(e(1), e(2, 3), e(2, 4)),     # B^(1)
        -4: lat.span(e(2)),                       # A^(2)
        -5: lat.span(e(1, 2), e(3), e(4)),        # B^(2)
        -6: lat.span(e(1)),                       # A^(3)
        -7: lat.span(e(2), e(3), e(4)),           # B^(3)
    }


def _sod_chain(q: Quiver, expected_period: int, table) -> Report:
    lat = euler_form(q)
    A = lat.span(lat.e(1))
    B = lat.span(*[lat.e(i) for i in range(2, q.n + 1)])
    rep = Report("sod_chain", {"quiver": q.name, "expected_period": expected_period})
    rep.add("B_is_left_orthogonal", orthogonal_at(A, -1) == B)
    chain, period = orthogonal_chain(A, expected_period)
    rep.add("periodic", chain[expected_period] == A, least_period=period)
    order, _ = coxeter_order(lat.coxeter)
    rep.add("period_divides_2q", period is not None and order is not None
            and (2 * order) % period == 0, q=order)
    if table is not None:
        for i, expected in sorted(table(lat).items(), reverse=True):
            rep.add(f"table[{-i:02d}]", orthogonal_at(A, i) == expected)
    # composite mutations: mu_{2i} is the restriction of S^{-i}
    X, _, mu = chain_mutations(A, expected_period)
    S = serre(lat.space).matrix
    serre_ok = all((S ** -i) @ X[2 * i].basis == A.basis @ mu[2 * i].matrix
                   for i in range(1, expected_period // 2 + 1))
    rep.add("even_composites_are_serre_powers", serre_ok)
    # S^{N/2} = (-C)^{N/2} is +-Id on A; for n = 3 this is T_A = [-2]
    twist_A = mu[expected_period].matrix
    sign = (-1) ** (q.n + 1) if q.kind == "A" else (-1) ** q.n
    rep.add("twist_A_sign", twist_A == Mat.identity(1).scale(sign), sign=sign)
    if q.kind == "A":
        twist_B = mu[expected_period - 1].matrix
        rep.add("twist_B_coxeter", twist_B == coxeter_matrix(B.restricted_gram()))
    rep.data["least_period"] = period
    rep.data["coxeter_order"] = order
    return rep


def sod_chain_an(n: int) -> Report:
    table = _a_table if n == 3 else None
    return _sod_chain(Quiver.A(n), 2 * (n + 1), table)


def sod_chain_dn(n: int) -> Report:
    table = _d4_table if n == 4 else None
    return _sod_chain(Quiver.D(n), 2 * (n - 1), table)


def quiver_report(kind: str, n: int) -> Report:
    q = quiver_from_name(kind, n)
    rep = Report("quiver", {"quiver": q.name})
    rep.extend(coxeter_relation_check(q), "coxeter.")
    chain = sod_chain_an(n) if kind == "A" else sod_chain_dn(n)
    rep.extend(chain, "chain.")
    rep.data.update(chain.data)
    return rep


__all__ = [
    "Quiver", "K0Lattice", "quiver_from_name", "euler_matrix", "coxeter_matrix",
    "euler_form", "theta", "coxeter_order", "coxeter_relation_check",
    "sod_chain_an", "sod_chain_dn", "quiver_report",
]
