"""Cotwinned subsets of ``[1, N]`` and the Fibonacci cube poset.

A subset is cotwinned when its complement splits into disjoint adjacent
pairs ("twins").  Encoding a cotwinned subset by the starting points of its
missing twins gives a separated 0/1 sequence of length ``N - 1``.

Fibonacci numbers here use ``phi_0 = phi_1 = 1``, ``phi_2 = 2``, so
``phi_N`` is the classical ``F_{N+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

Seq = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Cotwinned:
    N: int
    members: Tuple[int, ...]

    @property
    def depth(self) -> int:
        return (self.N - len(self.members)) // 2

    @property
    def missing_twins(self) -> Tuple[int, ...]:
        """Starts ``i`` of the removed pairs ``{i, i+1}``, increasing."""
        present = set(self.members)
        out = []
        i = 1
        while i <= self.N:
            if i not in present:
                out.append(i)
                i += 2
            else:
                i += 1
        return tuple(out)

    def to_sequence(self) -> Seq:
        """The separated (0,1)-sequence recording missing twins."""
        eps = [0] * max(self.N - 1, 0)
        for i in self.missing_twins:
            eps[i - 1] = 1
        return tuple(eps)

    @classmethod
    def from_sequence(cls, eps: Seq) -> "Cotwinned":
        N = len(eps) + 1
        removed = set()
        for i, e in enumerate(eps, start=1):
            if e:
                removed.update((i, i + 1))
        return cls(N, tuple(j for j in range(1, N + 1) if j not in removed))

    def __str__(self):
        return "{" + ",".join(map(str, self.members)) + "}"


def is_cotwinned(members: Iterable[int], N: int) -> bool:
    present = set(members)
    if any(not 1 <= m <= N for m in present):
        return False
    i = 1
    while i <= N:
        if i in present:
            i += 1
        elif i + 1 <= N and i + 1 not in present:
            i += 2
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _cot_members(N: int) -> Tuple[Tuple[int, ...], ...]:
    # Cot[1,N] = (Cot[1,N-1] with N added) + Cot[1,N-2] (twin {N-1,N} missing)
    if N <= 0:
        return ((),)
    if N == 1:
        return ((1,),)
    return tuple(m + (N,) for m in _cot_members(N - 1)) + _cot_members(N - 2)


def cotwinned_subsets(N: int) -> List[Cotwinned]:
    """All cotwinned subsets of ``[1, N]``, by depth then missing twins."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    subs = [Cotwinned(N, m) for m in _cot_members(N)]
    return sorted(subs, key=lambda c: (c.depth, c.missing_twins))


def fibonacci_number(N: int) -> int:
    a, b = 1, 1
    for _ in range(N):
        a, b = b, a + b
    return a


def depth_counts(N: int) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for c in cotwinned_subsets(N):
        counts[c.depth] = counts.get(c.depth, 0) + 1
    return counts


def expected_depth_counts(N: int) -> Dict[int, int]:
    return {k: comb(N - k, k) for k in range(N // 2 + 1)}


def is_separated(eps: Seq) -> bool:
    return all(not (eps[i] and eps[i + 1]) for i in range(len(eps) - 1))


def cube_leq(a: Seq, b: Seq) -> bool:
    return all(x <= y for x, y in zip(a, b))


def iota(eps: Seq) -> Seq:
    """Embedding of the (N-1)st cube into the Nth: append 0."""
    return tuple(eps) + (0,)


def iota_tilde(eps: Seq) -> Seq:
    """Embedding of the (N-2)nd cube into the Nth: append 0, 1."""
    return tuple(eps) + (0, 1)


class FibPoset:
    """The Fibonacci cube of separated sequences of length ``N - 1``.

    Only upward covers are stored; :meth:`leq` is the componentwise order
    and :meth:`closure` rebuilds the full relation from the covers.
    """

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("Fibonacci cube needs N >= 1")
        self.N = N
        self.elements: List[Seq] = [c.to_sequence() for c in cotwinned_subsets(N)]
        self._index = {e: i for i, e in enumerate(self.elements)}
        self.covers: Dict[Seq, List[Seq]] = {}
        for e in self.elements:
            ups = []
            for i, v in enumerate(e):
                if v == 0:
                    f = e[:i] + (1,) + e[i + 1:]
                    if f in self._index:
                        ups.append(f)
            self.covers[e] = ups

    def __len__(self):
        return len(self.elements)

    def __contains__(self, eps):
        return tuple(eps) in self._index

    def leq(self, a: Seq, b: Seq) -> bool:
        return cube_leq(a, b)

    def to_cotwinned(self, eps: Seq) -> Cotwinned:
        return Cotwinned.from_sequence(eps)

    def from_cotwinned(self, c: Cotwinned) -> Seq:
        if c.N != self.N:
            raise ValueError(f"subset of [1,{c.N}] in the cube for N={self.N}")
        return c.to_sequence()

    def minimum(self) -> Seq:
        return tuple([0] * (self.N - 1))

    def cover_pairs(self) -> List[Tuple[Seq, Seq]]:
        return [(a, b) for a in self.elements for b in self.covers[a]]

    def closure(self) -> Set[Tuple[Seq, Seq]]:
        """All pairs ``a <= b`` derived from the covers (reflexive)."""
        rel = set()
        for a in self.elements:
            stack, seen = [a], {a}
            while stack:
                x = stack.pop()
                for y in self.covers[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            rel.update((a, b) for b in seen)
        return rel

    # -- structural checks ----------------------------------------------
    def check_order_ideal(self) -> bool:
        """Downward closure inside the (N-1)-cube."""
        for e in self.elements:
            for i, v in enumerate(e):
                if v and e[:i] + (0,) + e[i + 1:] not in self._index:
                    return False
        return all(is_separated(e) for e in self.elements)

    def check_closure_matches_order(self) -> bool:
        rel = self.closure()
        return all(((a, b) in rel) == cube_leq(a, b)
                   for a in self.elements for b in self.elements)

    def check_grothendieck(self) -> bool:
        """Split into the appended-0 and appended-(0,1) copies and compare
        the order with the Grothendieck construction of ``iota``."""
        if self.N < 3:
            return True
        big = FibPoset(self.N - 1)
        small = FibPoset(self.N - 2)
        copy_b = {iota(b): b for b in big.elements}
        copy_a = {iota_tilde(a): a for a in small.elements}
        if set(copy_b) & set(copy_a) or set(copy_b) | set(copy_a) != set(self.elements):
            return False
        for x in self.elements:
            for y in self.elements:
                actual = cube_leq(x, y)
                if x in copy_b and y in copy_b:
                    expected = cube_leq(copy_b[x], copy_b[y])
                elif x in copy_a and y in copy_a:
                    expected = cube_leq(copy_a[x], copy_a[y])
                elif x in copy_b:
                    expected = cube_leq(copy_b[x], iota(copy_a[y]))
                else:
                    expected = False
                if actual != expected:
                    return False
        return True


def fibonacci_cube(N: int) -> FibPoset:
    return FibPoset(N)
