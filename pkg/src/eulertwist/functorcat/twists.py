"""Higher twists and cotwists, their triangles, duality and sphericity.

``higher_twist(F, N, "homological")`` is the totalized continuant cube of
``F, F*, F, ...`` (the twist ``E_N``); the cohomological variant gives the
cotwist ``E^N``.  Degrees follow the cube module: the full monomial sits in
degree 0 and the depth-``d`` vertex in degree ``+d`` or ``-d``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from ..errors import CriterionUnavailable
from ..report import Report
from .complexes import Complex, SparseMap, is_chain_map, mapping_cone, mapping_fiber
from .cubes import (_check_variant, adjoint_string, continuant_cube, euler_of_dims,
                    totalize, twist_graded_dims)
from .functors import FunctorMatrix, compose, right_adjoint_model, table_to_json

Entry = Tuple


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _identity_twist(labels) -> FunctorMatrix:
    # keyed like a totalization of the empty word
    entries = {(x, x): Complex({((), ((x,), ())): 0}) for x in labels}
    return FunctorMatrix(labels, labels, entries, label="Id")


def twist(F: FunctorMatrix, N: int, variant: str = "homological") -> FunctorMatrix:
    """``E_N(F)`` or ``E^N(F)`` as a functor matrix; ``N = 0`` gives the identity."""
    _check_variant(variant)
    if N < 0:
        raise ValueError("N must be nonnegative")
    if N == 0:
        return _identity_twist(F.target if variant == "homological" else F.source)
    return totalize(continuant_cube(F, N, variant))


def higher_twist(F: FunctorMatrix, N: int, variant: str = "homological"):
    """``(E, cohomology table)`` for the ``N``-th twist or cotwist."""
    E = twist(F, N, variant)
    return E, E.cohomology_table()


def twist_euler(F: FunctorMatrix, N: int, variant: str = "homological") -> Dict[Entry, int]:
    """Euler matrix of the ``N``-th (co)twist, from graded dims only."""
    return euler_of_dims(twist_graded_dims(F, N, variant))


def twist_size(F: FunctorMatrix, N: int, variant: str = "homological") -> int:
    return sum(sum(p.values()) for p in twist_graded_dims(F, N, variant).values())


def _table_json(E: FunctorMatrix) -> dict:
    return table_to_json(E.cohomology_table())


def _same_table(E1: FunctorMatrix, E2: FunctorMatrix) -> bool:
    return (E1.source, E1.target) == (E2.source, E2.target) and \
        E1.cohomology_table() == E2.cohomology_table()


def _entrywise(E1: FunctorMatrix, E2: FunctorMatrix, op) -> FunctorMatrix:
    keys = sorted(set(E1.entries) | set(E2.entries), key=repr)
    return FunctorMatrix(E1.source, E1.target,
                         {ts: op(ts, E1.entry(*ts), E2.entry(*ts)) for ts in keys})


# -- Fibonacci triangles -------------------------------------------------------

def _alpha(A: FunctorMatrix, B: FunctorMatrix, last: FunctorMatrix) -> Dict[Entry, SparseMap]:
    """``E_{N-1} F^{(N-1)} -> E_{N-2}``: the counit on the last two letters."""
    comps: Dict[Entry, SparseMap] = {}
    for ts, C in A.entries.items():
        m: SparseMap = {}
        for key in C.basis:
            (u, t, s), (ekey, y) = key
            J, (path, keys) = ekey
            if len(keys) == 0 or len(path) < 2 or path[-2] != s or keys[-1] != y:
                continue
            # the last letter must be F^{(N-2)}, i.e. twin N-2 is not missing
            tgt = (J, (path[:-1], keys[:-1]))
            if tgt not in B.entry(*ts).basis:
                continue
            c = 1 if last.is_dual else _sign(last.entries[(t, s)].basis[y])
            m[key] = {tgt: Fraction(c)}
        comps[ts] = m
    return comps


def _rho(A: FunctorMatrix, B: FunctorMatrix, last: FunctorMatrix, prev: FunctorMatrix) -> Dict[Entry, SparseMap]:
    """``E^{N-2} -> F^{(N-1)} E^{N-1}``: the unit inserted in front."""
    comps: Dict[Entry, SparseMap] = {}
    for ts, C in A.entries.items():
        m: SparseMap = {}
        target = B.entry(*ts).basis
        for key in C.basis:
            J, (path, keys) = key
            x0 = path[0]
            img = {}
            for t in last.source:
                entry = last.entries.get((x0, t))
                if entry is None or (t, x0) not in prev.entries:
                    continue
                for k, deg in entry.basis.items():
                    c = 1 if last.is_dual else _sign(deg)
                    c *= _sign(deg * len(J))
                    nk = ((x0, t, path[-1]), (k, (J, ((t,) + path, (k,) + keys))))
                    if nk in target:
                        img[nk] = Fraction(c)
            if img:
                m[key] = img
        comps[ts] = m
    return comps


def _triangle(F: FunctorMatrix, N: int, variant: str, rep: Report, prefix: str) -> None:
    letters = adjoint_string(F, N)
    last = letters[N - 1]
    E_N = twist(F, N, variant)
    E_1 = twist(F, N - 1, variant)
    E_2 = twist(F, N - 2, variant)
    if variant == "homological":
        mid = compose(E_1, last)
        f = _alpha(mid, E_2, last)
        src, tgt = mid, E_2
        build = lambda ts, A, B: mapping_fiber(f.get(ts, {}), A, B)
    else:
        mid = compose(last, E_1)
        f = _rho(E_2, mid, last, letters[N - 2])
        src, tgt = E_2, mid
        build = lambda ts, A, B: mapping_cone(f.get(ts, {}), A, B)
    chi_N, chi_mid, chi_2 = E_N.euler_matrix(), mid.euler_matrix(), E_2.euler_matrix()
    keys = set(chi_N) | set(chi_mid) | set(chi_2)
    lhs = {ts: chi_N.get(ts, 0) for ts in keys}
    rhs = {ts: chi_mid.get(ts, 0) - chi_2.get(ts, 0) for ts in keys}
    rep.add(prefix + "chi_identity", lhs == rhs,
            chi_N=_pairs(chi_N), chi_middle=_pairs(chi_mid), chi_N_minus_2=_pairs(chi_2))
    chain = all(is_chain_map(f.get(ts, {}), src.entry(*ts), tgt.entry(*ts))
                for ts in set(src.entries) | set(tgt.entries))
    rep.add(prefix + "connecting_map_is_chain_map", chain)
    cone = _entrywise(src, tgt, build)
    rep.add(prefix + "graded_dims_match", all(
        E_N.entry(*ts).dims() == cone.entry(*ts).dims()
        for ts in set(E_N.entries) | set(cone.entries)))
    rep.add(prefix + "cohomology_dims_match", _same_table(E_N, cone),
            twist=_table_json(E_N), construction=_table_json(cone))


def _pairs(d: Mapping) -> Dict[str, int]:
    return {f"{t}|{s}": v for (t, s), v in sorted(d.items(), key=lambda kv: repr(kv[0]))}


def fibonacci_triangle_check(F: FunctorMatrix, N: int, variants=("homological", "cohomological")) -> Report:
    """Both Fibonacci triangles at level ``N``, checked through explicit fibers and cones.

    Homological: ``E_N = Fib(E_{N-1} F^{(N-1)} -> E_{N-2})``.
    Cohomological: ``E^N = Cof(E^{N-2} -> F^{(N-1)} E^{N-1})``.
    """
    if N < 2:
        raise ValueError("Fibonacci triangles need N >= 2")
    rep = Report("fibonacci_triangle", {"N": N, "functor": F.label})
    for v in variants:
        _triangle(F, N, v, rep, v + ".")
    return rep


# -- duality -------------------------------------------------------------------

def _find_shift(t1: Mapping, t2: Mapping) -> Optional[int]:
    """``delta`` with ``t1[ts][m + delta] == t2[ts][m]`` for all entries, if any."""
    if set(t1) != set(t2):
        return None
    if not t1:
        return 0
    ts = next(iter(t1))
    delta = min(t1[ts]) - min(t2[ts])
    for ts in t1:
        if t1[ts] != {m + delta: v for m, v in t2[ts].items()}:
            return None
    return delta


def duality_check(F: FunctorMatrix, N: int) -> Report:
    """The right adjoint of ``E_N(F)`` against ``E^N(F*)``, up to a global shift."""
    if N < 1:
        raise ValueError("duality_check needs N >= 1")
    rep = Report("duality", {"N": N, "functor": F.label})
    lhs = twist(right_adjoint_model(F), N, "cohomological")
    adj = right_adjoint_model(twist(F, N, "homological"))
    rep.add("index_sets_match", (lhs.source, lhs.target) == (adj.source, adj.target))
    delta = _find_shift(lhs.cohomology_table(), adj.cohomology_table())
    rep.add("cohomology_agrees_up_to_shift", delta is not None, shift=delta,
            cotwist_of_adjoint=_table_json(lhs), adjoint_of_twist=_table_json(adj))
    gd = _find_shift({ts: C.dims() for ts, C in lhs.entries.items()},
                     {ts: C.dims() for ts, C in adj.entries.items()})
    rep.add("graded_dims_agree_up_to_same_shift", gd is not None and (delta is None or gd == delta
                                                                       or not lhs.cohomology_table()))
    rep.data["shift"] = delta
    rep.data["normalization"] = "full monomial in degree 0, depth d in degree +d / -d"
    return rep


# -- determinantal identity ----------------------------------------------------

def _matmul(A: Mapping[Entry, int], B: Mapping[Entry, int]) -> Dict[Entry, int]:
    out: Dict[Entry, int] = {}
    for (u, t), a in A.items():
        for (t2, s), b in B.items():
            if t == t2:
                out[(u, s)] = out.get((u, s), 0) + a * b
    return {k: v for k, v in out.items() if v}


def determinantal_check(F: FunctorMatrix, N: int) -> Report:
    """``chi(E_{N+1}(F)) chi(E^{N-1}(F*)) - chi(E_N(F)) chi(E^N(F*)) + chi(Id) = 0``."""
    if N < 1:
        raise ValueError("determinantal_check needs N >= 1")
    Fs = right_adjoint_model(F)
    X1, Xn = twist_euler(F, N + 1), twist_euler(F, N)
    Y1, Yn = twist_euler(Fs, N - 1, "cohomological"), twist_euler(Fs, N, "cohomological")
    total = _matmul(X1, Y1)
    for k, v in _matmul(Xn, Yn).items():
        total[k] = total.get(k, 0) - v
    for x in F.target:
        total[(x, x)] = total.get((x, x), 0) + 1
    residual = {k: v for k, v in total.items() if v}
    rep = Report("determinantal", {"N": N, "functor": F.label})
    rep.add("euler_identity", not residual, residual=_pairs(residual))
    return rep


# -- sphericity ------------------------------------------------------------------

def _is_line_equivalence(E: FunctorMatrix) -> bool:
    table = E.cohomology_table()
    if len(E.source) != len(E.target):
        return False
    rows = [t for t, _ in table]
    cols = [s for _, s in table]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        return False
    if set(rows) != set(E.target) or set(cols) != set(E.source):
        return False
    return all(sum(h.values()) == 1 for h in table.values())


def _acyclic(F: FunctorMatrix, N: int, variant: str) -> bool:
    if twist_euler(F, N, variant):
        return False
    return twist(F, N, variant).is_acyclic()


def is_n_spherical(F: FunctorMatrix, N: int, mode: str = "both") -> bool:
    """``E_{N-1}(F) = E^{N-1}(F) = 0`` (mode ``both``), or for even ``N`` the
    criterion: ``E^{N-2}(F)`` an equivalence and ``E^{N-1}(F) = 0``.

    In this model an equivalence is a permutation pattern of one-dimensional
    cohomology; when ``E^{N-2}(F)`` is not of that shape the even criterion
    is reported as unavailable rather than guessed.
    """
    if N < 2:
        raise ValueError("N-sphericity needs N >= 2")
    if mode == "both":
        return _acyclic(F, N - 1, "homological") and _acyclic(F, N - 1, "cohomological")
    if mode == "even_criterion":
        if N % 2:
            raise CriterionUnavailable("the even criterion needs N even")
        if not _is_line_equivalence(twist(F, N - 2, "cohomological")):
            raise CriterionUnavailable(f"E^{N - 2} is not a line equivalence in the model")
        return _acyclic(F, N - 1, "cohomological")
    raise ValueError(f"unknown mode {mode!r}")


def sphericity_report(F: FunctorMatrix, Ns, modes=("both", "even_criterion")) -> Report:
    rep = Report("sphericity", {"functor": F.label, "N": list(Ns)})
    for N in Ns:
        res = {}
        for mode in modes:
            try:
                res[mode] = is_n_spherical(F, N, mode)
            except CriterionUnavailable as exc:
                res[mode] = None
                rep.data.setdefault("unavailable", []).append({"N": N, "mode": mode, "reason": str(exc)})
        rep.data[f"N={N}"] = res
    return rep


__all__ = [
    "twist", "higher_twist", "twist_euler", "twist_size", "fibonacci_triangle_check",
    "duality_check", "determinantal_check", "is_n_spherical", "sphericity_report",
]
