"""The ten acceptance checks, shared by ``eulertwist verify-all`` and the tests.

Each check returns a :class:`Report`.  ``max_n`` truncates the size bounds
and ``instances`` scales the random batches; with the defaults every check
runs at its full bounds.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, List, Optional

from .bilinear.suites import periodicity_suite, property_suite, w_matrix_suite
from .continuants import (euler_alt, euler_poly, fibonacci_number, fibonacci_value,
                          verify_chebyshev_bridge, verify_determinant_identity,
                          verify_matrix_identity, verify_recursions)
from .freealg import NCPoly
from .functorcat import (FunctorMatrix, adjunction_maps_are_chain_maps, determinantal_check, duality_check, enriques_check,
                         fibonacci_triangle_check, is_n_spherical, random_complex,
                         random_functor_matrix, sphericity_library, triangle_identities,
                         twist, twist_euler, twist_size)
from .errors import CriterionUnavailable
from .quiverk0 import quiver_report
from .report import Report

# the displays of E_N at q = -1 for N <= 4
DISPLAYS = {
    1: "x1",
    2: "x1*x2 - 1",
    3: "x1*x2*x3 - x1 - x3",
    4: "x1*x2*x3*x4 - x1*x2 - x1*x4 - x3*x4 + 1",
}

# largest totalized complex (sum of dims) whose cohomology is computed in check 8
COHOMOLOGY_BUDGET = 500


def _cap(default: int, max_n: Optional[int]) -> int:
    return default if max_n is None else min(default, max_n)


def _count(default: int, instances: Optional[int]) -> int:
    return default if instances is None else instances


def check_symbolic_continuants(max_n=None, seed=0, instances=None) -> Report:
    rep = Report("symbolic_continuants", {"N_max": _cap(20, max_n)})
    for N, text in DISPLAYS.items():
        if N > _cap(4, max_n):
            continue
        E = euler_alt(N)
        rep.add(f"display[N={N}]", E.to_text() == text and E == NCPoly.from_text(text, N),
                rendered=E.to_text())
    for N in range(0, _cap(20, max_n) + 1):
        E = euler_poly(N)
        by_depth: Dict[int, int] = {}
        for w, c in E.terms.items():
            by_depth[c.degree] = by_depth.get(c.degree, 0) + 1
        expected = {k: comb(N - k, k) for k in range(N // 2 + 1)}
        rep.add(f"counts[N={N:02d}]", len(E) == fibonacci_number(N) and by_depth == expected,
                monomials=len(E))
    return rep


def check_identity_suite(max_n=None, seed=0, instances=None) -> Report:
    rep = Report("identity_suite", {})
    n_rec = _cap(12, max_n)
    if n_rec >= 2:
        rep.extend(verify_recursions(n_rec), "recursions.")
    for N in range(2, _cap(8, max_n) + 1):
        rep.extend(verify_matrix_identity(N), f"matrix[N={N}].")
    for N in range(1, _cap(7, max_n) + 1):
        rep.extend(verify_determinant_identity(N), f"determinant[N={N}].")
    return rep


def check_chebyshev_bridge(max_n=None, seed=0, instances=None) -> Report:
    return verify_chebyshev_bridge(_cap(50, max_n))


def check_bilinear_properties(max_n=None, seed=0, instances=None) -> Report:
    return property_suite(seed, _count(200, instances))


def check_periodicity(max_n=None, seed=0, instances=None) -> Report:
    return periodicity_suite(seed, _count(200, instances), max_N=max(2, _cap(6, max_n)))


def check_w_matrix(max_n=None, seed=0, instances=None) -> Report:
    rep = w_matrix_suite(seed, _count(50, instances), max_N=max(1, _cap(6, max_n)))
    if instances is not None and instances < 50:
        rep.checks = [c for c in rep.checks if c.name != "enough_instances"]
    return rep


def check_quiver_shadows(max_n=None, seed=0, instances=None) -> Report:
    rep = Report("quiver_shadows", {})
    for n in range(1, _cap(8, max_n) + 1):
        rep.extend(quiver_report("A", n), f"A{n}.")
    for n in range(4, _cap(8, max_n) + 1):
        rep.extend(quiver_report("D", n), f"D{n}.")
    return rep


def _functor_instances(rng: random.Random, count: int) -> List[FunctorMatrix]:
    out = [FunctorMatrix.tensor_by(random_complex(rng, 4)) for _ in range(count)]
    return out


def check_functor_calculus(max_n=None, seed=0, instances=None) -> Report:
    rng = random.Random(seed)
    n_max = _cap(8, max_n)
    singles = _functor_instances(rng, _count(20, instances))
    others = [random_functor_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), 2)
              for _ in range(max(1, _count(20, instances) // 4))]
    others += [FunctorMatrix.identity([0, 1]), FunctorMatrix.zero([0], [0, 1]),
               FunctorMatrix.permutation_of_shifts([1, 2, 0], [1, 0, -2])]
    rep = Report("functor_calculus", {"seed": seed, "N_max": n_max, "instances": len(singles),
                                      "cohomology_budget": COHOMOLOGY_BUDGET})
    tri_bad, chi_bad, fib_bad, dual_bad, det_bad = [], [], [], [], []
    fib_runs = dual_runs = 0
    for idx, F in enumerate(singles + others):
        tag = f"{idx}"
        tri = triangle_identities(F)
        if not all(tri.values()) or not adjunction_maps_are_chain_maps(F):
            tri_bad.append(tag)
        single = idx < len(singles)
        if single:
            x = F.entry(0, 0).euler()
            for N in range(0, n_max + 1):
                for v in ("homological", "cohomological"):
                    got = twist_euler(F, N, v).get((0, 0), 0)
                    if got != fibonacci_value(N, x):
                        chi_bad.append((tag, N, v))
        for N in range(2, n_max + 1):
            if twist_size(F, N) > COHOMOLOGY_BUDGET or twist_size(F, N, "cohomological") > COHOMOLOGY_BUDGET:
                break
            fib = fibonacci_triangle_check(F, N)
            fib_runs += 1
            if not fib.passed:
                fib_bad.append((tag, N, [c.name for c in fib.failures()]))
            if single:
                E = twist(F, N)
                if E.euler_matrix().get((0, 0), 0) != fibonacci_value(N, x):
                    chi_bad.append((tag, N, "built"))
        for N in range(1, n_max + 1):
            if twist_size(F, N) > COHOMOLOGY_BUDGET:
                break
            d = duality_check(F, N)
            dual_runs += 1
            if not d.passed or d.data.get("shift") not in (0, None):
                dual_bad.append((tag, N, d.data.get("shift")))
        for N in range(1, _cap(7, max_n) + 1):
            if not determinantal_check(F, N).passed:
                det_bad.append((tag, N))
    rep.add("triangle_identities", not tri_bad, failing=tri_bad)
    rep.add("euler_characteristic_is_continuant", not chi_bad, failing=chi_bad[:5])
    rep.add("fibonacci_triangles", not fib_bad and fib_runs > 0, runs=fib_runs, failing=fib_bad[:5])
    rep.add("duality", not dual_bad and dual_runs > 0, runs=dual_runs, failing=dual_bad[:5])
    rep.add("determinantal", not det_bad, failing=det_bad[:5])
    return rep


def check_sphericity(max_n=None, seed=0, instances=None) -> Report:
    rep = Report("sphericity", {})
    n_max = _cap(9, max_n)
    for name, F, expected in sphericity_library():
        for N, exp in sorted(expected.items()):
            if N > n_max:
                continue
            got = is_n_spherical(F, N, "both")
            rep.add(f"{name}[N={N}]", got == exp, expected=exp, detected=got)
            if N % 2 == 0:
                try:
                    ev = is_n_spherical(F, N, "even_criterion")
                except CriterionUnavailable:
                    continue
                rep.add(f"{name}[N={N}].modes_agree", ev == got, even_criterion=ev)
    return rep


def check_enriques(max_n=None, seed=0, instances=None) -> Report:
    rep = Report("enriques", {})
    for n in (2, 3, 4):
        rep.extend(enriques_check(n), f"n={n}.")
    return rep


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    budget_s: float
    run: Callable[..., Report]


CRITERIA = [
    Criterion(1, "symbolic continuants", 2, check_symbolic_continuants),
    Criterion(2, "identity suite", 10, check_identity_suite),
    Criterion(3, "Chebyshev bridge", 1, check_chebyshev_bridge),
    Criterion(4, "bilinear property suite", 30, check_bilinear_properties),
    Criterion(5, "periodicity biconditional", 30, check_periodicity),
    Criterion(6, "W-matrix mechanism", 30, check_w_matrix),
    Criterion(7, "quiver shadows", 10, check_quiver_shadows),
    Criterion(8, "functor calculus", 60, check_functor_calculus),
    Criterion(9, "sphericity detection", 30, check_sphericity),
    Criterion(10, "Enriques complexes", 1, check_enriques),
]


def run_criterion(c: Criterion, max_n=None, seed=0, instances=None):
    """``(report, elapsed seconds)``."""
    t0 = time.perf_counter()
    rep = c.run(max_n=max_n, seed=seed, instances=instances)
    return rep, time.perf_counter() - t0


def verify_all(max_n: Optional[int] = None, seed: int = 0, instances: Optional[int] = None,
               timings: bool = False, only=None) -> Report:
    summary = Report("verify_all", {"max_n": max_n, "seed": seed, "instances": instances})
    results = []
    for c in CRITERIA:
        if only is not None and c.number not in only:
            continue
        rep, dt = run_criterion(c, max_n, seed, instances)
        witness = {"title": c.title, "checks": len(rep.checks),
                   "failed": [f.name for f in rep.failures()][:10]}
        if timings:
            witness["seconds"] = round(dt, 3)
            witness["budget_seconds"] = c.budget_s
        summary.add(f"criterion_{c.number:02d}", rep.passed, **witness)
        results.append(rep.to_json())
    summary.data["criteria"] = results
    return summary


__all__ = ["CRITERIA", "Criterion", "DISPLAYS", "COHOMOLOGY_BUDGET", "run_criterion", "verify_all"]
