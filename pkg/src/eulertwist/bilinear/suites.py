"""Seeded property suites over random bilinear spaces and gluings."""

from __future__ import annotations

import random
from typing import Iterable

from ..continuants import fibonacci_value
from ..errors import Inapplicable
from ..report import Report
from ..scalars import QQ, Mat, det, mat_inverse, quadratic_field
from .instances import (positive_library, random_instance, random_matrix,
                        random_space)
from .periodic import continuant_at, mutation_matrix_product, orthogonal_chain, periodicity_criterion
from .spaces import (BilinearSpace, Subspace, actual_coordinate_change, adjoint,
                     adjoint_string, coordinate_change, glue, gluing_operator,
                     is_isometry, is_nondegenerate, is_sod, iterated_adjoint,
                     mutation, orthogonal, serre)


def _fields():
    return [QQ, quadratic_field(2)]


def _random_subspace(rng: random.Random, C, k: int) -> Subspace:
    return Subspace.span(C, random_matrix(rng, C.dim, k, C.field, -2, 2).columns())


def _with_isotropic_e1(rng: random.Random, n: int, field):
    while True:
        G = random_matrix(rng, n, n, field)
        rows = G.to_rows()
        rows[0][0] = field.zero()
        G = Mat.from_rows(rows, field)
        if det(G) != 0:
            return BilinearSpace(G, check=False)


def _instance_checks(rng: random.Random, field, counts: dict) -> Iterable:
    """Yield ``(name, passed)`` for one random configuration."""
    n = rng.randint(1, 6)
    C = random_space(rng, n, field)
    S = serre(C)
    G = C.gram
    yield "serre_identity", G.T == G @ S.matrix
    yield "serre_isometry", is_isometry(S)

    a, b = rng.randint(1, 3), rng.randint(1, 3)
    A_sp, B_sp, f = random_instance(rng, a, b, field)
    yield "adjoint_involution", (adjoint(adjoint(f, "right"), "left") == f
                                 and adjoint(adjoint(f, "left"), "right") == f)
    i, j = rng.randint(-2, 2), rng.randint(-2, 2)
    yield "iterated_adjoint_additive", iterated_adjoint(f, i + j) == iterated_adjoint(iterated_adjoint(f, i), j)
    SA, SB = serre(A_sp), serre(B_sp)
    yield "serre_conjugates_adjoints", adjoint(f, "right") == SA @ adjoint(f, "left") @ SB.inverse()

    if n >= 2 and rng.random() < 0.3:
        # an isotropic basis vector makes span(e_1) degenerate
        C = _with_isotropic_e1(rng, n, field)
        A = Subspace.span(C, [[1] + [0] * (n - 1)])
    else:
        A = _random_subspace(rng, C, rng.randint(0, n))
    R, L = orthogonal(A, "right"), orthogonal(A, "left")
    yield "orthogonal_dimension", A.dim + R.dim == n and A.dim + L.dim == n
    yield "double_orthogonal", orthogonal(R, "left") == A and orthogonal(L, "right") == A
    nd = is_nondegenerate(A)
    counts["degenerate" if not nd else "nondegenerate"] += 1
    yield "sod_iff_nondegenerate", is_sod(A, L) == nd == is_nondegenerate(L) == is_nondegenerate(R)

    Cg, eA, eB = glue(A_sp, B_sp, f)
    g = gluing_operator(eA, eB)
    yield "glue_extract_round_trip", (g.matrix == f.matrix and eA.restricted_gram() == A_sp.gram
                                      and eB.restricted_gram() == B_sp.gram)
    if nd:
        fA = gluing_operator(A, L)
        M = mutation(A)
        yield "mutation_isometry", is_isometry(M)
        h = gluing_operator(R, A)
        yield "gluing_of_perp_pair", h.matrix == (-(adjoint(fA, "right") @ M)).matrix
        yield "coordinate_change_block_matrix", coordinate_change(A) == actual_coordinate_change(A)


def property_suite(seed: int = 0, instances: int = 200) -> Report:
    """Serre, adjoint, orthogonal, SOD, gluing and mutation identities."""
    rng = random.Random(seed)
    rep = Report("bilinear_properties", {"seed": seed, "instances": instances})
    fails: dict = {}
    totals: dict = {}
    counts = {"degenerate": 0, "nondegenerate": 0}
    for t in range(instances):
        field = _fields()[t % 2]
        for name, ok in _instance_checks(rng, field, counts):
            totals[name] = totals.get(name, 0) + 1
            if not ok:
                fails.setdefault(name, []).append(t)
    for name in sorted(totals):
        rep.add(name, name not in fails, checked=totals[name], failed_instances=fails.get(name, [])[:5])
    rep.data["subspaces"] = counts
    return rep


def periodicity_suite(seed: int = 0, instances: int = 200, max_N: int = 6) -> Report:
    """The continuant criterion on random gluings and on the positive library."""
    rng = random.Random(seed)
    rep = Report("periodicity", {"seed": seed, "instances": instances, "max_N": max_N})
    applicable = skipped = agree = 0
    for t in range(instances):
        field = _fields()[t % 2]
        a = rng.randint(1, 3)
        b = a if rng.random() < 0.5 else rng.randint(1, 3)
        N = rng.randint(2, max_N)
        A_sp, B_sp, f = random_instance(rng, a, b, field)
        try:
            cr = periodicity_criterion(A_sp, B_sp, f, N)
        except Inapplicable:
            skipped += 1
            continue
        applicable += 1
        agree += bool(cr.biconditional)
    rep.add("random_biconditional", agree == applicable, applicable=applicable,
            agreeing=agree, inapplicable=skipped)

    for case in positive_library(seed):
        cr = periodicity_criterion(case.A_space, case.B_space, case.f, case.N)
        rep.add(f"positive[{case.name}]", cr.continuant_vanishes and cr.chain_periodic
                and cr.isometry_E_N_minus_2 and cr.isometry_E_N, period=cr.period)
        if case.name.startswith("isometry"):
            string = adjoint_string(case.f, 3)
            E3 = continuant_at(string, 1, 3, case.A_space)
            rep.add(f"E3=-f^-1[{case.name}]", E3.matrix == -mat_inverse(case.f.matrix))
        if case.A_space.gram == case.B_space.gram == Mat.identity(1, case.f.matrix.field):
            # one-dimensional gluing: period N iff Phi_{N-1}(rho, -1) = 0
            rho = case.f.matrix[0, 0]
            C, A, _ = glue(case.A_space, case.B_space, case.f)
            chain, _ = orthogonal_chain(A, case.N)
            rep.add(f"phi_specialization[{case.name}]",
                    (chain[case.N] == A) == (fibonacci_value(case.N - 1, rho) == 0))
    return rep


def w_matrix_suite(seed: int = 0, instances: int = 50, max_N: int = 6) -> Report:
    """``mutation_matrix_product`` on random gluings and on the positive library."""
    rng = random.Random(seed)
    rep = Report("w_matrix", {"seed": seed, "instances": instances, "max_N": max_N})
    periodic_seen = 0
    failures = []
    cases = []
    for t in range(instances):
        field = _fields()[t % 2]
        a, b = rng.randint(1, 3), rng.randint(1, 3)
        A_sp, B_sp, f = random_instance(rng, a, b, field)
        cases.append((f"random[{t}]", A_sp, B_sp, f, rng.randint(1, max_N)))
    for case in positive_library(seed):
        if case.N <= max_N:
            cases.append((case.name, case.A_space, case.B_space, case.f, case.N))
    for name, A_sp, B_sp, f, N in cases:
        C, A, _ = glue(A_sp, B_sp, f)
        _, r = mutation_matrix_product(A, N)
        periodic_seen += bool(r.data.get("periodic"))
        if not r.passed:
            failures.append({"case": name, "N": N, "failed": [c.name for c in r.failures()]})
    rep.add("all_instances_pass", not failures, instances=len(cases), periodic=periodic_seen,
            failures=failures[:5])
    rep.add("enough_instances", len(cases) >= 50, instances=len(cases))
    return rep


__all__ = ["property_suite", "periodicity_suite", "w_matrix_suite"]
