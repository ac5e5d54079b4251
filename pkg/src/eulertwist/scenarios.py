"""Scenario ingestion and dispatch for the command line front end.

A scenario is ``{"kind": ..., "payload": {...}, "seed": k}``.  The payload is
validated against ``schemas/<kind>.json`` and turned into library objects
before any computation; problems at that stage raise :class:`SchemaError`.
Library errors raised while running are recorded as failing report entries.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Any, Callable, Dict, Optional

import jsonschema

from . import __version__
from .bilinear import (BilinearSpace, Operator, Subspace,
                       mutation_matrix_product, orthogonal_chain, periodicity_criterion)
from .continuants import (euler_alt, euler_poly, fibonacci_number, verify_chebyshev_bridge,
                          verify_determinant_identity, verify_matrix_identity,
                          verify_recursions)
from .errors import CriterionUnavailable, EulerTwistError, SchemaError
from .functorcat import (FunctorMatrix, adjunction_maps_are_chain_maps, determinantal_check,
                         duality_check, enriques_check, fibonacci_triangle_check,
                         is_n_spherical, random_functor_matrix, table_to_json,
                         triangle_identities, twist)
from .quiverk0 import quiver_report
from .report import Report
from .scalars import Mat, field_from_json

KINDS = ("continuant", "bilinear", "quiver", "functor", "enriques")


@dataclass
class Scenario:
    kind: str
    payload: Dict[str, Any]
    seed: Optional[int] = None

    def to_json(self) -> dict:
        out = {"kind": self.kind, "payload": self.payload}
        if self.seed is not None:
            out["seed"] = self.seed
        return out


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    text = resources.files("eulertwist").joinpath("schemas", f"{name}.json").read_text()
    return json.loads(text)


def _validate(instance, schema_name: str, where: str) -> None:
    validator = jsonschema.Draft202012Validator(load_schema(schema_name))
    e = jsonschema.exceptions.best_match(validator.iter_errors(instance))
    if e is not None:
        path = where + "".join(f"[{p!r}]" if isinstance(p, str) else f"[{p}]" for p in e.absolute_path)
        raise SchemaError(f"{path}: {e.message}")


def parse_scenario(text: str, source: str = "<scenario>") -> Scenario:
    """Decode and validate; malformed JSON reports line and column."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{source}: line {exc.lineno} column {exc.colno} (char {exc.pos}): {exc.msg}") from None
    _validate(data, "scenario", "scenario")
    _validate(data["payload"], data["kind"], "payload")
    return Scenario(data["kind"], data["payload"], data.get("seed"))


def _input(fn: Callable, what: str):
    """Convert payload pieces into library objects; failures are input errors."""
    try:
        return fn()
    except (EulerTwistError, ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"payload.{what}: {exc}") from None


# -- per-kind runners --------------------------------------------------------------

def run_continuant(payload: dict, seed) -> Report:
    n_max = payload["N_max"]
    # the determinant identity grows roughly 2.5x per step, hence its own bound
    n_mat = payload.get("matrix_N_max", min(n_max, 12))
    n_det = payload.get("determinant_N_max", min(n_max, 10))
    rep = Report("continuant", {"N_max": n_max, "matrix_N_max": n_mat, "determinant_N_max": n_det})
    for N in range(0, n_max + 1):
        E = euler_poly(N)
        depth_ok = all(c.degree == (N - len(w)) // 2 for w, c in E.terms.items())
        rep.add(f"counts[N={N:02d}]", len(E) == fibonacci_number(N) and depth_ok, monomials=len(E))
    for N in range(1, min(n_max, 4) + 1):
        rep.add(f"render[N={N}]", True, text=euler_alt(N).to_text())
    if n_max >= 2:
        rep.extend(verify_recursions(n_max), "recursions.")
    for N in range(2, n_mat + 1):
        rep.extend(verify_matrix_identity(N), f"matrix[N={N:02d}].")
    for N in range(1, n_det + 1):
        rep.extend(verify_determinant_identity(N), f"determinant[N={N:02d}].")
    rep.extend(verify_chebyshev_bridge(payload.get("chebyshev_N_max", n_max)), "chebyshev.")
    return rep


def _matrix(rows, field) -> Mat:
    return Mat.from_rows(rows, field)


def run_bilinear(payload: dict, seed) -> Report:
    field = _input(lambda: field_from_json(payload.get("field")), "field")
    if "gramA" in payload:
        N = payload["N"]
        A_sp = _input(lambda: BilinearSpace(_matrix(payload["gramA"], field), "A"), "gramA")
        B_sp = _input(lambda: BilinearSpace(_matrix(payload["gramB"], field), "B"), "gramB")
        f = _input(lambda: Operator(A_sp, B_sp, _matrix(payload["f"], field)), "f")
        rep = Report("bilinear.gluing", {"N": N, "field": field.to_json()})
        cr = periodicity_criterion(A_sp, B_sp, f, N, keep_chain=True)
        body = cr.to_json()
        rep.add("biconditional", bool(cr.biconditional))
        rep.add("continuant_vanishes", True, value=cr.continuant_vanishes)
        rep.add("chain_periodic", True, value=cr.chain_periodic, least_period=cr.period)
        if cr.continuant_vanishes and cr.chain_periodic:
            rep.add("isometry_E_N_minus_2", bool(cr.isometry_E_N_minus_2))
            rep.add("isometry_E_N", bool(cr.isometry_E_N))
        rep.data["criterion"] = body
        return rep

    C = _input(lambda: BilinearSpace(_matrix(payload["gram"], field), "C"), "gram")
    A = _input(lambda: Subspace.span(C, payload["subspace"]), "subspace")
    steps = payload.get("N", 12)
    rep = Report("bilinear.subspace", {"N": steps, "field": field.to_json()})
    chain, period = orthogonal_chain(A, steps)
    rep.data["chain"] = [s.basis.to_json() for s in chain]
    rep.data["least_period"] = period
    rep.add("orthogonal_chain", len(chain) == steps + 1, least_period=period)
    if "N" in payload:
        _, mm = mutation_matrix_product(A, steps)
        rep.extend(mm, "w_matrix.")
        rep.data["w_matrix"] = mm.data
    return rep


def run_quiver(payload: dict, seed) -> Report:
    rep = Report("quiver", {"quivers": [f"{q['type']}{q['n']}" for q in payload["quivers"]]})
    for q in payload["quivers"]:
        name = f"{q['type']}{q['n']}"
        r = quiver_report(q["type"], q["n"])
        rep.extend(r, name + ".")
        rep.data[name] = r.data
    return rep


def _functor(payload: dict, seed) -> FunctorMatrix:
    if "functor" in payload:
        return _input(lambda: FunctorMatrix.from_json(payload["functor"]), "functor")
    spec = payload["random"]
    rng = random.Random(seed or 0)
    return random_functor_matrix(rng, spec.get("n_source", 2), spec.get("n_target", 2),
                                 spec.get("max_entry_dim", 2))


def run_functor(payload: dict, seed) -> Report:
    F = _functor(payload, seed)
    N = payload["N"]
    variants = payload.get("variant", "both")
    variants = ("homological", "cohomological") if variants == "both" else (variants,)
    checks = payload.get("checks", ["twist"])
    rep = Report("functor", {"N": N, "checks": sorted(checks)})
    rep.data["functor"] = F.to_json()
    if "twist" in checks:
        for v in variants:
            E = twist(F, N, v)
            rep.add(f"twist.{v}.d_squared_zero", E.d_squared_zero())
            rep.data[f"{v}_cohomology"] = table_to_json(E.cohomology_table())
            rep.data[f"{v}_dims"] = table_to_json({k: C.dims() for k, C in E.entries.items()})
    if "triangles" in checks:
        for name, ok in sorted(triangle_identities(F).items()):
            rep.add(f"triangles.{name}", ok)
        rep.add("triangles.adjunction_maps_are_chain_maps", adjunction_maps_are_chain_maps(F))
    if "fibonacci" in checks and N >= 2:
        rep.extend(fibonacci_triangle_check(F, N, variants), "fibonacci.")
    if "duality" in checks and N >= 1:
        d = duality_check(F, N)
        rep.extend(d, "duality.")
        rep.data["duality"] = d.data
    if "determinantal" in checks and N >= 1:
        rep.extend(determinantal_check(F, N), "determinantal.")
    if "sphericity" in checks and N >= 1:
        both = is_n_spherical(F, N, "both")
        rep.add("sphericity.both", True, spherical=both)
        try:
            ev = is_n_spherical(F, N, "even_criterion")
            rep.add("sphericity.modes_agree", ev == both, even_criterion=ev)
        except CriterionUnavailable as exc:
            rep.add("sphericity.even_criterion", True, unavailable=str(exc))
    return rep


def run_enriques(payload: dict, seed) -> Report:
    return enriques_check(payload["n"])


RUNNERS = {"continuant": run_continuant, "bilinear": run_bilinear, "quiver": run_quiver,
           "functor": run_functor, "enriques": run_enriques}


def run_scenario(sc: Scenario, seed: Optional[int] = None) -> Report:
    """Dispatch to the owning module; library errors become failing entries."""
    seed = sc.seed if seed is None else seed
    try:
        return RUNNERS[sc.kind](sc.payload, seed)
    except SchemaError:
        raise
    except EulerTwistError as exc:
        rep = Report(sc.kind, {})
        rep.add(f"error.{type(exc).__name__}", False, message=str(exc))
        return rep


def envelope(rep: Report, scenario: Optional[dict], seed, timings: Optional[dict] = None) -> dict:
    out = {"version": __version__, "seed": seed, "passed": rep.passed, "report": rep.to_json()}
    if scenario is not None:
        out["scenario"] = scenario
    if timings is not None:
        out["timings"] = timings
    return out


__all__ = ["KINDS", "Scenario", "load_schema", "parse_scenario", "run_scenario", "envelope", "RUNNERS"]
