"""``eulertwist``: JSON scenarios in, JSON reports out.

Exit codes: 0 when every check passes, 1 when some check fails, 2 on input
errors (unreadable file, malformed JSON, schema violation).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from . import __version__
from .errors import SchemaError
from .scenarios import Scenario, envelope, parse_scenario, run_scenario
from .suite import verify_all

DEMOS = {
    "continuant-6": Scenario("continuant", {"N_max": 6}),
    "sqrt2-period-4": Scenario("bilinear", {
        "field": {"kind": "quadratic", "d": 2},
        "gramA": [["1"]], "gramB": [["1"]], "f": [[["0", "1"]]], "N": 4}),
    "golden-period-5": Scenario("bilinear", {
        "field": {"kind": "extension", "modulus": ["-1", "-1", "1"], "name": "g"},
        "gramA": [["1"]], "gramB": [["1"]], "f": [[["0", "1"]]], "N": 5}),
    "a4-quiver": Scenario("quiver", {"quivers": [{"type": "A", "n": 4}]}),
    "d5-quiver": Scenario("quiver", {"quivers": [{"type": "D", "n": 5}]}),
    "identity-twists-2": Scenario("functor", {
        "functor": {"source": [0], "target": [0],
                    "entries": [{"target": 0, "source": 0, "dims": {"0": 1}}]},
        "N": 2, "checks": ["twist", "triangles", "fibonacci", "duality", "sphericity"]}),
    "tensor-k2-twist-2": Scenario("functor", {
        "functor": {"source": [0], "target": [0],
                    "entries": [{"target": 0, "source": 0, "dims": {"0": 2}}]},
        "N": 2, "checks": ["twist", "fibonacci", "determinantal"]}),
    "enriques-n2": Scenario("enriques", {"n": 2}),
}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise SchemaError(f"{path}: cannot read scenario ({exc.strerror})") from None


def _pretty(doc: dict) -> str:
    rep = doc["report"]
    lines = [f"eulertwist {doc['version']}  {rep['name']}  seed={doc['seed']}"]
    width = max([len(c["name"]) for c in rep["checks"]] + [5])
    for c in rep["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        wit = c.get("witness")
        extra = "  " + json.dumps(wit, sort_keys=True) if wit else ""
        if len(extra) > 100:
            extra = extra[:97] + "..."
        lines.append(f"{mark}  {c['name']:<{width}}{extra}")
    bad = sum(not c["passed"] for c in rep["checks"])
    lines.append(f"{len(rep['checks'])} checks, {bad} failed")
    if "timings" in doc:
        lines.append(f"elapsed {doc['timings']['seconds']:.3f} s")
    return "\n".join(lines) + "\n"


def _emit(doc: dict, args) -> int:
    text = _pretty(doc) if args.pretty else json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if doc["passed"] else 1


def _run(sc: Scenario, args) -> int:
    seed = args.seed if args.seed is not None else sc.seed
    t0 = time.perf_counter()
    rep = run_scenario(sc, seed)
    timings = {"seconds": round(time.perf_counter() - t0, 6)} if args.timings else None
    return _emit(envelope(rep, sc.to_json(), seed, timings), args)


def _scenario_for(kind: str, args) -> Scenario:
    if args.scenario is None:
        if kind == "continuant":
            return Scenario(kind, {"N_max": args.max_n if args.max_n is not None else 12})
        if kind == "quiver":
            top = args.max_n if args.max_n is not None else 8
            qs = [{"type": "A", "n": n} for n in range(1, top + 1)]
            qs += [{"type": "D", "n": n} for n in range(4, top + 1)]
            return Scenario(kind, {"quivers": qs or [{"type": "A", "n": 1}]})
        raise SchemaError(f"the {kind} subcommand needs a scenario file")
    text = _read(args.scenario)
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return parse_scenario(text, args.scenario)
    if isinstance(data, dict) and "kind" not in data:
        # a bare payload for this subcommand
        text = json.dumps({"kind": "functor" if kind == "twist" else kind, "payload": data})
    sc = parse_scenario(text, args.scenario)
    want = "functor" if kind == "twist" else kind
    if sc.kind != want:
        raise SchemaError(f"{args.scenario}: scenario kind {sc.kind!r} given to the {kind} subcommand")
    return sc


def _verify_all(args) -> int:
    instances = args.instances
    if instances is not None and instances < 1:
        raise SchemaError("--instances must be positive")
    t0 = time.perf_counter()
    rep = verify_all(args.max_n, args.seed if args.seed is not None else 0, instances, args.timings)
    timings = {"seconds": round(time.perf_counter() - t0, 6)} if args.timings else None
    return _emit(envelope(rep, None, args.seed if args.seed is not None else 0, timings), args)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    common.add_argument("--seed", type=int, help="seed for randomized checks (overrides the scenario)")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings")

    p = argparse.ArgumentParser(prog="eulertwist", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"eulertwist {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", parents=[common], help="run a scenario file of any kind")
    r.add_argument("scenario", help="scenario path, or - for stdin")
    for kind in ("continuant", "bilinear", "quiver", "twist"):
        s = sub.add_parser(kind, parents=[common], help=f"run a {kind} scenario")
        s.add_argument("scenario", nargs="?", help="scenario or bare payload path, or - for stdin")
        s.add_argument("--max-n", type=int, help="bound used when no scenario is given")
    d = sub.add_parser("demo", parents=[common], help="run a built-in scenario")
    d.add_argument("name", nargs="?", choices=sorted(DEMOS), help="omit to list the demos")
    v = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    v.add_argument("--max-n", type=int, help="truncate the size bounds")
    v.add_argument("--instances", type=int, help="instances per randomized suite")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        if args.command == "verify-all":
            return _verify_all(args)
        if args.command == "demo":
            if args.name is None:
                for name in sorted(DEMOS):
                    print(f"{name:<20} {DEMOS[name].kind}")
                return 0
            return _run(DEMOS[args.name], args)
        if args.command == "run":
            return _run(parse_scenario(_read(args.scenario), args.scenario), args)
        return _run(_scenario_for(args.command, args), args)
    except SchemaError as exc:
        print(f"eulertwist: input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
