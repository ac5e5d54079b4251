import json
import subprocess
import sys
from pathlib import Path

import pytest

from eulertwist import __version__
from eulertwist.cli import DEMOS, main

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = Path(__file__).parent / "golden"
SCENARIOS = ROOT / "scenarios"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(p.stem for p in GOLDEN.glob("*.json")))
def test_golden_reports(name, tmp_path):
    out = tmp_path / "r.json"
    assert main(["demo", name, "--out", str(out)]) == 0
    assert out.read_text() == (GOLDEN / f"{name}.json").read_text()


def test_golden_values():
    doc = json.loads((GOLDEN / "sqrt2-period-4.json").read_text())
    crit = doc["report"]["data"]["criterion"]
    assert crit["least_period"] == 4 and crit["continuant_vanishes"] and crit["chain_periodic"]
    doc = json.loads((GOLDEN / "golden-period-5.json").read_text())
    assert doc["report"]["data"]["criterion"]["least_period"] == 5
    doc = json.loads((GOLDEN / "tensor-k2-twist-2.json").read_text())
    assert sum(doc["report"]["data"]["homological_cohomology"]["0|0"].values()) == 3
    doc = json.loads((GOLDEN / "a4-quiver.json").read_text())
    assert doc["report"]["data"]["A4"]["least_period"] == 10
    assert doc["version"] == __version__


@pytest.mark.parametrize("path", sorted(SCENARIOS.glob("*.json")), ids=lambda p: p.stem)
def test_shipped_scenarios_pass(path, capsys):
    code, out, _ = run(["run", str(path)], capsys)
    assert code == 0
    assert json.loads(out)["passed"]


def test_continuant_scenario_n6(tmp_path, capsys):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"kind": "continuant", "payload": {"N_max": 6}}))
    code, out, _ = run(["continuant", str(p)], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["report"]["params"]["N_max"] == 6
    names = {c["name"] for c in doc["report"]["checks"]}
    assert "recursions.left[N=06]" in names and "determinant[N=06].forward" in names or len(names) > 40


def test_bare_payload_for_module_subcommand(tmp_path, capsys):
    p = tmp_path / "b.json"
    p.write_text(json.dumps({"field": {"kind": "quadratic", "d": 2}, "gramA": [["1"]],
                             "gramB": [["1"]], "f": [[["0", "1"]]], "N": 4}))
    code, out, _ = run(["bilinear", str(p)], capsys)
    assert code == 0 and json.loads(out)["report"]["data"]["criterion"]["least_period"] == 4


def test_malformed_json_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "enriques",\n "payload": {"n": 2,}}')
    code, out, err = run(["run", str(p)], capsys)
    assert code == 2 and out == ""
    assert "line 2 column 21" in err


def test_schema_violation_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"kind": "bilinear", "payload": {
        "gramA": [["1"]], "gramB": [["x"]], "f": [["1"]], "N": 3}}))
    code, _, err = run(["run", str(p)], capsys)
    assert code == 2 and "payload['gramB'][0][0]" in err


def test_semantic_input_error_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"kind": "bilinear", "payload": {
        "gramA": [["1", "2"]], "gramB": [["1"]], "f": [["1"]], "N": 3}}))
    code, _, err = run(["run", str(p)], capsys)
    assert code == 2 and "gramA" in err


def test_unknown_kind_and_missing_file_exit_2(tmp_path, capsys):
    p = tmp_path / "k.json"
    p.write_text(json.dumps({"kind": "nope", "payload": {}}))
    assert run(["run", str(p)], capsys)[0] == 2
    assert run(["run", str(tmp_path / "missing.json")], capsys)[0] == 2
    assert run(["bilinear"], capsys)[0] == 2
    assert run(["frobnicate"], capsys)[0] == 2


def test_kind_mismatch_exit_2(tmp_path, capsys):
    p = tmp_path / "e.json"
    p.write_text(json.dumps({"kind": "enriques", "payload": {"n": 2}}))
    assert run(["quiver", str(p)], capsys)[0] == 2


def test_module_error_is_a_failing_entry(tmp_path, capsys):
    p = tmp_path / "odd.json"
    p.write_text(json.dumps({"kind": "bilinear", "payload": {
        "gramA": [["1"]], "gramB": [["1", "0"], ["0", "1"]], "f": [["1"], ["1"]], "N": 3}}))
    code, out, _ = run(["run", str(p)], capsys)
    doc = json.loads(out)
    assert code == 1 and not doc["passed"]
    assert doc["report"]["checks"][0]["name"] == "error.Inapplicable"


def test_stdin_and_pretty(monkeypatch, capsys):
    import io
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps({"kind": "enriques", "payload": {"n": 3}})))
    code, out, _ = run(["run", "-", "--pretty"], capsys)
    assert code == 0
    assert out.splitlines()[0].startswith(f"eulertwist {__version__}")
    assert "PASS  e5.acyclic" in out and out.rstrip().endswith("0 failed")


def test_reports_are_sorted_and_timings_opt_in(capsys):
    _, out, _ = run(["demo", "enriques-n2"], capsys)
    doc = json.loads(out)
    names = [c["name"] for c in doc["report"]["checks"]]
    assert names == sorted(names) and "timings" not in doc
    _, out, _ = run(["demo", "enriques-n2", "--timings"], capsys)
    assert "seconds" in json.loads(out)["timings"]


def test_seed_changes_random_functor_only_through_flag(capsys):
    path = str(SCENARIOS / "random-functor.json")
    _, a, _ = run(["run", path], capsys)
    _, b, _ = run(["run", path], capsys)
    _, c, _ = run(["run", path, "--seed", "8"], capsys)
    assert a == b
    assert json.loads(c)["seed"] == 8 and a != c


def test_demo_listing(capsys):
    code, out, _ = run(["demo"], capsys)
    assert code == 0 and set(line.split()[0] for line in out.splitlines()) == set(DEMOS)


def test_verify_all_truncated_and_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify-all", "--max-n", "3", "--instances", "6", "--seed", "42"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert [c["name"] for c in doc["report"]["checks"]] == [f"criterion_{i:02d}" for i in range(1, 11)]


def test_console_script_version():
    out = subprocess.run([sys.executable, "-m", "eulertwist", "--version"],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == f"eulertwist {__version__}"
