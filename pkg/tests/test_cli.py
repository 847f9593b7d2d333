import csv
import io
import json
import subprocess
import sys
from fractions import Fraction
from importlib import resources

import jsonschema
import pytest

from walkgauge.canon import certificate_hex
from walkgauge.cli import EXIT_FAIL, EXIT_LIMIT, EXIT_OK, EXIT_USAGE, main, parse_family
from walkgauge.graph import make_cycle, make_P, make_S
from walkgauge.io import encode_graph6, format_edge_list


def _schema(name):
    return json.loads(resources.files("walkgauge").joinpath("schemas", name).read_text())


INVARIANT_SCHEMA = _schema("invariant_report.schema.json")
VERIFICATION_SCHEMA = _schema("verification_report.schema.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_family_parsing():
    assert parse_family("C:4") == make_cycle(4)
    assert parse_family("S:5,3") == make_S(5, 3)
    assert parse_family(" P:6,4 ") == make_P(6, 4)


@pytest.mark.parametrize("spec", ["C:4,3", "S:5", "Q:5,3", "S:3,5", "P:5,2"])
def test_bad_family(capsys, spec):
    code, _, err = run(capsys, "invariants", "--family", spec)
    assert code == EXIT_USAGE and "error" in err


def test_invariants_cycle(capsys):
    code, out, _ = run(capsys, "invariants", "--family", "C:4")
    assert code == EXIT_OK
    rep = json.loads(out)
    jsonschema.validate(rep, INVARIANT_SCHEMA)
    assert rep["scalars"]["Kf"] == "5"
    assert [v["CC"] for v in rep["vertices"]] == ["10"] * 4
    assert rep["scalars"]["spanning_trees"] == 4 and rep["scalars"]["cycle_length"] == 4


def test_invariants_hub_rc(capsys):
    code, out, _ = run(capsys, "invariants", "--family", "S:5,3")
    rep = json.loads(out)
    hub = next(v for v in rep["vertices"] if v["degree"] == 4)
    assert code == EXIT_OK and hub["RC"] == "6"


def test_invariants_csv_from_file(capsys, tmp_path):
    path = tmp_path / "graph.el"
    path.write_text(format_edge_list(make_P(6, 3)))
    code, out, _ = run(capsys, "invariants", str(path), "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == EXIT_OK and len(rows) == 6
    assert [int(r["vertex"]) for r in rows] == list(range(6))
    assert all("/" not in r["degree"] for r in rows)


def test_invariants_approx_and_verify(capsys):
    code, out, _ = run(capsys, "invariants", "--family", "P:5,3", "--verify", "--approx")
    rep = json.loads(out)
    jsonschema.validate(rep, INVARIANT_SCHEMA)
    assert code == EXIT_OK
    assert all(r["status"] == "pass" for r in rep["verification"])
    for v in rep["vertices"]:
        assert float(v["CC_approx"]) == pytest.approx(float(Fraction(v["CC"])), rel=1e-14)


def test_invariants_tree_and_graph6(capsys, tmp_path):
    path = tmp_path / "g.g6"
    path.write_text(encode_graph6(make_S(4, 3)) + "\n")
    code, out, _ = run(capsys, "invariants", str(path), "--verify")
    assert code == EXIT_OK and json.loads(out)["graph"]["n"] == 4
    path.write_text("4 3\n0 1\n1 2\n1 3\n")
    code, out, _ = run(capsys, "invariants", str(path))
    assert code == EXIT_OK and json.loads(out)["scalars"]["cycle_length"] == "tree"
    code, _, _ = run(capsys, "invariants", str(path), "--unicyclic-only")
    assert code == EXIT_USAGE


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.el"
    path.write_text("3 2\n0 1\n1 1\n")
    code, _, err = run(capsys, "invariants", str(path))
    assert code == EXIT_USAGE and "line 3" in err
    code, _, _ = run(capsys, "invariants", str(tmp_path / "missing.el"))
    assert code == EXIT_USAGE


def test_verify_extremal_cc(capsys):
    code, out, _ = run(capsys, "verify", "extremal-cc", "--n", "5")
    rep = json.loads(out)
    jsonschema.validate(rep, VERIFICATION_SCHEMA)
    assert code == EXIT_OK and rep["status"] == "pass"
    max_certs = {r["certificate"] for r in rep["extremal_records"] if r["kind"] == "cc-max"}
    assert max_certs == {certificate_hex(make_P(5, 3))}


@pytest.mark.parametrize("argv", [
    ["identities", "--n-max", "7"],
    ["bounds", "--n", "7", "--l", "4"],
    ["extremal-rc", "--n-min", "4", "--n-max", "6"],
    ["family-closed-forms", "--n-max", "10"],
    ["trees", "--n-max", "6"],
    ["cc-lower-envelope", "--n-max", "20"],
])
def test_verify_commands_pass(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv)
    lines = out.strip().splitlines()
    assert code == EXIT_OK and lines
    for line in lines:
        rep = json.loads(line)
        jsonschema.validate(rep, VERIFICATION_SCHEMA)
        assert rep["status"] in ("pass", "not_applicable")


def test_verify_independent_of_jobs(capsys):
    _, serial, _ = run(capsys, "verify", "bounds", "--n", "7")
    _, parallel, _ = run(capsys, "verify", "bounds", "--n", "7", "--jobs", "2")
    assert serial == parallel


def test_verify_failure_exit_code(capsys, monkeypatch):
    from walkgauge import theorems
    monkeypatch.setattr(theorems, "rc_global_lower", lambda n: Fraction(n))
    code, out, _ = run(capsys, "verify", "extremal-rc", "--n", "5")
    rep = json.loads(out)
    jsonschema.validate(rep, VERIFICATION_SCHEMA)
    assert code == EXIT_FAIL and rep["counterexample"]


def test_enumerate(capsys):
    code, out, err = run(capsys, "enumerate", "--n", "5")
    assert code == EXIT_OK and len(out.split()) == 5 and "5 graphs" in err
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--count-only")
    assert out.strip() == "13"
    code, out, _ = run(capsys, "enumerate", "--n", "6", "--count-only", "--strategy", "prufer")
    assert out.strip() == "13"
    code, out, _ = run(capsys, "enumerate", "--n", "7", "--count-only", "--trees")
    assert out.strip() == "11"
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--format", "edgelist")
    assert out.count("4 4\n") == 2


def test_enumerate_limit(capsys, monkeypatch):
    code, _, err = run(capsys, "enumerate", "--n", "20")
    assert code == EXIT_LIMIT and "limit" in err
    monkeypatch.setenv("WALKGAUGE_MAX_N", "10")
    code, out, _ = run(capsys, "enumerate", "--n", "10", "--count-only")
    assert code == EXIT_OK and out.strip() == "657"


def test_simulate(capsys):
    argv = ["simulate", "--family", "C:3", "--from", "0", "--to", "1", "--trials", "100000", "--seed", "7"]
    code, out, _ = run(capsys, *argv)
    res = json.loads(out)
    assert code == EXIT_OK and res["exact"] == "2"
    assert abs(res["sample_mean"] - 2) <= 3 * res["standard_error"]
    assert abs(res["z_score"]) <= 3
    _, again, _ = run(capsys, *argv)
    assert again == out


@pytest.mark.parametrize("argv", [
    ["--trials", "0"],
    ["--from", "7"],
])
def test_simulate_usage_errors(capsys, argv):
    base = {"--from": "0", "--to": "1", "--trials": "10"}
    for k, v in zip(argv[::2], argv[1::2]):
        base[k] = v
    flat = [x for kv in base.items() for x in kv]
    code, _, _ = run(capsys, "simulate", "--family", "C:3", *flat)
    assert code == EXIT_USAGE


def test_simulate_step_cap(capsys):
    code, _, _ = run(capsys, "simulate", "--family", "P:8,3", "--from", "7", "--to", "1",
                     "--trials", "5", "--step-cap", "1")
    assert code == EXIT_LIMIT


def test_argparse_usage_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-check"])
    assert exc.value.code == EXIT_USAGE


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "walkgauge.cli", "enumerate", "--n", "5", "--count-only"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "5"
