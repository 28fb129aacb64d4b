import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from corings import cli
from corings.exactla import QQ, Mat
from corings.coring import Bicomodule, trivial_coring, dual_coalgebra
from corings.algebra import group_algebra, cyclic_group_table
from corings.frobenius import FrobeniusSystem, verify_frobenius_system


ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
SCHEMA = json.loads((ROOT / "docs" / "input_schema.json").read_text())


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), out


@pytest.mark.parametrize("path", sorted(CORPUS.glob("*.json")), ids=lambda p: p.name)
def test_corpus_matches_schema(path):
    jsonschema.validate(json.loads(path.read_text()), SCHEMA)


@pytest.mark.parametrize("argv, code", [
    (["check-algebra", "trivial.json"], 0),
    (["check-coring", "trivial.json"], 0),
    (["check-coring", "qc2_dual.json"], 0),
    (["cotensor", "comodules.json", "--left", "M", "--right", "N"], 0),
    (["nat-space", "comodules.json", "--name", "kX3"], 0),
    (["coseparable", "trivial.json"], 0),
    (["coseparable", "comodules.json", "--name", "D*"], 1),
    (["injective", "comodules.json", "--name", "trivial"], 1),
    (["injective", "comodules.json", "--name", "M"], 0),
    (["frobenius-pair", "pair.json", "--x", "V", "--l", "W"], 0),
    (["frobenius-pair", "pair.json", "--x", "V", "--l", "W", "--max-trials", "0"], 2),
    (["frobenius-coring", "qc2_dual.json"], 0),
    (["frobenius-coring", "t2_dual.json"], 1),
    (["frobenius-extension", "extension.json", "--name", "Q->QC2"], 0),
    (["frobenius-extension", "extension.json", "--name", "Q->T2"], 1),
    (["graded-build", "graded.json"], 0),
    (["graded-cohom", "graded.json"], 0),
    (["tstar-check", "graded.json"], 0),
    (["entwine-check", "entwine.json", "--name", "graded"], 0),
    (["entwine-check", "entwine.json", "--name", "bad"], 1),
    (["entwine-check", "entwine.json", "--name", "Q->T2"], 1),
])
def test_exit_codes(capsys, argv, code):
    argv = [argv[0], CORPUS / argv[1]] + argv[2:]
    got, out, _ = run(capsys, *argv)
    assert got == code, out
    assert out.rstrip().endswith("(exit %d)" % code)


def test_t2_reason(capsys):
    code, rep, _ = run_json(capsys, "frobenius-coring", CORPUS / "t2_dual.json")
    assert code == 1 and rep["status"] == "fail"
    res = rep["results"][0]["result"]
    assert res["verdict"] == "NotFrobenius"
    assert "generic determinant ≡ 0 (grid exhausted)" in res["reason"]


def test_witness_round_trip(capsys):
    code, rep, _ = run_json(capsys, "frobenius-coring", CORPUS / "qc2_dual.json")
    assert code == 0
    res = rep["results"][0]["result"]
    assert res["verdict"] == "Frobenius" and res["tag"] == "Cor26+Cor28(c)"
    w = res["witness"]["system"]
    C = dual_coalgebra(group_algebra(QQ, cyclic_group_table(2), name="QC2"))
    TA = trivial_coring(C.base)
    X = Bicomodule(TA, C, C.carrier, None, C.delta, name=w["X"])
    L = Bicomodule(C, TA, C.carrier, C.delta, None, name=w["Lambda"])
    s = FrobeniusSystem(X, L, Mat.from_rows(QQ, w["psi"]), Mat.from_rows(QQ, w["omega"]))
    assert verify_frobenius_system(s).ok
    iso = Mat.from_rows(QQ, res["witness"]["isomorphism"])
    assert iso.rank() == C.dim


@pytest.mark.parametrize("argv", [
    ["frobenius-extension", "extension.json"],
    ["check-coring", "trivial.json"],
    ["entwine-check", "entwine.json"],
])
def test_json_deterministic_across_runs_and_threads(capsys, argv):
    argv = [argv[0], CORPUS / argv[1]]
    outs = [run_json(capsys, *argv, "--threads", t)[2] for t in ("1", "1", "3")]
    assert outs[0] == outs[1] == outs[2]


def test_seed_never_affects_verdicts(capsys):
    a = run_json(capsys, "frobenius-coring", CORPUS / "qc2_dual.json", "--seed", "1")[2]
    b = run_json(capsys, "frobenius-coring", CORPUS / "qc2_dual.json", "--seed", "99")[2]
    assert a == b


def _write(tmp_path, doc, name="doc.json"):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return p


@pytest.mark.parametrize("doc, where", [
    ("{not json", "doc.json"),
    ({"field": "R", "corings": {}}, "$.field"),
    ({"field": "Q", "corings": {"C": {"kind": "grouplike"}}}, "$.corings.C"),
    ({"field": "Q", "corings": {"C": {"kind": "coalgebra", "dim": 1, "delta": [[1, 2]], "epsilon": [[1]]}}},
     "$.corings.C.delta"),
    ({"field": "Q", "corings": {"C": {"kind": "coalgebra", "dim": 1, "delta": [[0.5]], "epsilon": [[1]]}}},
     "$.corings.C.delta"),
    ({"field": "Q", "corings": {"C": {"kind": "trivial", "algebra": "nope"}}}, "$.corings.C.algebra"),
])
def test_input_errors(capsys, tmp_path, doc, where):
    p = _write(tmp_path, doc)
    code, out, _ = run(capsys, "check-coring", p, "--format", "json")
    assert code == 3
    err = json.loads(out)
    assert err["exit_code"] == 3 and where in err["location"]


def test_missing_name_and_text_errors(capsys):
    code, _, err = run(capsys, "check-coring", CORPUS / "trivial.json", "--name", "nope")
    assert code == 3 and "nope" in err
    code, _, err = run(capsys, "check-coring", CORPUS / "missing.json")
    assert code == 3 and "cannot read" in err


def test_env_budget_override(capsys, monkeypatch):
    monkeypatch.setenv("CORINGS_MAX_TRIALS", "0")
    code, rep, _ = run_json(capsys, "frobenius-pair", CORPUS / "pair.json", "--x", "V", "--l", "W")
    assert code == 2 and rep["budget"]["trials"] == 0
    monkeypatch.setenv("CORINGS_MAX_TRIALS", "lots")
    code, _, err = run(capsys, "frobenius-pair", CORPUS / "pair.json", "--x", "V", "--l", "W")
    assert code == 3 and "CORINGS_MAX_TRIALS" in err


def test_mod_p_document(capsys, tmp_path):
    doc = {"field": {"Fp": 2}, "groups": {"C2": {"cyclic": 2}},
           "algebras": {"A": {"builtin": "group", "group": "C2"}},
           "corings": {"A*": {"kind": "dual", "algebra": "A"}}}
    p = _write(tmp_path, doc)
    code, rep, _ = run_json(capsys, "coseparable", p)
    # F2 C2 is not semisimple, so its dual coalgebra is not coseparable
    assert code == 1 and rep["field"] == {"Fp": 2}


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "corings.cli", "check-coring", str(CORPUS / "trivial.json")],
                         capture_output=True, text=True, env=dict(os.environ))
    assert out.returncode == 0 and "status: pass" in out.stdout
