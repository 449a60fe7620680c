import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from froblab.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


@pytest.mark.parametrize("name,cls", [("barbell", "FrobeniusInvariant"),
                                      ("two_wires", "NotGuaranteed"),
                                      ("bubble", "SeparableOnly")])
def test_analyze(capsys, name, cls):
    code, report, err = run(capsys, "analyze", DATA / "diagrams" / f"{name}.json")
    assert code == EXIT_OK
    assert report["topology"]["predicted_class"] == cls
    assert cls in err


def test_analyze_bubble_counts(capsys):
    _, report, _ = run(capsys, "analyze", DATA / "diagrams" / "bubble.json")
    t = report["topology"]
    assert (t["vertices"], t["edges"], t["betti1"]) == (4, 4, 1)


def invariance(capsys, diagram, labelling, functor):
    return run(capsys, "invariance", DATA / "diagrams" / f"{diagram}.json",
               DATA / "labellings" / f"{labelling}.json", functor, "--json-only")


def test_invariance_connected_equal(capsys):
    code, r, err = invariance(capsys, "cut", "cut", DATA / "functors" / "complex_2_0.json")
    assert code == EXIT_OK and r["equal"] and r["guaranteed"] and r["consistent"]
    assert err == ""


def test_invariance_two_wires_unequal(capsys):
    code, r, _ = invariance(capsys, "two_wires", "frobenius_complex", "complex(2,0)")
    assert code == EXIT_OK and not r["equal"] and r["consistent"] and "witness" in r


def test_invariance_bubble(capsys):
    code, r, _ = invariance(capsys, "bubble", "frobenius_dual", "dual")
    assert code == EXIT_OK
    assert not r["equal"] and not r["laws"]["separable"] and r["laws"]["frobenius"]
    assert r["laws"]["failed"] and all(x.startswith("separability") for x in r["laws"]["failed"])
    code, r, _ = invariance(capsys, "bubble", "frobenius_dual", "complex(2,0)")
    assert r["equal"] and r["guaranteed"]


def test_invariance_float_backend(capsys):
    code, r, _ = run(capsys, "invariance", DATA / "diagrams" / "cut.json",
                     DATA / "labellings" / "cut.json", "matrix(2)", "--backend", "float64")
    assert code == EXIT_OK and r["equal"]


def test_laws(capsys):
    code, r, _ = run(capsys, "laws", DATA / "structures" / "complex_algebra.json")
    assert code == EXIT_OK and r["separable"]
    code, r, _ = run(capsys, "laws", DATA / "structures" / "dual_separable.json")
    assert code == EXIT_FAIL
    assert any(e["law"] == "separability" and not e["passed"] for e in r["entries"])
    code, _, _ = run(capsys, "laws", DATA / "structures" / "swap_yb.json")
    assert code == EXIT_OK


@pytest.mark.parametrize("name", ["r_matrix_yb", "z2_bimonoid", "swap_distributive_law",
                                  "complex_functor"])
def test_laws_corpus_passes(capsys, name):
    code, _, _ = run(capsys, "laws", DATA / "structures" / f"{name}.json")
    assert code == EXIT_OK


def test_laws_inline_algebra_not_separable(capsys):
    code, _, _ = run(capsys, "laws", DATA / "structures" / "inline_algebra.json")
    assert code == EXIT_FAIL


def test_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", tmp_path / "missing.json")
    assert code == EXIT_INPUT and "error" in err
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "analyze", bad)[0] == EXIT_INPUT
    tag = tmp_path / "tag.json"
    tag.write_text('{"type": "groupoid"}')
    assert run(capsys, "laws", tag)[0] == EXIT_INPUT
    assert run(capsys, "scenario", "no-such-scenario")[0] == EXIT_INPUT
    assert run(capsys, "fuzz", "--trials", "-1")[0] == EXIT_INPUT


def test_scenario_by_flag(capsys):
    code, r, err = run(capsys, "scenario", "--scenario", "barbell-counterexample")
    assert code == EXIT_OK and r["passed"] and "PASS" in err


def test_fuzz_small(capsys):
    code, r, err = run(capsys, "fuzz", "--trials", "12", "--seed", "3")
    assert code == EXIT_OK and r["passed"]
    fams = {f["family"]: f for f in r["families"]}
    assert fams["connected"]["passed"] == 12 and fams["disconnected"]["trials"] == 3
    assert "elapsed" in err and "elapsed" not in json.dumps(r)
    assert "tolerance" not in r["config"]


def test_fuzz_deterministic(capsys):
    a = run(capsys, "fuzz", "--trials", "8", "--seed", "11")[1]
    b = run(capsys, "fuzz", "--trials", "8", "--seed", "11")[1]
    assert json.dumps(a, sort_keys=False) == json.dumps(b, sort_keys=False)


def test_env_seed_overrides(capsys, monkeypatch):
    monkeypatch.setenv("FROBLAB_SEED", "5")
    r = run(capsys, "fuzz", "--trials", "4", "--seed", "99")[1]
    assert r["config"]["seed"] == 5


def test_console_entry_point():
    env = {**os.environ, "PYTHONPATH": str(ROOT / "src")}
    proc = subprocess.run([sys.executable, "-m", "froblab.cli", "analyze",
                           str(DATA / "diagrams" / "barbell.json"), "--json-only"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0 and proc.stderr == ""
    assert json.loads(proc.stdout)["topology"]["components"] == 1
