import json
import subprocess
import sys
from pathlib import Path

import pytest

from fano_k0.ak import PairingData
from fano_k0.chow import CycleClass
from fano_k0.cli import main, run
from fano_k0.lattice import BilinearLattice

DATA = Path(__file__).parent / "data"


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify(capsys):
    code, out, _ = call(capsys, "classify")
    assert code == 0
    assert len(out.strip().splitlines()) == 2 + 17
    code, out, _ = call(capsys, "classify", "--index", "2")
    assert len(out.strip().splitlines()) == 2 + 5
    code, out, _ = call(capsys, "classify", "--index", "1", "--json")
    rows = json.loads(out)
    assert len(rows) == 10 and all(r["index"] == 1 and "genus" in r for r in rows)


def test_k0(capsys):
    code, out, _ = call(capsys, "k0", "--index", "2", "--degree", "4")
    assert code == 0 and "ch(O_H) = H - 2L + (2/3)P" in out
    code, out, _ = call(capsys, "k0", "--index", "1", "--degree", "22", "--json")
    payload = json.loads(out)
    assert payload["chi0"][1] == "23/6"
    assert CycleClass.from_json(payload["basis"]["O_H"]).z == -11
    code, out, err = call(capsys, "k0", "--index", "1", "--degree", "21")
    assert code == 1 and "even degree" in err and out == ""


def test_verify_rr(capsys):
    code, out, _ = call(capsys, "verify-rr", "--all")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 5
    assert all(l.startswith("PASS") and "[[0, 1], [-1, -2]]" in l for l in lines)
    code, out, _ = call(capsys, "verify-rr", "3", "--json")
    (rep,) = json.loads(out)
    assert rep["gramB"] == [["-1", "-1"], ["-2", "-3"]]
    assert rep["gramA"] == [["-3", "-4"], ["-5", "-7"]]
    code, out, err = call(capsys, "verify-rr", "7")
    assert code == 1 and "[1, 5]" in err


def test_verify_rr_failure_exit_code(capsys, monkeypatch):
    from fano_k0 import sod

    real = sod.verify_complement_isometry

    def broken(d, bound=3):
        rep = real(d, bound)
        object.__setattr__(rep, "witnesses", [])
        return rep

    monkeypatch.setattr(sod, "verify_complement_isometry", broken)
    code, out, err = call(capsys, "verify-rr", "2", "--json")
    assert code == 2
    assert json.loads(out)[0]["passed"] is False


def test_sod(capsys):
    code, out, _ = call(capsys, "sod", "--index", "2", "--degree", "3", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["exceptional"]["verdict"] == "numerically exceptional"
    assert len(payload["complement"]["basis"]) == 2
    code, out, _ = call(capsys, "sod", "--index", "4", "--degree", "1")
    assert code == 0 and "rank 0" in out
    code, _, err = call(capsys, "sod", "--index", "1", "--degree", "8", "--collection", "mukai")
    assert code == 1


def test_bundle_and_coincidence(capsys):
    code, out, _ = call(capsys, "bundle", "index2", "--d", "3", "--k", "2", "--json")
    obj = json.loads(out)
    assert code == 0 and (obj["chi"], obj["degree_computed"]) == (6, 4)
    code, out, _ = call(capsys, "bundle", "index1", "--d", "5", "--t", "2", "--json")
    obj = json.loads(out)
    assert obj["discrepancy"] is True and obj["degree_paper"] == 12
    code, _, err = call(capsys, "bundle", "index1", "--d", "5")
    assert code == 1
    code, out, _ = call(capsys, "coincidence", "--d", "5", "--k", "4", "--t", "2", "--json")
    obj = json.loads(out)
    assert obj["condition"] and obj["dimensions_coincide"] and obj["degrees_coincide"]


def test_isometry(capsys):
    code, out, _ = call(
        capsys, "isometry", "--g1", str(DATA / "chiA_g8.json"), "--g2", str(DATA / "chiB_d3.json"),
        "--bound", "3", "--json",
    )
    obj = json.loads(out)
    assert code == 0 and [["0", "1"], ["-1", "-2"]] in obj["witnesses"]
    assert BilinearLattice.from_json(obj["g1"]) == BilinearLattice([[-3, -4], [-5, -7]])
    code, _, err = call(capsys, "isometry", "--g1", "/nonexistent.json", "--g2", str(DATA / "chiB_d3.json"))
    assert code == 1


def test_ak(capsys):
    code, out, _ = call(capsys, "ak", "--input", str(DATA / "fano3.json"), "--json")
    assert code == 0 and json.loads(out) == {"verdict": True, "reason": "dimension ≤ 3"}
    code, out, _ = call(capsys, "ak", "--input", str(DATA / "cubic4.json"), "--json")
    assert json.loads(out)["verdict"] is True
    code, out, _ = call(capsys, "ak", "--input", str(DATA / "det3.json"), "--json")
    assert json.loads(out) == {"verdict": False, "reason": "pairing at p = 3 is not perfect", "failing_p": 3}
    assert PairingData.load(DATA / "cubic4.json").n == 4


def test_usage_errors(capsys):
    assert call(capsys, "nonsense")[0] == 1
    assert call(capsys)[0] == 1
    assert call(capsys, "k0", "--index", "2")[0] == 1


def test_quiet(capsys):
    code, out, _ = call(capsys, "verify-rr", "--all", "--quiet")
    assert code == 0 and out == ""


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "--json"],
        ["k0", "--index", "3", "--degree", "2", "--json"],
        ["verify-rr", "--all", "--json"],
        ["sod", "--index", "1", "--degree", "22", "--json"],
        ["coincidence", "--d", "3", "--k", "2", "--t", "0", "--json"],
    ],
)
def test_deterministic_payloads(argv):
    a, _ = run(argv)
    b, _ = run(argv)
    assert a.dumps() == b.dumps()
    json.loads(a.dumps())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fano_k0", "verify-rr", "5"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout.startswith("PASS d=5 g=12")
