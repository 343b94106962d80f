import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from halfspace_lab.arrangement import sign_set
from halfspace_lab.cli import run
from halfspace_lab.deformations import coning
from halfspace_lab.derived import enumerate_circuits
from halfspace_lab.exactla import matrix, vector
from halfspace_lab.jsonio import signs_from_json
from halfspace_lab.sampling import SEED_ENV
from halfspace_lab.signs import parse_sign

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
EX1 = str(DATA / "ex1.json")
LINE2 = str(DATA / "line2.json")
U_EX = matrix([(-1, 0), (0, 1), (0, -1), (1, 1)])


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def payload(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_locate_example():
    assert payload("locate", "--config", EX1, "--a", "0,1,0,1")["sign"] == "+,0,+"
    assert payload("locate", "--config", EX1, "--a", "b1")["sign"] == "+,-,+"


def test_deform_counts_example():
    got = payload("deform", "counts", "--config", LINE2, "--a", "0,1")
    assert {k: got[k] for k in ("fA", "fCone", "fLift", "identities_hold")} == {
        "fA": 5,
        "fCone": 13,
        "fLift": 9,
        "identities_hold": True,
    }


def test_circuits_round_trip():
    got = payload("circuits", "--config", EX1)["circuits"]
    expect = enumerate_circuits(U_EX)
    assert [tuple(i - 1 for i in c["support"]) for c in got] == [c.support for c in expect]
    assert [vector(c["vector"]) for c in got] == [c.vector for c in expect]


def test_signs_round_trip():
    got = payload("signs", "--config", EX1, "--a", "a", "--kind", "cone")
    signs = got["signs"] if isinstance(got, dict) else got
    assert signs_from_json(signs) == sign_set(coning(U_EX, (0, 1, 0, 1)).cone)


def test_poly_commands():
    assert payload("poly", "feas", "--config", EX1, "--tetrad", "triangle")["empty"] is False
    assert payload("poly", "bounded", "--config", EX1, "--tetrad", "triangle")["bounded"] is True
    assert payload("poly", "bounded", "--config", EX1, "--tetrad", "strip")["bounded"] is False
    faces = payload("poly", "faces", "--config", EX1, "--tetrad", "triangle")
    assert len(faces["faces"]) == 7
    assert payload("poly", "normalfan", "--config", EX1, "--tetrad", "triangle", "--tetrad2", "pentagon")[
        "normal_fan_equal"
    ] is False
    assert payload("poly", "normalfan", "--config", EX1, "--a", "a", "--b", "a2")["normal_fan_equal"] is True
    got = payload("poly", "feas", "--config", EX1, "--a", "0,1,0,1", "--J", "1,2,3,4")
    assert got["empty"] is False


def test_equiv_commands():
    assert payload("equiv", "sign", "--config", EX1, "--a", "a", "--b", "a2")["equivalent"] is True
    assert payload("equiv", "sign", "--config", EX1, "--a", "a", "--b", "b1")["equivalent"] is False
    assert payload("equiv", "comb", "--config", EX1, "--a", "a", "--b", "a2")["equivalent"] is True
    assert payload("equiv", "semilattice", "--config", EX1, "--a", "a", "--b", "a2")["equivalent"] is True
    code, _, err = call("equiv", "normal", "--config", EX1, "--a", "a", "--b", "a2")
    assert code == 2 and "proportional" in err
    assert payload("equiv", "normal", "--config", EX1, "--a", "a", "--b", "b2", "--allow-multi")["equivalent"] is False


def test_om_commands(tmp_path):
    assert payload("om", "check", "--config", EX1, "--a", "a")["ok"] is True
    affine = payload("om", "affine", "--config", EX1, "--a", "a", "--g", "5")
    assert len(affine["covectors"]) == 23
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(["00", "+0"]))
    code, out, _ = call("om", "check", "--covectors", str(bad))
    assert code == 1 and json.loads(out)["axiom"] == "symmetry"
    found = payload(
        "om", "equiv", "--config", str(DATA / "reorient.json"), "--config2", str(DATA / "reorient_prime.json"),
        "--kind", "translate", "--up-to-symmetry", "--all-witnesses",
    )
    assert {"perm": [2, 1, 3], "reoriented": [3]} in found["witnesses"]
    plain = payload(
        "om", "equiv", "--config", str(DATA / "reorient.json"), "--config2", str(DATA / "reorient_prime.json"),
        "--kind", "translate",
    )
    assert plain["equivalent"] is False


def test_operators_command():
    one = payload("operators", "fixpoint", "--config", EX1, "--faces", "+0+")
    assert one["fixed_point"] is True and one["face_of_sign"] == ["+,0,+"]
    two = payload("operators", "fixpoint", "--config", EX1, "--faces", "+0+,+-+")
    assert two["fixed_point"] is False
    assert payload("operators", "fixpoint", "--config", EX1, "--faces", "+0+", "+-+")["fixed_point"] is False


def test_verify_exit_codes_and_determinism():
    code, first, _ = call("verify", "thm6_2", "--config", EX1, "--seed", "7")
    assert code == 0 and json.loads(first)["ok"]
    code2, second, _ = call("verify", "thm6_2", "--config", EX1, "--seed", "7")
    assert first == second
    # lifts of a and -a agree, so the lift leg of thm1_4 reports violations
    code, out, _ = call("verify", "thm1_4", "--config", EX1, "--trials", "30", "--seed", "7")
    assert code == 1
    report = json.loads(out)["suites"][0]
    assert report["violations"] and all(v["lift"] != v["same_open_face"] for v in report["violations"])


def test_verify_is_bit_identical_across_processes():
    cmd = [sys.executable, "-m", "halfspace_lab", "verify", "thm1_2", "--config", EX1, "--trials", "3", "--seed", "5"]
    a = subprocess.run(cmd, capture_output=True, text=True)
    b = subprocess.run(cmd, capture_output=True, text=True)
    assert a.returncode == 0 and a.stdout == b.stdout


def test_seed_environment_override(monkeypatch):
    monkeypatch.setenv(SEED_ENV, "11")
    got = payload("verify", "thm6_2", "--config", EX1, "--seed", "3")
    assert got["seed"] == 11


def test_usage_errors(tmp_path):
    assert call("nonsense")[0] == 2
    assert call("locate", "--a", "0,1")[0] == 2
    assert call("locate", "--config", str(tmp_path / "missing.json"), "--a", "0")[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert call("circuits", "--config", str(broken))[0] == 2
    assert call("locate", "--config", EX1, "--a", "0,1")[0] == 2
    assert call("locate", "--config", EX1, "--a", "0,x,0,1")[0] == 2
    assert call("operators", "fixpoint", "--config", EX1, "--faces", "+++++")[0] == 2


def test_text_format():
    code, out, _ = call("locate", "--config", EX1, "--a", "0,1,0,1", "--format", "text")
    assert code == 0 and out.splitlines()[0] == "sign +,0,+"


def test_derived_faces_listing():
    got = payload("derived", "--config", EX1, "--faces")
    signs = {parse_sign(f["sign"]) for f in got["faces"]}
    assert len(signs) == 13
