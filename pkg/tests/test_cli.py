import io
import json

import pytest

from fockcrystal.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_crystal_counts():
    assert call("crystal", "--e", "2", "--charge", "0", "--degree", "2", "--format", "counts")[1] == "1,1,2\n"
    code, out, _ = call("crystal", "--e", "2", "--charge", "0", "--degree", "2",
                        "--kleshchev", "--format", "counts")
    assert (code, out) == (0, "1,1,1\n")


def test_crystal_dot_and_json():
    code, out, _ = call("crystal", "--e", "2", "--charge", "0", "--degree", "1", "--format", "dot")
    assert code == 0 and '"()" -> "(1)" [label="0"];' in out
    code, out, _ = call("crystal", "--e", "3", "--charge", "0,1", "--degree", "2", "--format", "json")
    obj = json.loads(out)
    assert obj["e"] == 3 and obj["charge"] == [0, 1] and len(obj["layers"]) == 3


def test_bound_report():
    code, out, _ = call("bound", "--q", "e4", "--Q", "q^0,q^2,u1*q^1")
    assert code == 0 and "theorem bound (r + t): 5" in out
    code, out, _ = call("bound", "--q", "1", "--Q", "u1,u1", "--json")
    obj = json.loads(out)
    assert (obj["theorem_bound"], obj["refined_bound"]) == (3, 4)


def test_signature_lists_conormal_nodes():
    code, out, _ = call("signature", "--e", "2", "--charge", "0", "--mp", "(2,1)", "--i", "0")
    assert code == 0
    assert "co-normal: (1,3,1) (2,2,1) (3,1,1)" in out
    code, out, _ = call("signature", "--e", "2", "--charge", "0", "--mp", "(2,1)", "--i", "0", "--json")
    assert len(json.loads(out)["residues"][0]["conormal"]) == 3


def test_module_bounds():
    assert call("bound", "--module", "--e", "2", "--charge", "0", "--mp", "(2,1)", "--json")[0] == 0
    code, _, err = call("bound", "--module", "--e", "2", "--charge", "0", "--mp", "(2)")
    assert code == 2 and "not Kleshchev" in err and "usage:" in err
    code, out, _ = call("bound", "--cherednik", "--e", "2", "--charge", "0", "--mp", "(2)")
    assert code == 0 and "sum of phi: 1" in out


def test_kleshchev_and_enumerate():
    code, out, _ = call("kleshchev", "--e", "2", "--charge", "0", "--mp", "(2)")
    assert code == 0 and "not Kleshchev" in out
    code, out, _ = call("enumerate", "--r", "2", "--degree", "1")
    assert out.split() == ["(1)|()", "()|(1)"]


def test_fock_verify_and_branch():
    code, out, _ = call("fock-verify", "--e", "2", "--charge", "0,0", "--degree", "2")
    assert code == 0 and "FAIL" not in out
    code, out, _ = call("branch", "--mp", "(2)|(1)", "--split", "1,1")
    assert code == 0 and len(out.strip().splitlines()) == 4
    code, out, _ = call("branch", "--verify-diagram", "--r", "2", "--degree", "3")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ["signature", "--e", "2", "--charge", "0", "--mp", "(2,3)", "--i", "0"],
    ["crystal", "--e", "2", "--charge", "1,0", "--degree", "1"],
    ["crystal", "--e", "2", "--charge", "0", "--degree", "99"],
    ["bound", "--q", "e4", "--Q", "x^2"],
    ["fock-verify", "--e", "inf", "--charge", "0", "--degree", "1"],
    ["nonsense"],
    [],
])
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and out == "" and err


def test_parse_error_reports_position():
    _, _, err = call("signature", "--e", "2", "--charge", "0", "--mp", "(1)|(2,3)", "--i", "0")
    assert "position 4" in err


def test_degree_cap_from_environment(monkeypatch):
    monkeypatch.setenv("FOCKCRYSTAL_MAX_DEGREE", "2")
    assert call("crystal", "--e", "2", "--charge", "0", "--degree", "3")[0] == 2
    assert call("crystal", "--e", "2", "--charge", "0", "--degree", "2")[0] == 0
