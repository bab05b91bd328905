import io
import json
import subprocess
import sys

import pytest

from gfpoints.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


FAM = ("--family", "f1", "--a", "1", "--b", "1", "--c", "2")


def test_solve_json_lines():
    code, out, _ = call("solve", *FAM)
    assert code == 0
    assert out == '{"x":"-1","y":"-16","z":"4","n":1}\n'


def test_solve_table():
    code, out, _ = call("solve", *FAM, "--count", "3", "--table")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    assert lines[0].split() == ["n", "x", "y", "z"]
    assert lines[1].split() == ["1", "-1", "-16", "4"]


def test_solve_with_base():
    code, out, _ = call("solve", "--family", "f3", "--a", "1", "--b", "1", "--c", "1", "--base", "2,-1")
    assert code == 0
    assert json.loads(out)["n"] == 2


def test_solve_exhausted_is_domain_error():
    code, _, err = call("solve", "--family", "f1", "--a", "1", "--b", "1", "--c", "1", "--count", "5")
    assert code == 1 and "identity" in err


def test_verify():
    assert call("verify", *FAM, "--x", "-1", "--y", "-16", "--z", "4")[:2] == (0, "valid\n")
    code, out, _ = call("verify", *FAM, "--x", "1", "--y", "2", "--z", "3")
    assert code == 1 and out == "invalid: G(x, y, z) != 0\n"


def test_verify_generic():
    args = ("--g", "x^2 + y^2 - z^2", "--f", "1/2*t^2 + 1/2*t", "--x", "132", "--y", "143", "--z", "164")
    code, out, _ = call("verify-generic", *args)
    assert code == 1 and out == "invalid: G(x, y, z) != 0\n"
    assert call("verify-generic", *args, "--composed-only")[:2] == (0, "valid\n")
    code, out, _ = call("verify-generic", "--g", "x*y - z^2", "--f", "x^2 + x + 2",
                        "--x", "-1", "--y", "-16", "--z", "4")
    assert (code, out) == (0, "valid\n")


def test_verify_generic_parse_error_is_usage():
    code, _, err = call("verify-generic", "--g", "x + ", "--f", "t", "--x", "1", "--y", "1", "--z", "1")
    assert code == 2 and "offset" in err


def test_curve():
    code, out, _ = call("curve", *FAM)
    data = json.loads(out)
    assert code == 0
    assert (data["A"], data["B"]) == ("540", "3456")
    assert data["classification"]["kind"] == "nonsingular"
    assert data["classification"]["rank_status"] == "positive-rank-certified"
    assert data["classification"]["witness"] == {"X": "12", "Y": "108"}


def test_curve_degenerate():
    code, out, _ = call("curve", "--family", "f1", "--a", "1", "--b", "2", "--c", "1")
    data = json.loads(out)
    assert code == 0 and data["delta_paper"] == "0" and data["seeds"] == []


def test_param():
    code, out, _ = call("param", "--family", "f1", "--a", "1", "--b", "2", "--c", "1", "--case", "f1-4ac", "--t", "1")
    assert code == 0
    assert json.loads(out) == {"x": "-25/18", "y": "-1/8", "z": "-5/12"}
    code, out, _ = call("param", "--family", "f4", "--a", "3", "--b", "3", "--c", "1", "--case", "f4-3ac", "--t", "1")
    assert code == 0 and json.loads(out)["z"] == "5"


def test_param_wrong_case_is_usage():
    code, _, _ = call("param", "--family", "f1", "--a", "1", "--b", "2", "--c", "1", "--case", "f4-ac", "--t", "1")
    assert code == 2


def test_param_excluded_t():
    code, _, err = call("param", "--family", "f1", "--a", "1", "--b", "2", "--c", "1", "--case", "f1-4ac", "--t", "-1/2")
    assert code == 1 and "excluded" in err


def test_torsion():
    assert call("torsion", "--A", "54", "--B", "189", "--X", "6", "--Y", "27")[1] == '{"order":4}\n'
    out = call("torsion", "--A", "540", "--B", "3456", "--X", "12", "--Y", "108")[1]
    assert json.loads(out)["order"] is None


def test_catalog_check():
    code, out, _ = call("catalog", "--family", "f1", "--k", "3", "--check", "--m-bound", "100", "--e-bound", "4")
    data = json.loads(out)
    assert code == 0 and data["check"]["agrees"] is True
    assert len(data["points"]) == 5


def test_catalog_unlisted():
    code, out, _ = call("catalog", "--family", "f3", "--k", "27/8")
    assert code == 0 and json.loads(out)["listed"] is False
    assert call("catalog", "--family", "f2", "--k", "1")[0] == 1


def test_search():
    code, out, _ = call("search", "--family", "f4", *FAM[2:], "--height", "1")
    assert code == 0
    assert {"x": "-3/2", "y": "1", "z": "6"} in json.loads(out)["found"]


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--family", "f9", "--a", "1", "--b", "1", "--c", "1"],
        ["solve", *FAM, "--count", "0"],
        ["solve", "--family", "f1", "--a", "1.5", "--b", "1", "--c", "1"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_zero_parameter_is_domain_error():
    assert call("solve", "--family", "f1", "--a", "0", "--b", "1", "--c", "1")[0] == 1


def test_selftest():
    code, out, _ = call("selftest", "--samples", "3")
    assert code == 0
    assert all(line.startswith("PASS") for line in out.splitlines())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gfpoints", "verify", *FAM, "--x", "-1", "--y", "-16", "--z", "4"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "valid\n"


def test_negative_point_argument():
    # P2 = [2]P1 = (-15/4, -297/8) on the F1 curve at (1, 1, 2)
    code, out, _ = call("solve", *FAM, "--base", "-15/4,-297/8")
    assert code == 0 and json.loads(out)["n"] == 1
    code, out, _ = call("torsion", "--A", "-108", "--B", "297", "--X", "-6", "--Y", "-27")
    assert code == 0 and json.loads(out)["order"] is not None
