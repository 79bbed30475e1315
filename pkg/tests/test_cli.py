import io
import json
import subprocess
import sys

import pytest

from fjump.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["fpt", "--p", "7", "--vars", "x,y", "--f", "x^2+y^3"], {"fpt": "5/6", "certified": True}),
        (["fpt", "--p", "5", "--vars", "x,y", "--f", "x^2+y^3"], {"fpt": "4/5", "certified": True}),
        (["jumps", "--p", "5", "--vars", "x,y", "--f", "x^2*y^3", "--hi", "1"], ["1/3", "1/2", "2/3", "1"]),
        (["jumps", "--p", "5", "--vars", "x", "--f", "x", "--hi", "3"], ["1", "2", "3"]),
        (["nu", "--p", "5", "--vars", "x", "--f", "x^2", "--e", "1"], 2),
        (["fedder", "--p", "3", "--vars", "x,y", "--Q", "y", "--e", "1"], {"generators": ["y^2"]}),
        (["center", "--p", "5", "--vars", "x,y", "--g", "y^4", "--Q", "y"], {"center": True}),
        (["fpure", "--p", "5", "--vars", "x", "--g", "x^5"], {"f_pure": False, "f_pure_at_origin": False}),
    ],
)
def test_json_examples(argv, expected):
    code, out, _ = call(*argv, "--json")
    assert code == 0
    assert json.loads(out) == expected


def test_test_ideal_json():
    code, out, _ = call("test-ideal", "--p", "5", "--vars", "x,y", "--f", "x^2+y^3", "--t", "4/5", "--json")
    js = json.loads(out)
    assert code == 0
    assert js["ideal"] == ["x", "y"] and js["certified"] is True and js["t"] == "4/5"


def test_jump_json():
    code, out, _ = call("jump", "--p", "5", "--vars", "x", "--f", "x^2", "--t", "1/2", "--json")
    assert code == 0
    assert json.loads(out)["is_jump"] is True


def test_left_limit_and_sigma():
    code, out, _ = call("left-limit", "--p", "5", "--vars", "x", "--f", "x^2", "--t", "1/2", "--json")
    assert code == 0 and json.loads(out)["ideal"] == ["1"]
    code, out, _ = call("sigma", "--p", "5", "--vars", "x", "--g", "x^5", "--json")
    assert code == 0 and json.loads(out)["iterates"][-1] == ["x"]


def test_restricted_command():
    code, out, _ = call("restricted", "--p", "5", "--vars", "x,y", "--g", "y^4", "--Q", "y", "--f", "x^2+y", "--t", "1/2", "--json")
    assert code == 0
    assert json.loads(out)["ideal"] == ["x", "y"]


def test_text_output_is_default():
    code, out, _ = call("fpt", "--p", "7", "--vars", "x,y", "--f", "x^2+y^3")
    assert code == 0
    assert out.splitlines() == ["fpt       : 5/6", "certified : true"]


def test_uncertified_exit_code():
    code, out, _ = call("test-ideal", "--p", "5", "--vars", "x,y", "--ideal", "x,y^2", "--t", "1/2", "--json")
    assert code == 2
    assert json.loads(out)["certified"] is False


@pytest.mark.parametrize(
    "argv, code_name",
    [
        (["fpt", "--p", "4", "--vars", "x", "--f", "x"], "BAD_PRIME"),
        (["fpt", "--p", "5", "--vars", "x", "--f", "x +"], "PARSE_ERROR"),
        (["fpt", "--p", "5", "--vars", "x", "--f", "y"], "PARSE_ERROR"),
        (["fpt", "--p", "5", "--vars", "x"], "MISSING_FIELD"),
        (["test-ideal", "--p", "5", "--vars", "x", "--f", "x", "--t", "abc"], "BAD_RATIONAL"),
        (["nu", "--p", "5", "--vars", "x", "--f", "x+1", "--e", "1"], "UNIT_AT_ORIGIN"),
        (["restricted", "--p", "5", "--vars", "x,y", "--g", "1", "--Q", "x", "--f", "y", "--t", "1/2"], "NOT_A_CENTER"),
    ],
)
def test_error_codes(argv, code_name):
    code, out, _ = call(*argv, "--json")
    assert code == 1
    assert json.loads(out)["error"]["code"] == code_name


def test_error_text_goes_to_stderr():
    code, out, err = call("fpt", "--p", "4", "--vars", "x", "--f", "x")
    assert code == 1 and out == ""
    assert err.startswith("error [BAD_PRIME]")


def test_input_file(tmp_path):
    path = tmp_path / "problem.json"
    path.write_text(json.dumps({"p": 5, "vars": ["x", "y"], "command": "jump", "f": "x^2", "t": "1/2"}))
    code, out, _ = call("--input", str(path), "--json")
    assert code == 0
    assert json.loads(out)["right"] == ["x"]


@pytest.mark.parametrize(
    "content, code_name",
    [
        ('{"p": 5, "vars": ["x"], "command": "nu", "f": "x", "e": 1, "colour": 1}', "SCHEMA"),
        ('{"p": "five", "vars": ["x"], "command": "nu", "f": "x", "e": 1}', "SCHEMA"),
        ('{"p": 5, "vars": ["x"], "command": "dance"}', "SCHEMA"),
        ("[1, 2]", "SCHEMA"),
        ("{not json", "INPUT_NOT_JSON"),
    ],
)
def test_input_schema_errors(tmp_path, content, code_name):
    path = tmp_path / "bad.json"
    path.write_text(content)
    code, out, _ = call("--input", str(path), "--json")
    assert code == 1
    assert json.loads(out)["error"]["code"] == code_name


def test_missing_input_file(tmp_path):
    code, out, _ = call("--input", str(tmp_path / "nope.json"), "--json")
    assert code == 1 and json.loads(out)["error"]["code"] == "INPUT_UNREADABLE"


def test_report_wraps_result():
    code, out, _ = call("nu", "--p", "5", "--vars", "x", "--f", "x^2", "--e", "1", "--json", "--report")
    js = json.loads(out)
    assert code == 0
    assert js == {
        "command": "nu",
        "input": {"command": "nu", "e": 1, "f": "x^2", "p": 5, "vars": "x"},
        "result": 2,
        "certified": True,
        "iterations": 0,
    }


def test_timings_flag():
    code, out, _ = call("fpt", "--p", "5", "--vars", "x", "--f", "x", "--json", "--report", "--timings")
    assert code == 0 and json.loads(out)["wall_time_s"] >= 0


@pytest.mark.parametrize(
    "argv",
    [
        ["jumps", "--p", "7", "--vars", "x,y", "--f", "x^2+y^3", "--hi", "2", "--json"],
        ["test-ideal", "--p", "3", "--vars", "x,y", "--f", "x*y^2+x^2*y", "--t", "7/8", "--json", "--report"],
    ],
)
def test_byte_identical_output(argv):
    outs = [subprocess.run([sys.executable, "-m", "fjump.cli", *argv], capture_output=True, check=False).stdout for _ in range(2)]
    assert outs[0] == outs[1] and outs[0]


def test_selftest_command():
    code, out, _ = call("selftest", "--json")
    js = json.loads(out)
    assert code == 0 and js["failed"] == 0 and js["passed"] >= 40


def test_selftest_filter():
    code, out, _ = call("selftest", "--filter", "frobenius", "--json")
    js = json.loads(out)
    assert code == 0
    assert js["passed"] > 0 and {r["suite"] for r in js["results"]} == {"frobenius"}


def test_selftest_corrupted_file(tmp_path):
    path = tmp_path / "fixtures.json"
    path.write_text('{"version": 1, "fixtures": [{"suite": "poly", "name": "bent", "kind": "degree", "p": 5, "vars": ["x"], "f": "x^2", "expected": 3}]}')
    code, out, _ = call("selftest", "--fixtures", str(path), "--json")
    js = json.loads(out)
    assert code == 1
    assert js["failed"] == 1 and js["results"][0]["name"] == "bent"
