import json

import pytest

from fjump.selftest import load_fixtures, run_fixture, run_selftest


def test_bundled_fixtures_pass():
    report = run_selftest()
    failures = [r for r in report["results"] if not r["ok"]]
    assert failures == []
    assert report["passed"] == len(load_fixtures())


@pytest.mark.parametrize("suite", ["poly", "ideals", "frobenius", "testideal"])
def test_every_suite_is_present(suite):
    report = run_selftest(suite)
    assert report["passed"] > 0 and report["failed"] == 0


def test_filter_by_name():
    report = run_selftest("root-random")
    assert report["passed"] >= 4
    assert all(r["name"].startswith("root-random") for r in report["results"])


def test_wrong_expectation_is_named():
    fx = {"suite": "frobenius", "name": "tampered", "kind": "root", "p": 5, "vars": ["x"], "gens": ["x^25"], "e": 2, "expected": ["x^2"]}
    r = run_fixture(fx)
    assert not r["ok"] and r["name"] == "tampered" and r["got"] == ["x"]


def test_unknown_kind_is_a_failure():
    r = run_fixture({"suite": "poly", "name": "mystery", "kind": "juggle", "p": 5, "vars": ["x"]})
    assert not r["ok"] and "juggle" in r["error"]


@pytest.mark.parametrize("content", ["{broken", '{"version": 1}', "[]"])
def test_corrupted_file(tmp_path, content):
    path = tmp_path / "fixtures.json"
    path.write_text(content)
    report = run_selftest(path=path)
    assert report["failed"] == 1
    assert report["results"][0]["name"] == "fixtures-file"


def test_damaged_entry(tmp_path):
    data = {"version": 1, "fixtures": ["not an object", {"suite": "poly", "name": "ok", "kind": "degree", "p": 5, "vars": ["x"], "f": "x^2", "expected": 2}]}
    path = tmp_path / "fixtures.json"
    path.write_text(json.dumps(data))
    report = run_selftest(path=path)
    assert report["passed"] == 1 and report["failed"] == 1
