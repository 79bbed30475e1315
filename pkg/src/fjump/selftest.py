"""Bundled fixture suite.  Expected values were produced by independent slow
reference code and frozen in ``data/fixtures.json``."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .frobenius import CartierOp, cartier_apply, frobenius_root, stable_image_desc, stable_sum_asc
from .ideals import Ideal, colon, intersect
from .poly import Ring
from .testideal import fpt, jumping_numbers, nu, test_ideal

__all__ = ["load_fixtures", "run_fixture", "run_selftest"]


def load_fixtures(path: Optional[Union[str, Path]] = None) -> List[Dict[str, Any]]:
    if path is None:
        text = resources.files("fjump").joinpath("data/fixtures.json").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    data = json.loads(text)
    return data["fixtures"]


def _ring(fx, order: str = "degrevlex") -> Ring:
    return Ring.make(fx["p"], fx["vars"], fx.get("order", order))


def _op(fx, ring):
    return CartierOp.make(fx["level"], ring.parse(fx["g"]))


def _actual(fx: Dict[str, Any]) -> Any:
    kind = fx["kind"]
    ring = _ring(fx)
    if kind == "parse":
        return str(ring.parse(fx["text"]))
    if kind == "pow":
        return str(ring.parse(fx["base"]) ** fx["k"])
    if kind == "degree":
        return ring.parse(fx["f"]).total_degree()
    if kind == "gb":
        return Ideal.parse(ring, fx["gens"]).to_strings()
    if kind == "intersect":
        return intersect(Ideal.parse(ring, fx["left"]), Ideal.parse(ring, fx["right"])).to_strings()
    if kind == "colon":
        return colon(Ideal.parse(ring, fx["left"]), Ideal.parse(ring, fx["right"])).to_strings()
    if kind == "root":
        return frobenius_root(Ideal.parse(ring, fx["gens"]), fx["e"]).to_strings()
    if kind == "cartier":
        return cartier_apply(_op(fx, ring), Ideal.parse(ring, fx["gens"])).to_strings()
    if kind == "stable_sum":
        return stable_sum_asc(_op(fx, ring), Ideal.parse(ring, fx["gens"])).stable.to_strings()
    if kind == "stable_image":
        return stable_image_desc(_op(fx, ring), Ideal.parse(ring, fx["gens"])).stable.to_strings()
    if kind == "test_ideal":
        r = test_ideal(Ideal.parse(ring, [fx["f"]]), fx["t"])
        if not r.certified or not r.recheck():
            return {"uncertified": r.ideal.to_strings()}
        return r.ideal.to_strings()
    if kind == "fpt":
        r = fpt(ring.parse(fx["f"]))
        return r.value.to_json() if r.certified else {"unresolved": [str(x) for x in r.interval]}
    if kind == "nu":
        return nu(ring.parse(fx["f"]), fx["e"])
    if kind == "jumps":
        return jumping_numbers(ring.parse(fx["f"]), Fraction(fx["hi"])).to_json()
    raise ValueError(f"unknown fixture kind {kind!r}")


def run_fixture(fx: Dict[str, Any]) -> Dict[str, Any]:
    name = fx.get("name", "?")
    try:
        got = _actual(fx)
    except Exception as exc:  # a broken fixture is reported, not raised
        return {"name": name, "suite": fx.get("suite"), "ok": False, "error": f"{type(exc).__name__}: {exc}"}
    ok = got == fx.get("expected")
    out = {"name": name, "suite": fx.get("suite"), "ok": ok}
    if not ok:
        out["expected"] = fx.get("expected")
        out["got"] = got
    return out


def run_selftest(filter: Optional[str] = None, path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """Run every fixture whose suite or name contains ``filter``."""
    try:
        fixtures = load_fixtures(path)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        failure = {"name": "fixtures-file", "suite": "selftest", "ok": False, "error": f"{type(exc).__name__}: {exc}"}
        return {"passed": 0, "failed": 1, "results": [failure]}
    results = []
    for fx in fixtures:
        if not isinstance(fx, dict):
            results.append({"name": "?", "suite": None, "ok": False, "error": "fixture is not an object"})
            continue
        if filter and filter not in str(fx.get("suite", "")) and filter not in str(fx.get("name", "")):
            continue
        results.append(run_fixture(fx))
    passed = sum(r["ok"] for r in results)
    return {"passed": passed, "failed": len(results) - passed, "results": results}
