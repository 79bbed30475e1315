"""Command-line front end.

    fjump fpt --p 7 --vars x,y --f "x^2+y^3"
    fjump jumps --p 5 --vars x,y --f "x^2*y^3" --hi 1
    fjump --input problem.json --json

Exit status: 0 for a certified result, 2 for a computed but uncertified or
unresolved one, 1 for an error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import jsonschema

from .errors import FjumpError, ParseError
from .frobenius import DEFAULT_ITER_CAP, CartierOp, stable_image_desc
from .ideals import Ideal
from .poly import Ring
from .testideal import (
    TRational,
    center_check,
    f_pure_at,
    f_pure_check,
    fedder_lift,
    fpt,
    is_jumping_number,
    jumping_numbers,
    nu,
    restricted_test_ideal,
    test_ideal,
    test_ideal_left_limit,
)

COMMANDS = (
    "test-ideal",
    "left-limit",
    "jump",
    "fpt",
    "jumps",
    "nu",
    "sigma",
    "fpure",
    "center",
    "fedder",
    "restricted",
    "selftest",
)

_POLY_LIST = {
    "oneOf": [
        {"type": "string"},
        {"type": "array", "items": {"type": "string"}},
    ]
}

PROBLEM_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "command": {"enum": list(COMMANDS)},
        "p": {"type": "integer", "minimum": 2},
        "vars": {
            "oneOf": [
                {"type": "string"},
                {"type": "array", "items": {"type": "string"}, "minItems": 1},
            ]
        },
        "f": {"type": "string"},
        "ideal": _POLY_LIST,
        "t": {"type": ["string", "integer"]},
        "e": {"type": "integer", "minimum": 0},
        "g": {"type": "string"},
        "Q": _POLY_LIST,
        "seed": {"type": "string"},
        "lo": {"type": ["string", "integer"]},
        "hi": {"type": ["string", "integer"]},
        "e_max": {"type": "integer", "minimum": 1},
        "b_max": {"type": "integer", "minimum": 0},
        "c_max": {"type": "integer", "minimum": 1},
        "iter_cap": {"type": "integer", "minimum": 1},
        "filter": {"type": "string"},
        "fixtures": {"type": "string"},
    },
    "required": ["command"],
    "additionalProperties": False,
}

# (command) -> required fields beyond "command"
_REQUIRED = {
    "test-ideal": ("p", "vars", "t"),
    "left-limit": ("p", "vars", "f", "t"),
    "jump": ("p", "vars", "f", "t"),
    "fpt": ("p", "vars", "f"),
    "jumps": ("p", "vars", "f", "hi"),
    "nu": ("p", "vars", "f", "e"),
    "sigma": ("p", "vars", "g"),
    "fpure": ("p", "vars", "g"),
    "center": ("p", "vars", "g", "Q"),
    "fedder": ("p", "vars", "Q", "e"),
    "restricted": ("p", "vars", "g", "Q", "t"),
    "selftest": (),
}


class CliError(FjumpError):
    pass


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fjump",
        description="Frobenius roots, test ideals and F-jumping numbers over F_p.",
    )
    ap.add_argument("command", nargs="?", choices=COMMANDS, help="operation to run")
    ap.add_argument("--input", metavar="FILE", help="problem description as JSON")
    ap.add_argument("--json", action="store_true", help="emit JSON instead of text")
    ap.add_argument("--report", action="store_true", help="wrap the result in a full run report")
    ap.add_argument("--timings", action="store_true", help="include wall time in the report")
    ap.add_argument("--p", type=int, help="characteristic (a prime)")
    ap.add_argument("--vars", help="comma-separated variable names")
    ap.add_argument("--f", help="polynomial")
    ap.add_argument("--ideal", help="comma-separated ideal generators")
    ap.add_argument("--t", help="exponent as u/d")
    ap.add_argument("--e", type=int, help="Frobenius level")
    ap.add_argument("--g", help="premultiplier of the Cartier operator")
    ap.add_argument("--Q", help="comma-separated generators of the prime Q")
    ap.add_argument("--seed", help="seed polynomial for restricted test ideals")
    ap.add_argument("--lo", help="left end of the interval (lo, hi]")
    ap.add_argument("--hi", help="right end of the interval (lo, hi]")
    ap.add_argument("--e-max", dest="e_max", type=int)
    ap.add_argument("--b-max", dest="b_max", type=int)
    ap.add_argument("--c-max", dest="c_max", type=int)
    ap.add_argument("--iter-cap", dest="iter_cap", type=int)
    ap.add_argument("--filter", help="selftest: run only suites whose name contains this")
    ap.add_argument("--fixtures", metavar="FILE", help="selftest: fixture file to use instead of the bundled one")
    return ap


_FIELDS = ("p", "vars", "f", "ideal", "t", "e", "g", "Q", "seed", "lo", "hi", "e_max", "b_max", "c_max", "iter_cap", "filter", "fixtures")


def problem_from_args(ns: argparse.Namespace) -> Dict[str, Any]:
    problem: Dict[str, Any] = {}
    if ns.input:
        try:
            with open(ns.input, encoding="utf-8") as fh:
                problem = json.load(fh)
        except OSError as exc:
            raise CliError("INPUT_UNREADABLE", f"cannot read {ns.input}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise CliError("INPUT_NOT_JSON", f"{ns.input} is not valid JSON: {exc}") from exc
        if not isinstance(problem, dict):
            raise CliError("SCHEMA", "problem file must hold a JSON object")
    for name in _FIELDS:
        v = getattr(ns, name)
        if v is not None:
            problem[name] = v
    if ns.command:
        problem["command"] = ns.command
    for key in ("ideal", "Q"):
        if isinstance(problem.get(key), str):
            problem[key] = [s for s in (x.strip() for x in problem[key].split(",")) if s]
    return problem


def validate(problem: Dict[str, Any]) -> None:
    try:
        jsonschema.validate(problem, PROBLEM_SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(x) for x in exc.absolute_path) or "problem"
        raise CliError("SCHEMA", f"{where}: {exc.message}") from None
    missing = [k for k in _REQUIRED[problem["command"]] if k not in problem]
    if problem["command"] == "test-ideal" and "f" not in problem and "ideal" not in problem:
        missing.append("f or ideal")
    if problem["command"] == "restricted" and "f" not in problem and "ideal" not in problem:
        missing.append("f or ideal")
    if missing:
        raise CliError("MISSING_FIELD", f"{problem['command']} needs: {', '.join(missing)}")


# ---------------------------------------------------------------------------
# dispatch


def _ring(problem) -> Ring:
    return Ring.make(problem["p"], problem["vars"])


def _ideal(problem, ring: Ring) -> Ideal:
    if "ideal" in problem:
        return Ideal.parse(ring, problem["ideal"])
    return Ideal(ring, [ring.parse(problem["f"])])


def _op(problem, ring: Ring, default_level: Optional[int] = None) -> Optional[CartierOp]:
    if "g" not in problem:
        return None
    g = ring.parse(problem["g"])
    level = problem.get("e") or default_level or 1
    return CartierOp.make(level, g)


def _t(problem, ring: Ring) -> TRational:
    return TRational(str(problem["t"]), ring.p)


def _caps(problem) -> Dict[str, int]:
    return {
        "e_max": problem.get("e_max", 3),
        "b_max": problem.get("b_max", 3),
        "c_max": problem.get("c_max", 3),
        "iter_cap": problem.get("iter_cap", DEFAULT_ITER_CAP),
    }


def execute(problem: Dict[str, Any]) -> Tuple[Any, bool, int]:
    """Run a validated problem.  Returns (payload, certified, iterations)."""
    cmd = problem["command"]
    if cmd == "selftest":
        from .selftest import run_selftest

        report = run_selftest(problem.get("filter"), problem.get("fixtures"))
        return report, report["failed"] == 0, 0
    ring = _ring(problem)
    iter_cap = problem.get("iter_cap", DEFAULT_ITER_CAP)
    if cmd == "test-ideal":
        r = test_ideal(_ideal(problem, ring), _t(problem, ring), _op(problem, ring), iter_cap)
        return r.to_json(), r.certified, r.iterations
    if cmd == "left-limit":
        r = test_ideal_left_limit(ring.parse(problem["f"]), _t(problem, ring), _op(problem, ring), iter_cap)
        return r.to_json(), r.certified, r.iterations
    if cmd == "jump":
        jc = is_jumping_number(ring.parse(problem["f"]), _t(problem, ring), _op(problem, ring), iter_cap)
        return jc.to_json(), jc.certified, 0
    if cmd == "fpt":
        caps = _caps(problem)
        r = fpt(ring.parse(problem["f"]), **caps)
        return r.to_json(), r.certified, r.tested
    if cmd == "jumps":
        caps = _caps(problem)
        r = jumping_numbers(ring.parse(problem["f"]), Fraction(str(problem["hi"])), Fraction(str(problem.get("lo", 0))), **caps)
        return r.to_json(), r.certified, len(r.jumps)
    if cmd == "nu":
        return nu(ring.parse(problem["f"]), problem["e"]), True, 0
    if cmd == "sigma":
        op = _op(problem, ring)
        rep = stable_image_desc(op, Ideal.unit(ring), iter_cap)
        return rep.to_json(), rep.fixed, rep.stabilization_index
    if cmd == "fpure":
        op = _op(problem, ring)
        return {"f_pure": f_pure_check(op), "f_pure_at_origin": f_pure_at(op, Ideal.maximal(ring))}, True, 0
    if cmd == "center":
        op = _op(problem, ring)
        return {"center": center_check(op, Ideal.parse(ring, problem["Q"]))}, True, 0
    if cmd == "fedder":
        gens = fedder_lift(Ideal.parse(ring, problem["Q"]), problem["e"])
        return {"generators": [str(g) for g in gens]}, True, 0
    if cmd == "restricted":
        seed = ring.parse(problem["seed"]) if "seed" in problem else None
        r = restricted_test_ideal(
            _op(problem, ring), Ideal.parse(ring, problem["Q"]), _ideal(problem, ring), _t(problem, ring), seed, iter_cap
        )
        return r.to_json(), r.certified, r.iterations
    raise CliError("UNKNOWN_COMMAND", f"unknown command {cmd!r}")


# ---------------------------------------------------------------------------
# output


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _text_lines(obj, indent: int = 0) -> List[str]:
    pad = " " * indent
    if isinstance(obj, dict):
        if not obj:
            return [pad + "{}"]
        width = max(len(str(k)) for k in obj)
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _is_flat_list(v):
                lines.append(f"{pad}{str(k).ljust(width)} :")
                lines.extend(_text_lines(v, indent + 2))
            else:
                lines.append(f"{pad}{str(k).ljust(width)} : {_scalar(v)}")
        return lines
    if isinstance(obj, list):
        if _is_flat_list(obj):
            return [pad + _scalar(obj)]
        lines = []
        for v in obj:
            sub = _text_lines(v, indent + 2)
            sub[0] = pad + "- " + sub[0].lstrip()
            lines.extend(sub)
        return lines
    return [pad + _scalar(obj)]


def _is_flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    return str(v)


def render(obj, as_json: bool) -> str:
    if as_json:
        return _dumps(obj)
    return "\n".join(_text_lines(obj))


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ap = build_parser()
    ns = ap.parse_args(argv)
    as_json = ns.json
    try:
        problem = problem_from_args(ns)
        if "command" not in problem:
            raise CliError("MISSING_FIELD", "no command given (positional argument or 'command' in --input)")
        validate(problem)
        start = time.perf_counter()
        payload, certified, iterations = execute(problem)
        elapsed = time.perf_counter() - start
    except FjumpError as exc:
        body = {"error": exc.to_json()}
        if as_json:
            print(_dumps(body), file=out)
        else:
            print(f"error [{exc.code}]: {exc.message}", file=err)
        return 1
    if ns.report:
        report = {
            "command": problem["command"],
            "input": {k: problem[k] for k in sorted(problem)},
            "result": payload,
            "certified": certified,
            "iterations": iterations,
        }
        if ns.timings:
            report["wall_time_s"] = round(elapsed, 6)
        payload = report
    elif ns.timings and isinstance(payload, dict):
        payload = dict(payload, wall_time_s=round(elapsed, 6))
    print(render(payload, as_json), file=out)
    if certified:
        return 0
    # a failing selftest is an error, not an uncertified result
    return 1 if problem["command"] == "selftest" else 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
