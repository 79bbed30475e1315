"""Regenerate src/fjump/data/fixtures.json from the oracles in this directory.

Expected values come from the slow reference code (dense trace-map roots,
the naive test-ideal chain, brute-force ν, the monomial jump formula) or are
stated by hand where the value is elementary.  Run from the repo root:

    python3 tests/make_fixtures.py
"""

from __future__ import annotations

import json
import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (  # noqa: E402
    chain_tau_stable,
    monomial_jumps,
    nu_bruteforce,
    oracle_frobenius_root,
)

from fjump.ideals import Ideal  # noqa: E402
from fjump.poly import Poly, Ring  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "src" / "fjump" / "data" / "fixtures.json"


def fx(suite, name, kind, **kw):
    return {"suite": suite, "name": name, "kind": kind, **kw}


def poly_fixtures():
    return [
        fx("poly", "parse-basic", "parse", p=5, vars=["x", "y"], text="x^2 + y^3", expected="y^3 + x^2"),
        fx("poly", "parse-mod-p", "parse", p=5, vars=["x"], text="7*x", expected="2*x"),
        fx("poly", "parse-cancel", "parse", p=5, vars=["x"], text="x - x", expected="0"),
        fx("poly", "freshman", "pow", p=2, vars=["x", "y"], base="x + y", k=2, expected="x^2 + y^2"),
        fx("poly", "big-exponent", "pow", p=3, vars=["x"], base="x", k=3**20, expected=f"x^{3**20}"),
        fx("poly", "degree", "degree", p=5, vars=["x", "y"], f="x^2*y^3", expected=5),
        fx("poly", "degree-zero", "degree", p=5, vars=["x", "y"], f="0", expected=None),
    ]


def ideal_fixtures():
    return [
        fx("ideals", "gb-linear", "gb", p=5, vars=["x", "y"], order="degrevlex", gens=["x", "y"], expected=["x", "y"]),
        # by hand: x^3 = x(x^2 − y) + xy and x^2 y = y(x^2 − y) + y^2
        fx("ideals", "gb-lex", "gb", p=5, vars=["x", "y"], order="lex", gens=["y - x^2", "x^3"], expected=["x^2 + 4*y", "x*y", "y^2"]),
        fx("ideals", "gb-unit", "gb", p=5, vars=["x", "y"], order="degrevlex", gens=["1", "x"], expected=["1"]),
        fx("ideals", "intersect", "intersect", p=5, vars=["x", "y"], left=["x"], right=["y"], expected=["x*y"]),
        fx("ideals", "colon-monomial", "colon", p=5, vars=["x", "y"], left=["x^2*y", "x*y^2"], right=["x", "y"], expected=["x*y"]),
        fx("ideals", "colon-power", "colon", p=5, vars=["x", "y"], left=["x^10 + y^15"], right=["x^2 + y^3"], expected=["y^12 + 4*x^2*y^9 + x^4*y^6 + 4*x^6*y^3 + x^8"]),
    ]


def _root_fx(name, p, names, gens, e):
    ring = Ring.make(p, names)
    J = Ideal.parse(ring, gens)
    expected = oracle_frobenius_root(J, e).to_strings()
    return fx("frobenius", name, "root", p=p, vars=list(ring.names), gens=gens, e=e, expected=expected)


def frobenius_fixtures():
    out = [
        _root_fx("root-pure-power", 5, "x", ["x^25"], 2),
        _root_fx("root-monomial", 3, "x", ["x^20"], 2),
        _root_fx("root-corner", 7, "x", ["x^6"], 1),
        _root_fx("root-cusp", 5, "x,y", ["x^2 + y^3"], 1),
    ]
    rng = random.Random(20240611)
    for k in range(8):
        p = rng.choice([2, 3, 5, 7])
        names = rng.choice(["x,y", "x,y,z"])
        ring = Ring.make(p, names)
        e = rng.randint(1, 2)
        q = p**e
        gens = []
        for _ in range(rng.randint(1, 2)):
            # exponents reach past q so that the root is not always (1)
            terms = {}
            lift = [rng.randint(0, 2) * q for _ in range(ring.nvars)]
            for _ in range(rng.randint(1, 4)):
                m = list(lift)
                for _ in range(rng.randint(0, 6)):
                    m[rng.randrange(ring.nvars)] += 1
                terms[tuple(m)] = rng.randrange(1, p)
            g = Poly(ring, terms, normalized=False)
            if g.terms:
                gens.append(str(g))
        if gens:
            out.append(_root_fx(f"root-random-{k}", p, names, gens, e))
    out += [
        fx("frobenius", "cartier-corner", "cartier", p=5, vars=["x"], level=1, g="1", gens=["x^4"], expected=["1"]),
        fx("frobenius", "cartier-shift", "cartier", p=5, vars=["x"], level=1, g="x^5", gens=["1"], expected=["x"]),
        fx("frobenius", "cartier-shift-twice", "cartier", p=5, vars=["x"], level=1, g="x^5", gens=["x"], expected=["x"]),
        fx("frobenius", "sum-asc", "stable_sum", p=5, vars=["x"], level=1, g="1", gens=["x^5"], expected=["1"]),
        fx("frobenius", "image-desc", "stable_image", p=5, vars=["x"], level=1, g="x^5", gens=["1"], expected=["x"]),
    ]
    return out


def _tau_fx(name, p, names, f, t):
    ring = Ring.make(p, names)
    expected = chain_tau_stable(ring.parse(f), Fraction(t)).to_strings()
    return fx("testideal", name, "test_ideal", p=p, vars=list(ring.names), f=f, t=t, expected=expected)


def _fpt_oracle(p, names, f, guess):
    """The guess is accepted if ν(p^e) = ⌈guess·p^e⌉ − 1 for e <= 3 and the
    chain value at the guess lies in the maximal ideal."""
    ring = Ring.make(p, names)
    fp = ring.parse(f)
    a = Fraction(guess)
    for e in (1, 2, 3):
        q = p**e
        assert nu_bruteforce(fp, e) == -(-a.numerator * q // a.denominator) - 1, (p, f, e)
    tau = chain_tau_stable(fp, a)
    assert all(g.constant_coeff() == 0 for g in tau.gb().basis)
    return fx("testideal", f"fpt-{f}-p{p}", "fpt", p=p, vars=list(ring.names), f=f, expected=guess)


def testideal_fixtures():
    out = [
        _tau_fx("tau-x-3/2", 5, "x,y", "x", "3/2"),
        _tau_fx("tau-cusp-4/5", 5, "x,y", "x^2 + y^3", "4/5"),
        _tau_fx("tau-cusp-5/6", 7, "x,y", "x^2 + y^3", "5/6"),
        _tau_fx("tau-x2-1/2", 5, "x,y", "x^2", "1/2"),
        _tau_fx("tau-node-7/8", 3, "x,y", "x*y^2 + x^2*y", "7/8"),
        _tau_fx("tau-cusp-p2", 2, "x,y", "x^2 + y^3", "3/4"),
    ]
    for p in (2, 3, 5, 7):
        out.append(_fpt_oracle(p, "x", "x", "1"))
    out.append(_fpt_oracle(5, "x,y", "x^2", "1/2"))
    out.append(_fpt_oracle(5, "x,y", "x^2 + y^3", "4/5"))
    out.append(_fpt_oracle(7, "x,y", "x^2 + y^3", "5/6"))
    for p, names, f, e in [(5, "x", "x", 1), (5, "x", "x^2", 1), (7, "x,y", "x^2 + y^3", 1), (5, "x,y", "x^2 + y^3", 2)]:
        ring = Ring.make(p, names)
        out.append(fx("testideal", f"nu-{f}-p{p}-e{e}", "nu", p=p, vars=list(ring.names), f=f, e=e, expected=nu_bruteforce(ring.parse(f), e)))
    out.append(fx("testideal", "jumps-x2y3", "jumps", p=5, vars=["x", "y"], f="x^2*y^3", hi="1", expected=[str(a) for a in monomial_jumps([2, 3])]))
    out.append(fx("testideal", "jumps-x-skoda", "jumps", p=5, vars=["x"], f="x", hi="3", expected=[str(a) for a in monomial_jumps([1], 3)]))
    out.append(fx("testideal", "jumps-x2", "jumps", p=5, vars=["x", "y"], f="x^2", hi="1", expected=[str(a) for a in monomial_jumps([2])]))
    return out


def main():
    fixtures = poly_fixtures() + ideal_fixtures() + frobenius_fixtures() + testideal_fixtures()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps({"version": 1, "fixtures": fixtures}, indent=1) + "\n", encoding="utf-8")
    print(f"wrote {len(fixtures)} fixtures to {OUT}")


if __name__ == "__main__":
    main()
