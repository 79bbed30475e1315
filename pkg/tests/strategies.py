"""Hypothesis strategies and seeded random generators shared by the tests."""

from __future__ import annotations

import random
from hypothesis import strategies as st

from fjump.ideals import Ideal
from fjump.poly import Poly, Ring

PRIMES = [2, 3, 5, 7]


def poly_strategy(ring: Ring, max_terms: int = 4, max_exp: int = 4):
    mono = st.tuples(*[st.integers(0, max_exp) for _ in range(ring.nvars)])
    coeff = st.integers(1, ring.p - 1) if ring.p > 2 else st.just(1)
    return st.dictionaries(mono, coeff, max_size=max_terms).map(lambda d: Poly(ring, d, normalized=False))


@st.composite
def ring_and_polys(draw, count: int = 2, max_terms: int = 4, max_exp: int = 4):
    p = draw(st.sampled_from(PRIMES))
    names = draw(st.sampled_from(["x", "x,y", "x,y,z"]))
    ring = Ring.make(p, names)
    return ring, [draw(poly_strategy(ring, max_terms, max_exp)) for _ in range(count)]


def random_poly(rng: random.Random, ring: Ring, max_deg: int, max_terms: int = 4, lift: int = 0) -> Poly:
    """A nonzero polynomial with total degree at most ``max_deg``, shifted by
    a random multiple of ``lift`` in each variable."""
    while True:
        shift = [rng.randint(0, 2) * lift for _ in range(ring.nvars)] if lift else [0] * ring.nvars
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            d = rng.randint(0, max_deg)
            m = [0] * ring.nvars
            for _ in range(d):
                m[rng.randrange(ring.nvars)] += 1
            terms[tuple(a + s for a, s in zip(m, shift))] = rng.randrange(1, ring.p)
        f = Poly(ring, terms, normalized=False)
        if f:
            return f


def random_heavy_poly(rng: random.Random, ring: Ring, max_deg: int, q: int, max_terms: int = 4) -> Poly:
    """Like ``random_poly`` but each term carries some x_i^q when the degree
    cap allows it, so that roots at level q are usually proper."""
    if q > max_deg:
        return random_poly(rng, ring, max_deg, max_terms)
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            m = [0] * ring.nvars
            m[rng.randrange(ring.nvars)] = q
            for _ in range(rng.randint(0, max_deg - q)):
                m[rng.randrange(ring.nvars)] += 1
            terms[tuple(m)] = rng.randrange(1, ring.p)
        f = Poly(ring, terms, normalized=False)
        if f:
            return f


def random_ideal_in(rng: random.Random, ring: Ring, max_deg: int = 6, lift: int = 0) -> Ideal:
    return Ideal(ring, [random_poly(rng, ring, max_deg, lift=lift) for _ in range(rng.randint(1, 3))])


def random_ideal(rng: random.Random, max_deg: int = 6, primes=PRIMES, max_vars: int = 3, lift_levels=(0,)) -> Ideal:
    p = rng.choice(list(primes))
    ring = Ring.make(p, ["x", "y", "z"][: rng.randint(1, max_vars)])
    lift = p ** rng.choice(list(lift_levels))
    if lift == 1:
        lift = 0
    return random_ideal_in(rng, ring, max_deg, lift)


def random_principal(rng: random.Random, primes=(3, 5), max_deg: int = 4) -> Poly:
    """A nonconstant polynomial vanishing at the origin."""
    p = rng.choice(list(primes))
    ring = Ring.make(p, ["x", "y"][: rng.randint(1, 2)])
    while True:
        f = random_poly(rng, ring, max_deg, max_terms=3)
        f = f - ring.const(f.constant_coeff())
        if f and f.total_degree() >= 1:
            return f
