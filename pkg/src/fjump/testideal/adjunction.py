"""F-purity and centers of F-purity for Cartier operators, Fedder-type lifts,
and test ideals restricted along a compatible prime Q."""

from __future__ import annotations

from typing import List, Optional

from ..errors import FjumpError, PreconditionError
from ..frobenius import DEFAULT_ITER_CAP, CartierOp, bracket_power, cartier_apply, stable_sum_asc
from ..ideals import Ideal, colon, colon_elem, contains, intersect
from ..poly import Poly
from .core import (
    TestIdealResult,
    _ceil_div,
    _level_op,
    _principal_generator,
)
from .trational import RationalLike, TRational

__all__ = [
    "center_check",
    "default_seed",
    "f_pure_at",
    "f_pure_check",
    "fedder_lift",
    "restricted_test_ideal",
]


def f_pure_check(op: CartierOp) -> bool:
    """φ is surjective, i.e. φ((1)) = (1)."""
    return cartier_apply(op, Ideal.unit(op.ring)).is_unit()


def f_pure_at(op: CartierOp, m: Ideal) -> bool:
    """φ is surjective at the maximal ideal m: φ((1)) ⊄ m."""
    return not contains(m, cartier_apply(op, Ideal.unit(op.ring)))


def center_check(op: CartierOp, Q: Ideal) -> bool:
    """Q is φ-compatible: φ(Q) ⊆ Q."""
    if Q.is_zero():
        return True
    if Q.is_unit():
        raise PreconditionError("Q_NOT_PROPER", "Q must be a proper ideal")
    return contains(Q, cartier_apply(op, Q))


def fedder_lift(Q: Ideal, e: int) -> List[Poly]:
    """Generators of (Q^{[p^e]} : Q).  Every generator g outside Q^{[p^e]}
    gives an operator ψ_e(g·−) compatible with Q; this is checked before
    returning."""
    if e < 1:
        raise ValueError("e must be >= 1")
    ring = Q.ring
    if Q.is_zero():
        return [ring.one()]
    if Q.is_unit():
        raise PreconditionError("Q_NOT_PROPER", "Q must be a proper ideal")
    Qq = bracket_power(Q, e)
    C = colon(Qq, Q)
    out = list(C.gb().basis)
    for g in out:
        if Qq.contains_poly(g):
            continue
        if not center_check(CartierOp.make(e, g), Q):
            raise FjumpError("FEDDER_CHECK_FAILED", f"operator with premultiplier {g} does not preserve Q")
    return out


def default_seed(op: CartierOp, Q: Ideal, a: Ideal, t: RationalLike = 1) -> Poly:
    """A seed outside Q: r^{⌈t⌉}·h, where r is a generator of a outside Q and
    h is an element of ((g) : Q^{[p^e]}) outside Q, g the premultiplier.

    For g = y^{q−1}h and Q = (y) the second factor is h.  The power ⌈t⌉
    matches the first member of the chain defining the test ideal.
    """
    ring = op.ring
    t = TRational.coerce(t, ring.p)
    gens = [f for f in a.gb().basis if not Q.contains_poly(f)]
    if not gens:
        raise PreconditionError("A_IN_Q", "a is contained in Q")
    f = min(gens, key=lambda g: (g.total_degree(), len(g), str(g)))
    k = _ceil_div(t.value.numerator, t.value.denominator)
    base = f**k
    if Q.is_zero() or op.is_trivial():
        return base
    g = op.premultiplier()
    K = colon(Ideal(ring, [g]), bracket_power(Q, op.level))
    hs = [h for h in K.gb().basis if not Q.contains_poly(h)]
    if not hs:
        return base * g
    h = min(hs, key=lambda g: (g.total_degree(), len(g), str(g)))
    return base * h


def restricted_test_ideal(
    op: CartierOp,
    Q: Ideal,
    a: Ideal,
    t: RationalLike,
    seed: Optional[Poly] = None,
    iter_cap: int = DEFAULT_ITER_CAP,
    refine: bool = True,
) -> TestIdealResult:
    """Test ideal of (S, φ, a^t) not contained in the φ-compatible prime Q.

    For a = (f) and t = u'/(p^c − 1), J is the stable sum of
    φ'(−) = φ_C(f^{u''} −) started at the seed: the smallest φ'-compatible
    ideal containing the seed.  Every such ideal not inside Q contains the
    restricted test ideal, so with ``refine`` the seed is replaced by
    generators of J outside Q while that shrinks J.
    """
    ring = op.ring
    if Q.ring != ring or a.ring != ring:
        raise FjumpError("RING_MISMATCH", "operator, Q and a must share a ring")
    t = TRational.coerce(t, ring.p)
    if t.b:
        raise PreconditionError("T_HAS_P_DENOMINATOR", f"t = {t} has p in its denominator; restricted ideals need b = 0")
    if not center_check(op, Q):
        raise PreconditionError("NOT_A_CENTER", "Q is not compatible with the operator")
    image = cartier_apply(op, Ideal.unit(ring))
    if contains(Q, image):
        bad = next((g for g in image.gb().basis), None)
        raise PreconditionError("NOT_PURE_AT_Q", "the operator is not surjective at the generic point of Q", generator=bad)
    if contains(Q, a):
        raise PreconditionError("A_IN_Q", "a is contained in Q")
    if seed is None:
        seed = default_seed(op, Q, a, t)
        seed_source = "default"
    else:
        seed_source = "user"
        if seed.ring != ring:
            raise FjumpError("RING_MISMATCH", "seed lives in a different ring")
        if Q.contains_poly(seed):
            raise PreconditionError("SEED_IN_Q", "seed lies in Q", generator=seed)
        if not a.contains_poly(seed):
            raise PreconditionError("SEED_NOT_IN_A", "seed does not lie in a", generator=seed)

    f = _principal_generator(a)
    C, base = _level_op(ring, t, op)
    if f is None:
        return _restricted_chain(base, C, Q, a, t, seed, iter_cap)

    u2 = t.scaled_numerator(C)
    opp = base.times([(f, u2)])
    report = stable_sum_asc(opp, Ideal(ring, [seed]), iter_cap)
    J = report.stable
    iterations = report.stabilization_index
    fixed = report.fixed
    used_seed = seed
    if refine and fixed:
        improved = True
        while improved:
            improved = False
            for h in J.gb().basis:
                if Q.contains_poly(h) or h == used_seed:
                    continue
                r = stable_sum_asc(opp, Ideal(ring, [h]), iter_cap)
                if r.fixed and not contains(r.stable, J):
                    J, used_seed = r.stable, h
                    iterations += r.stabilization_index
                    improved = True
                    break
    ok = fixed and not contains(Q, J) and contains(J, cartier_apply(opp, J))
    cert = {
        "kind": "compatible-sum",
        "check": "phi(J) contained in J, seed in J, J not in Q",
        "operator": opp.to_json(),
        "seed": [str(used_seed)],
        "seed_source": seed_source,
        "stable_sum": J.to_strings(),
        "root_levels": 0,
        "verified": ok,
    }
    return TestIdealResult(
        t,
        J.gb(),
        ok,
        cert,
        iterations,
        operator=opp,
        stable=J.gb(),
        seed=Ideal(ring, [used_seed]),
        root_levels=0,
    )


def _restricted_chain(base: CartierOp, C: int, Q: Ideal, a: Ideal, t: TRational, seed: Poly, iter_cap: int) -> TestIdealResult:
    """Non-principal a: partial sums Σ_n φ_{nC}(seed · a^{u''σ_n}) with a
    two-repeat stop; never certified."""
    from ..frobenius import root_of_product

    ring = base.ring
    p = ring.p
    u2 = t.scaled_numerator(C)
    J = Ideal(ring, [seed]).canonical()
    prev = J.gb()
    repeats = 0
    n = 0
    while n < iter_cap:
        n += 1
        sigma = (p ** (n * C) - 1) // (p**C - 1)
        facs = tuple((g, k * sigma) for g, k in base.factors)
        term = root_of_product(ring, facs, [seed * g for g in (a**(u2 * sigma)).gens], n * C)
        J = (J + term).canonical()
        if J.gb() == prev:
            repeats += 1
            if repeats >= 2:
                break
        else:
            repeats = 0
        prev = J.gb()
    cert = {
        "kind": "chain-heuristic",
        "check": "two consecutive equal partial sums",
        "seed": [str(seed)],
        "stable_sum": J.to_strings(),
        "verified": False,
    }
    return TestIdealResult(t, J.gb(), False, cert, n, seed=Ideal(ring, [seed]))
