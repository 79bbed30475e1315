"""Frobenius powers and roots of ideals, Cartier operators, and orbit
stabilization.

On S = F_p[x_1..x_n] with q = p^e, S is free over S^q with basis the monomials
x^i, 0 <= i_j < q.  Writing h = sum_i r_i^q x^i, the root (h)^{[1/q]} is
generated by the r_i; this is pure exponent bookkeeping because coefficient
q-th roots are trivial over F_p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import FjumpError, PreconditionError
from .ideals import Ideal, ReducedGB, contains
from .poly import Monomial, Poly, Ring

__all__ = [
    "CartierOp",
    "OrbitReport",
    "bracket_power",
    "cartier_apply",
    "frobenius_root",
    "op_power",
    "root_of_product",
    "stable_image_desc",
    "stable_sum_asc",
]

Factors = Tuple[Tuple[Poly, int], ...]

DEFAULT_ITER_CAP = 64


def bracket_power(I: Ideal, e: int) -> Ideal:
    """``I^{[p^e]}``, generated by the p^e-th powers of the generators."""
    if e < 0:
        raise ValueError("e must be >= 0")
    if e == 0:
        return I
    q = I.ring.p**e
    return Ideal(I.ring, [g.frobenius(q) for g in I.gens])


def _root_terms(terms: Dict[Monomial, int], q: int) -> Dict[Monomial, Dict[Monomial, int]]:
    """Split a polynomial into basis components: {i: r_i} with h = sum r_i^q x^i."""
    buckets: Dict[Monomial, Dict[Monomial, int]] = {}
    for m, c in terms.items():
        i = tuple(a % q for a in m)
        g = tuple(a // q for a in m)
        buckets.setdefault(i, {})[g] = c
    return buckets


def _root_gens(ring: Ring, gens: Iterable[Poly], q: int) -> List[Poly]:
    out: Dict[Poly, None] = {}
    for h in gens:
        for r in _root_terms(h.terms, q).values():
            out[Poly(ring, r)] = None
    return list(out)


def frobenius_root(J: Ideal, e: int) -> Ideal:
    """``J^{[1/p^e]}``: the smallest ideal I with ``I^{[p^e]} ⊇ J``.  The result
    is returned in canonical (reduced Gröbner basis) form."""
    if e < 0:
        raise ValueError("e must be >= 0")
    if e == 0:
        return J.canonical()
    q = J.ring.p**e
    return Ideal(J.ring, _root_gens(J.ring, J.gens, q)).canonical()


def _normalize_factors(factors: Iterable[Tuple[Poly, int]]) -> Factors:
    merged: Dict[Poly, int] = {}
    for base, k in factors:
        if k < 0:
            raise ValueError("factor exponents must be >= 0")
        if k == 0 or (base.is_constant() and base.constant_coeff() == 1):
            continue
        if not base.terms:
            raise FjumpError("ZERO_PREMULTIPLIER", "premultiplier must be nonzero")
        merged[base] = merged.get(base, 0) + k
    return tuple(sorted(merged.items(), key=lambda bk: (str(bk[0]), bk[1])))


def _expand(ring: Ring, factors: Factors) -> Poly:
    out = ring.one()
    for base, k in factors:
        out = out * base**k
    return out


def root_of_product(ring: Ring, factors: Iterable[Tuple[Poly, int]], gens: Sequence[Poly], e: int) -> Ideal:
    """``(prod g_i^{a_i} · (gens))^{[1/p^e]}`` without expanding large powers.

    One level at a time, a_i = d_i + p·a_i' with d_i < p, and
    ``(prod g_i^{a_i} K)^{[1/p]} = prod g_i^{a_i'} (prod g_i^{d_i} K)^{[1/p]}``.
    """
    p = ring.p
    facs = [(b, k) for b, k in _normalize_factors(factors)]
    K = Ideal(ring, gens)
    if K.is_zero():
        return K
    for _ in range(e):
        if not facs:
            break
        low = [(b, k % p) for b, k in facs]
        pre = _expand(ring, tuple(bk for bk in low if bk[1]))
        K = Ideal(ring, _root_gens(ring, [pre * g for g in K.gb().basis], p))
        facs = [(b, k // p) for b, k in facs if k // p]
        e -= 1
    if e > 0:
        K = frobenius_root(K, e)
    if facs:
        K = Ideal(ring, [_expand(ring, tuple(facs)) * g for g in K.gb().basis])
    return K.canonical()


@dataclass(frozen=True)
class CartierOp:
    """The p^{-e}-linear map ``φ(J) = ψ_e(g·J)``.

    ``factors`` stores g as a product of powers (base, exponent) so that
    composite premultipliers like g^{(p^{ne}−1)/(p^e−1)} stay unexpanded.
    """

    ring: Ring
    level: int
    factors: Factors = ()

    def __post_init__(self):
        if self.level < 1:
            raise FjumpError("BAD_LEVEL", "Cartier operator level must be >= 1")
        for base, _ in self.factors:
            if base.ring != self.ring:
                raise FjumpError("RING_MISMATCH", "premultiplier lives in a different ring")
        object.__setattr__(self, "factors", _normalize_factors(self.factors))

    @classmethod
    def make(cls, level: int, g: Union[Poly, Sequence[Tuple[Poly, int]], None] = None, ring: Optional[Ring] = None) -> "CartierOp":
        if isinstance(g, Poly):
            if not g.terms:
                raise FjumpError("ZERO_PREMULTIPLIER", "premultiplier must be nonzero")
            return cls(g.ring, level, ((g, 1),))
        if g is None:
            if ring is None:
                raise ValueError("ring is required for the trivial operator")
            return cls(ring, level, ())
        g = tuple(g)
        if ring is None:
            if not g:
                raise ValueError("ring is required for the trivial operator")
            ring = g[0][0].ring
        return cls(ring, level, g)

    @classmethod
    def trivial(cls, ring: Ring, level: int = 1) -> "CartierOp":
        return cls(ring, level, ())

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def q(self) -> int:
        return self.ring.p**self.level

    def is_trivial(self) -> bool:
        return not self.factors

    def premultiplier(self) -> Poly:
        """The expanded premultiplier g (may be large for composite operators)."""
        return _expand(self.ring, self.factors)

    def premultiplier_degree(self) -> int:
        return sum(b.total_degree() * k for b, k in self.factors)

    def times(self, factors: Iterable[Tuple[Poly, int]]) -> "CartierOp":
        """Same level, premultiplier multiplied by ``prod b^k``."""
        return CartierOp(self.ring, self.level, self.factors + tuple(factors))

    def __call__(self, J: Ideal) -> Ideal:
        return cartier_apply(self, J)

    def describe(self) -> str:
        if not self.factors:
            g = "1"
        else:
            g = "*".join(f"({b})^{k}" if k != 1 else f"({b})" for b, k in self.factors)
        return f"psi_{self.level}({g} * -)"

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "premultiplier": [[str(b), k] for b, k in self.factors],
        }


def cartier_apply(op: CartierOp, J: Ideal) -> Ideal:
    """``φ(J) = (g·J)^{[1/p^e]}``."""
    if J.ring != op.ring:
        raise FjumpError("RING_MISMATCH", "operator and ideal live in different rings")
    return root_of_product(op.ring, op.factors, J.gens, op.level)


def op_power(op: CartierOp, n: int) -> CartierOp:
    """``φ^n``: level n·e with premultiplier g^{(p^{ne}−1)/(p^e−1)}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return op
    sigma = (op.p ** (n * op.level) - 1) // (op.p**op.level - 1)
    return CartierOp(op.ring, n * op.level, tuple((b, k * sigma) for b, k in op.factors))


@dataclass
class OrbitReport:
    """Iterates of an orbit (as reduced bases); ``stabilization_index`` is the
    first n with J_{n+1} = J_n, and ``fixed`` says whether that was reached."""

    iterates: List[ReducedGB]
    stabilization_index: int
    fixed: bool
    mode: str = "desc"

    @property
    def stable(self) -> Ideal:
        return self.iterates[-1].ideal()

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "iterates": [g.to_strings() for g in self.iterates],
            "stabilization_index": self.stabilization_index,
            "fixed": self.fixed,
        }


def stable_image_desc(op: CartierOp, seed: Ideal, iter_cap: int = DEFAULT_ITER_CAP) -> OrbitReport:
    """Iterate ``J ↦ φ(J)`` from a seed with ``φ(seed) ⊆ seed``.  The orbit
    descends and stops at the first repeat, which is then a fixed point."""
    J = seed.canonical()
    nxt = cartier_apply(op, J)
    for g in nxt.gb().basis:
        if not J.contains_poly(g):
            raise PreconditionError(
                "NOT_DESCENDING",
                f"seed is not mapped into itself: {g} lies in the image but not in the seed",
                generator=g,
            )
    iterates = [J.gb()]
    n = 0
    while True:
        if nxt.gb() == J.gb():
            return OrbitReport(iterates, n, True, "desc")
        if n >= iter_cap:
            return OrbitReport(iterates, n, False, "desc")
        J = nxt
        iterates.append(J.gb())
        n += 1
        nxt = cartier_apply(op, J)


def stable_sum_asc(op: CartierOp, seed: Ideal, iter_cap: int = DEFAULT_ITER_CAP) -> OrbitReport:
    """Partial sums ``seed + φ(seed) + ... + φ^n(seed)`` until ``φ^{n+1}(seed)``
    adds nothing, at which point ``φ(J) ⊆ J``."""
    J = seed.canonical()
    term = J
    iterates = [J.gb()]
    n = 0
    while True:
        term = cartier_apply(op, term)
        if contains(J, term):
            return OrbitReport(iterates, n, True, "asc")
        if n >= iter_cap:
            return OrbitReport(iterates, n, False, "asc")
        J = (J + term).canonical()
        iterates.append(J.gb())
        n += 1
