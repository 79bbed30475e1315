"""Ideals of F_p[x_1..x_n] and a Buchberger Gröbner-basis engine.

The reduced Gröbner basis (for the ring's monomial order) is the canonical
form of an ideal; equality and membership are decided through it.
"""

from __future__ import annotations

import heapq
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import FjumpError, RingMismatchError
from .poly import Monomial, MonomialOrder, Poly, Ring

__all__ = [
    "Ideal",
    "ReducedGB",
    "colon",
    "colon_elem",
    "contains",
    "divide_exact",
    "groebner",
    "ideal_eq",
    "intersect",
    "normal_form",
]

Terms = Dict[Monomial, int]


# ---------------------------------------------------------------------------
# monomial helpers


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class _Elem:
    """A monic polynomial prepared for reduction: leading monomial plus tail."""

    __slots__ = ("lm", "tail", "terms")

    def __init__(self, lm: Monomial, tail: List[Tuple[Monomial, int]], terms: Terms):
        self.lm = lm
        self.tail = tail
        self.terms = terms


def _make_elem(terms: Terms, keyf, p: int) -> _Elem:
    lm = max(terms, key=keyf)
    c = terms[lm]
    if c != 1:
        inv = pow(c, -1, p)
        terms = {m: a * inv % p for m, a in terms.items()}
    tail = [(m, a) for m, a in terms.items() if m != lm]
    return _Elem(lm, tail, terms)


def _reduce(terms: Terms, basis: Sequence[_Elem], p: int, keyf) -> Terms:
    """Full reduction of ``terms`` by the monic elements of ``basis``."""
    if not basis or not terms:
        return dict(terms)
    f = dict(terms)

    def nk(m):
        return tuple(-x for x in keyf(m))

    heap = [(nk(m), m) for m in f]
    heapq.heapify(heap)
    rem: Terms = {}
    lms = [(b.lm, b) for b in basis]
    while heap:
        _, m = heapq.heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        for lm, b in lms:
            if _divides(lm, m):
                break
        else:
            rem[m] = c
            continue
        shift = tuple(x - y for x, y in zip(m, lm))
        for tm, tc in b.tail:
            mm = tuple(x + y for x, y in zip(tm, shift))
            old = f.get(mm)
            if old is None:
                f[mm] = (-c * tc) % p
                heapq.heappush(heap, (nk(mm), mm))
            else:
                v = (old - c * tc) % p
                if v:
                    f[mm] = v
                else:
                    del f[mm]
    return rem


def _spoly(a: _Elem, b: _Elem, p: int) -> Terms:
    L = _lcm(a.lm, b.lm)
    sa = tuple(x - y for x, y in zip(L, a.lm))
    sb = tuple(x - y for x, y in zip(L, b.lm))
    out: Terms = {}
    for m, c in a.tail:
        mm = tuple(x + y for x, y in zip(m, sa))
        out[mm] = (out.get(mm, 0) + c) % p
    for m, c in b.tail:
        mm = tuple(x + y for x, y in zip(m, sb))
        out[mm] = (out.get(mm, 0) - c) % p
    return {m: c for m, c in out.items() if c}


def _buchberger(gens: List[Terms], p: int, keyf) -> List[Terms]:
    """Reduced Gröbner basis (list of monic term dicts, unsorted)."""
    elems: List[_Elem] = []
    active: List[int] = []
    pairs: List[Tuple[int, int]] = []
    lcms: Dict[Tuple[int, int], Monomial] = {}

    def update(h: int):
        nonlocal active, pairs
        lmh = elems[h].lm
        cand = list(active)
        kept: List[int] = []
        for idx, g in enumerate(cand):
            lmg = elems[g].lm
            if _coprime(lmh, lmg):
                kept.append(g)
                continue
            L = _lcm(lmh, lmg)
            redundant = False
            for g2 in cand[idx + 1 :]:
                if _divides(_lcm(lmh, elems[g2].lm), L):
                    redundant = True
                    break
            if not redundant:
                for g2 in kept:
                    if _divides(_lcm(lmh, elems[g2].lm), L):
                        redundant = True
                        break
            if not redundant:
                kept.append(g)
        new_pairs = [g for g in kept if not _coprime(lmh, elems[g].lm)]
        survivors = []
        for pr in pairs:
            L = lcms[pr]
            a, b = pr
            if (
                _divides(lmh, L)
                and _lcm(elems[a].lm, lmh) != L
                and _lcm(elems[b].lm, lmh) != L
            ):
                continue
            survivors.append(pr)
        for g in new_pairs:
            pr = (g, h)
            lcms[pr] = _lcm(elems[g].lm, lmh)
            survivors.append(pr)
        pairs = survivors
        active = [g for g in active if not _divides(lmh, elems[g].lm)] + [h]

    def add(terms: Terms):
        elems.append(_make_elem(terms, keyf, p))
        update(len(elems) - 1)

    # feed generators smallest first, each reduced by what is already there
    for t in sorted(gens, key=lambda t: keyf(max(t, key=keyf))):
        r = _reduce(t, [elems[i] for i in active], p, keyf)
        if r:
            if len(r) == 1 and not any(next(iter(r))):
                return [{next(iter(r)): 1}]
            add(r)

    while pairs:
        best = min(range(len(pairs)), key=lambda k: (keyf(lcms[pairs[k]]), pairs[k]))
        a, b = pairs.pop(best)
        s = _spoly(elems[a], elems[b], p)
        if not s:
            continue
        r = _reduce(s, [elems[i] for i in active], p, keyf)
        if r:
            if len(r) == 1 and not any(next(iter(r))):
                return [{next(iter(r)): 1}]
            add(r)

    basis = [elems[i] for i in active]
    out = []
    for i, b in enumerate(basis):
        others = basis[:i] + basis[i + 1 :]
        tail = _reduce(dict(b.tail), others, p, keyf)
        tail[b.lm] = 1
        out.append(tail)
    return out


def _monomial_basis(gens: List[Terms]) -> Optional[List[Terms]]:
    """Reduced GB of a monomial ideal (minimal generators), or None."""
    monos = []
    for t in gens:
        if len(t) != 1:
            return None
        monos.append(next(iter(t)))
    monos = sorted(set(monos), key=sum)
    minimal: List[Monomial] = []
    for m in monos:
        if not any(_divides(n, m) for n in minimal):
            minimal.append(m)
    return [{m: 1} for m in minimal]


# ---------------------------------------------------------------------------
# public types


class ReducedGB:
    """Reduced Gröbner basis: monic, interreduced, sorted by descending
    leading monomial.  Two ideals are equal iff their reduced bases match."""

    __slots__ = ("ring", "basis", "_elems")

    def __init__(self, ring: Ring, basis: Sequence[Poly]):
        self.ring = ring
        self.basis = tuple(basis)
        self._elems = None

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def _prepared(self) -> List[_Elem]:
        if self._elems is None:
            keyf = self.ring.order.key_function()
            self._elems = [_make_elem(dict(g.terms), keyf, self.ring.p) for g in self.basis]
        return self._elems

    def normal_form(self, f: Poly) -> Poly:
        if f.ring != self.ring:
            raise RingMismatchError(f.ring, self.ring)
        return Poly(self.ring, _reduce(f.terms, self._prepared(), self.ring.p, self.ring.order.key_function()))

    def reduces_to_zero(self, f: Poly) -> bool:
        return not self.normal_form(f).terms

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def is_zero(self) -> bool:
        return not self.basis

    def ideal(self) -> "Ideal":
        return Ideal(self.ring, self.basis, _gb=self)

    def to_strings(self) -> List[str]:
        return [str(g) for g in self.basis]

    def max_degree(self):
        return max((g.total_degree() for g in self.basis), default=None)

    def __eq__(self, other):
        if not isinstance(other, ReducedGB):
            return NotImplemented
        return self.ring == other.ring and self.basis == other.basis

    def __hash__(self):
        return hash((self.ring, self.basis))

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self):
        return "ReducedGB([" + ", ".join(self.to_strings()) + "])"


def groebner(I: "Ideal", order: Optional[MonomialOrder] = None) -> ReducedGB:
    """Reduced Gröbner basis of ``I``.  With ``order`` given, the generators are
    moved to the same ring with that order first."""
    if order is not None and order != I.ring.order:
        ring = I.ring.with_order(order)
        return Ideal(ring, [Poly(ring, g.terms) for g in I.gens]).gb()
    return I.gb()


def _compute_gb(ring: Ring, gens: Sequence[Poly]) -> ReducedGB:
    p = ring.p
    keyf = ring.order.key_function()
    raw = [dict(g.terms) for g in gens if g.terms]
    if not raw:
        return ReducedGB(ring, [])
    basis = _monomial_basis(raw)
    if basis is None:
        basis = _buchberger(raw, p, keyf)
    polys = [Poly(ring, t) for t in basis]
    polys.sort(key=lambda g: keyf(g.lm()), reverse=True)
    return ReducedGB(ring, polys)


class Ideal:
    """An ideal given by generators (zero generators are dropped).  The reduced
    Gröbner basis is computed on first use and cached."""

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: Ring, gens: Iterable[Poly] = (), _gb: Optional[ReducedGB] = None):
        gl = []
        for g in gens:
            if isinstance(g, int):
                g = ring.const(g)
            if g.ring != ring:
                raise RingMismatchError(g.ring, ring)
            if g.terms:
                gl.append(g)
        self.ring = ring
        self.gens: Tuple[Poly, ...] = tuple(gl)
        self._gb = _gb

    # -- constructors -------------------------------------------------------

    @classmethod
    def parse(cls, ring: Ring, texts: Union[str, Sequence[str]]) -> "Ideal":
        if isinstance(texts, str):
            texts = [texts]
        return cls(ring, [ring.parse(s) for s in texts])

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def zero(cls, ring: Ring) -> "Ideal":
        return cls(ring, [])

    @classmethod
    def maximal(cls, ring: Ring) -> "Ideal":
        """The homogeneous maximal ideal (x_1, ..., x_n)."""
        return cls(ring, ring.gens())

    # -- canonical form -----------------------------------------------------

    def gb(self) -> ReducedGB:
        if self._gb is None:
            self._gb = _compute_gb(self.ring, self.gens)
        return self._gb

    def canonical(self) -> "Ideal":
        """Same ideal, generated by its reduced Gröbner basis."""
        gb = self.gb()
        return Ideal(self.ring, gb.basis, _gb=gb)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        if any(g.is_constant() for g in self.gens):
            return True
        return self.gb().is_unit()

    def is_principal(self) -> bool:
        return len(self.gens) <= 1 or len(self.gb()) <= 1

    def contains_poly(self, f: Poly) -> bool:
        if not f.terms:
            return True
        if not self.gens:
            return False
        if any(g.is_constant() for g in self.gens):
            return True
        return self.gb().reduces_to_zero(f)

    def __contains__(self, f: Poly) -> bool:
        return self.contains_poly(f)

    def to_strings(self) -> List[str]:
        return self.gb().to_strings()

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Ideal"):
        if other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring)

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other) -> "Ideal":
        if isinstance(other, Poly):
            return Ideal(self.ring, [g * other for g in self.gens])
        self._check(other)
        prods = [a * b for a in self.gens for b in other.gens]
        return Ideal(self.ring, minimize_generators(prods))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Ideal":
        return power(self, k)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_eq(self, other)

    def __hash__(self):
        return hash(self.gb())

    def __le__(self, other: "Ideal") -> bool:
        return contains(other, self)

    def __ge__(self, other: "Ideal") -> bool:
        return contains(self, other)

    def __repr__(self):
        return "Ideal(" + ", ".join(str(g) for g in self.gens) + ")"


def minimize_generators(gens: Sequence[Poly]) -> List[Poly]:
    """Drop generators whose remainder on division by the remaining ones is 0."""
    uniq: List[Poly] = []
    seen = set()
    for g in gens:
        if not g.terms:
            continue
        g = g.monic()
        if g not in seen:
            seen.add(g)
            uniq.append(g)
    if len(uniq) <= 1:
        return uniq
    ring = uniq[0].ring
    keyf = ring.order.key_function()
    keep = list(uniq)
    # try to drop the largest first
    for g in sorted(uniq, key=lambda g: (g.total_degree(), len(g)), reverse=True):
        others = [h for h in keep if h is not g]
        if not others:
            break
        elems = [_make_elem(dict(h.terms), keyf, ring.p) for h in others]
        if not _reduce(g.terms, elems, ring.p, keyf):
            keep = others
    return keep


def power(I: Ideal, k: int) -> Ideal:
    if k < 0:
        raise ValueError("ideal power needs k >= 0")
    if k == 0:
        return Ideal.unit(I.ring)
    if len(I.gens) == 1:
        return Ideal(I.ring, [I.gens[0] ** k])
    result = I
    base = I
    k -= 1
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def normal_form(f: Poly, G: ReducedGB) -> Poly:
    return G.normal_form(f)


def contains(I: Ideal, J: Ideal) -> bool:
    """True iff ``J ⊆ I``."""
    I._check(J)
    return all(I.contains_poly(g) for g in J.gens)


def ideal_eq(I: Ideal, J: Ideal) -> bool:
    I._check(J)
    return I.gb() == J.gb()


# ---------------------------------------------------------------------------
# intersections and colons


def _aux_name(names: Sequence[str]) -> str:
    k = 0
    while f"tElim{k}" in names:
        k += 1
    return f"tElim{k}"


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` via elimination of an auxiliary variable t from t·I + (1−t)·J."""
    I._check(J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)
    if I.is_unit():
        return J.canonical()
    if J.is_unit():
        return I.canonical()
    big = Ring(ring.p, (_aux_name(ring.names),) + ring.names, MonomialOrder("elim", 1))
    p = ring.p
    gens = []
    for g in I.gens:
        gens.append(Poly(big, {(1,) + m: c for m, c in g.terms.items()}))
    for g in J.gens:
        t = {(0,) + m: c for m, c in g.terms.items()}
        t.update({(1,) + m: (p - c) % p for m, c in g.terms.items()})
        gens.append(Poly(big, t))
    gb = Ideal(big, gens).gb()
    out = [Poly(ring, {m[1:]: c for m, c in g.terms.items()}) for g in gb.basis if all(m[0] == 0 for m in g.terms)]
    return Ideal(ring, out).canonical()


def divide_exact(h: Poly, f: Poly) -> Poly:
    """Quotient ``h / f``; raises if ``f`` does not divide ``h``."""
    if not f.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = h.ring
    p = ring.p
    keyf = ring.order.key_function()
    lm, lc = f.lm(), f.lc()
    inv = pow(lc, -1, p)
    rest = dict(h.terms)
    quot: Terms = {}
    while rest:
        m = max(rest, key=keyf)
        if not _divides(lm, m):
            raise FjumpError("NOT_DIVISIBLE", f"{f} does not divide {h}")
        c = rest[m] * inv % p
        shift = tuple(x - y for x, y in zip(m, lm))
        quot[shift] = c
        for fm, fc in f.terms.items():
            mm = tuple(x + y for x, y in zip(fm, shift))
            v = (rest.get(mm, 0) - c * fc) % p
            if v:
                rest[mm] = v
            else:
                rest.pop(mm, None)
    return Poly(ring, quot)


def colon_elem(I: Ideal, f: Poly) -> Ideal:
    """``(I : f) = (I ∩ (f)) / f``."""
    if not f.terms:
        raise FjumpError("ZERO_DIVISOR", "colon by the zero polynomial")
    ring = I.ring
    if I.contains_poly(f):
        return Ideal.unit(ring)
    if I.is_zero():
        return Ideal.zero(ring)
    meet = intersect(I, Ideal(ring, [f]))
    return Ideal(ring, [divide_exact(g, f) for g in meet.gens]).canonical()


def colon(I: Ideal, J: Ideal) -> Ideal:
    """``(I : J)``, the intersection of ``(I : g)`` over generators g of J."""
    I._check(J)
    if J.is_zero():
        return Ideal.unit(I.ring)
    result: Optional[Ideal] = None
    for g in J.gb().basis:
        c = colon_elem(I, g)
        result = c if result is None else intersect(result, c)
    return result
