"""F-thresholds: the ν function, F-pure thresholds at the origin, and the
enumeration of F-jumping numbers of a principal ideal."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..errors import FjumpError, PreconditionError
from ..frobenius import DEFAULT_ITER_CAP, root_of_product
from ..ideals import Ideal, ReducedGB
from ..poly import Poly
from .core import JumpCertificate, is_jumping_number, test_ideal
from .trational import TRational

__all__ = [
    "FptResult",
    "JumpsResult",
    "candidates",
    "fpt",
    "jumping_numbers",
    "nu",
    "tau_padic",
]

Interval = Tuple[Fraction, Fraction]


def tau_padic(f: Poly, a: int, e: int) -> ReducedGB:
    """τ(f^{a/p^e}) = (f^a)^{[1/p^e]}, exact for a principal ideal."""
    return root_of_product(f.ring, [(f, a)], [f.ring.one()], e).gb()


def _outside_origin(G: ReducedGB) -> bool:
    """True iff the ideal is not contained in (x_1, ..., x_n)."""
    return any(g.constant_coeff() for g in G.basis)


def _check_threshold_input(f: Poly):
    if not isinstance(f, Poly) or not f.terms:
        raise FjumpError("ZERO_POLY", "thresholds need a nonzero polynomial")
    if f.constant_coeff():
        raise PreconditionError(
            "UNIT_AT_ORIGIN",
            "thresholds are taken at the origin; translate coordinates so that f(0) = 0",
            generator=f,
        )


def _first_true(lo: int, hi: int, pred: Callable[[int], bool]) -> Optional[int]:
    """Least k in [lo, hi] with pred(k), pred monotone False→True; None if none."""
    if lo > hi or not pred(hi):
        return None
    while lo < hi:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def nu(f: Poly, e: int) -> int:
    """ν_f(p^e) = max{r : f^r ∉ (x_1^{p^e}, ..., x_n^{p^e})}.

    f^r lies in the bracket power of the maximal ideal exactly when
    (f^r)^{[1/p^e]} lies in the maximal ideal, which is cheap to test.
    """
    _check_threshold_input(f)
    if e < 0:
        raise ValueError("e must be >= 0")
    if e == 0:
        return 0
    q = f.ring.p**e
    # inside(r) is monotone in r and inside(q) holds because f(0) = 0
    first_inside = _first_true(0, q, lambda r: not _outside_origin(tau_padic(f, r, e)))
    return first_inside - 1


def candidates(lo: Fraction, hi: Fraction, p: int, b_max: int, c_max: int) -> List[Fraction]:
    """Sorted rationals u/(p^b (p^c − 1)) in (lo, hi] with b <= b_max, c <= c_max."""
    out = set()
    for b in range(b_max + 1):
        for c in range(1, c_max + 1):
            D = p**b * (p**c - 1)
            u0 = (lo.numerator * D) // lo.denominator + 1
            u1 = (hi.numerator * D) // hi.denominator
            for u in range(max(u0, 0), u1 + 1):
                out.add(Fraction(u, D))
    return sorted(out)


# ---------------------------------------------------------------------------
# F-pure threshold


@dataclass
class FptResult:
    """``value`` is the certified threshold, or None with ``interval`` the
    bracket (lo, hi] known to contain it."""

    value: Optional[TRational]
    interval: Interval
    certified: bool
    nus: Dict[int, int]
    certificate: Optional[JumpCertificate] = None
    tested: int = 0

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "fpt": None if self.value is None else self.value.to_json(),
            "certified": self.certified,
        }
        if self.value is None:
            out["interval"] = [str(self.interval[0]), str(self.interval[1])]
        return out

    def to_full_json(self) -> Dict[str, Any]:
        out = self.to_json()
        out["interval"] = [str(self.interval[0]), str(self.interval[1])]
        out["nu"] = {str(e): n for e, n in sorted(self.nus.items())}
        out["tested"] = self.tested
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def fpt(
    f: Poly,
    e_max: int = 3,
    b_max: int = 3,
    c_max: int = 3,
    iter_cap: int = DEFAULT_ITER_CAP,
) -> FptResult:
    """F-pure threshold of f at the origin.

    ν brackets the threshold in (ν/q, (ν+1)/q]; the first candidate α in the
    bracket with τ(f^α) inside the maximal ideal is the answer provided
    τ(f^{α−ε}) is not, which is then checked.
    """
    _check_threshold_input(f)
    if f.is_constant():
        raise PreconditionError("UNIT", "the F-pure threshold of a unit is undefined", generator=f)
    p = f.ring.p
    lo, hi = Fraction(0), Fraction(1)
    nus: Dict[int, int] = {}
    for e in range(1, e_max + 1):
        n = nu(f, e)
        nus[e] = n
        q = p**e
        lo = max(lo, Fraction(n, q))
        hi = min(hi, Fraction(n + 1, q))
    cands = candidates(lo, hi, p, max(b_max, e_max), c_max)
    tested = 0
    cache: Dict[int, bool] = {}

    def inside(k: int) -> bool:
        nonlocal tested
        if k not in cache:
            tested += 1
            res = test_ideal(Ideal(f.ring, [f]), TRational(cands[k], p), iter_cap=iter_cap)
            if not res.certified:
                raise FjumpError("UNCERTIFIED", f"test ideal at {cands[k]} hit the iteration cap")
            cache[k] = not _outside_origin(res.ideal)
        return cache[k]

    try:
        k = _first_true(0, len(cands) - 1, inside) if cands else None
    except FjumpError:
        k = None
    if k is None:
        return FptResult(None, (lo, hi), False, nus, tested=tested)
    alpha = TRational(cands[k], p)
    jc = is_jumping_number(f, alpha, iter_cap=iter_cap)
    if jc.certified and _outside_origin(jc.left) and not _outside_origin(jc.right):
        return FptResult(alpha, (lo, hi), True, nus, jc, tested)
    return FptResult(None, (lo, cands[k]), False, nus, jc, tested)


# ---------------------------------------------------------------------------
# jumping numbers


@dataclass
class JumpsResult:
    jumps: List[JumpCertificate]
    unresolved: List[Interval] = field(default_factory=list)
    interval: Interval = (Fraction(0), Fraction(1))

    @property
    def certified(self) -> bool:
        return not self.unresolved and all(j.certified for j in self.jumps)

    def values(self) -> List[Fraction]:
        return [j.t.value for j in self.jumps]

    def to_json(self) -> Any:
        vals = [j.t.to_json() for j in self.jumps]
        if not self.unresolved:
            return vals
        return {
            "jumps": vals,
            "unresolved": [[str(a), str(b)] for a, b in self.unresolved],
        }

    def to_full_json(self) -> Dict[str, Any]:
        return {
            "interval": [str(self.interval[0]), str(self.interval[1])],
            "jumps": [j.to_json() for j in self.jumps],
            "unresolved": [[str(a), str(b)] for a, b in self.unresolved],
            "certified": self.certified,
        }


def _jumps_unit_interval(f: Poly, e_max: int, b_max: int, c_max: int, iter_cap: int):
    """Jumps of τ(f^t) for t in (0, 1], found left to right."""
    ring = f.ring
    p = ring.p
    q = p**e_max
    fi = Ideal(ring, [f])
    cur = Fraction(0)
    L = Ideal.unit(ring).gb()
    jumps: List[JumpCertificate] = []
    unresolved: List[Interval] = []
    steps = 0
    while cur < 1 and steps < iter_cap:
        steps += 1
        a_lo = (cur.numerator * q) // cur.denominator + 1
        a = _first_true(a_lo, q, lambda k: tau_padic(f, k, e_max) != L)
        if a is None:
            break
        blo, bhi = max(cur, Fraction(a - 1, q)), Fraction(a, q)
        cands = candidates(blo, bhi, p, max(b_max, e_max), c_max)
        cache: Dict[int, ReducedGB] = {}

        def value(k: int) -> ReducedGB:
            if k not in cache:
                cache[k] = test_ideal(fi, TRational(cands[k], p), iter_cap=iter_cap).ideal
            return cache[k]

        k = _first_true(0, len(cands) - 1, lambda k: value(k) != L)
        jc = None
        if k is not None:
            jc = is_jumping_number(f, TRational(cands[k], p), iter_cap=iter_cap)
        if jc is not None and jc.certified and jc.is_jump and jc.left == L:
            jumps.append(jc)
            cur = jc.t.value
            L = jc.right
        else:
            unresolved.append((blo, bhi))
            cur = bhi
            L = tau_padic(f, a, e_max)
    if cur < 1:
        unresolved.append((cur, Fraction(1)))
    return jumps, unresolved


def _shift(jc: JumpCertificate, f: Poly, k: int) -> JumpCertificate:
    ring = f.ring
    fk = f**k
    left = Ideal(ring, [g * fk for g in jc.left.basis]).gb()
    right = Ideal(ring, [g * fk for g in jc.right.basis]).gb()
    return JumpCertificate(jc.t + k, left, right, jc.is_jump, jc.certified, "skoda")


def jumping_numbers(
    f: Poly,
    hi=1,
    lo=0,
    e_max: int = 3,
    b_max: int = 3,
    c_max: int = 3,
    iter_cap: int = DEFAULT_ITER_CAP,
) -> JumpsResult:
    """F-jumping numbers of f in (lo, hi].

    Jumps in (0, 1] are found by a p-adic scan at level ``e_max`` followed by
    certification of a candidate u/(p^b (p^c − 1)) in each drop interval.
    Larger jumps are integer translates (τ(f^t) = f·τ(f^{t−1}) for t >= 1).
    Intervals that no candidate within the caps explains are reported as
    unresolved rather than guessed.
    """
    if not isinstance(f, Poly) or not f.terms:
        raise FjumpError("ZERO_POLY", "jumping numbers need a nonzero polynomial")
    if f.is_constant():
        raise PreconditionError("UNIT", "a unit has no jumping numbers", generator=f)
    lo, hi = Fraction(lo), Fraction(hi)
    if lo < 0:
        raise FjumpError("NEGATIVE_T", "interval must lie in t >= 0")
    if hi <= lo:
        return JumpsResult([], [], (lo, hi))
    base_jumps, base_unres = _jumps_unit_interval(f, e_max, b_max, c_max, iter_cap)
    jumps: List[JumpCertificate] = []
    unresolved: List[Interval] = []
    kmax = int(hi) + 1
    for k in range(kmax + 1):
        for jc in base_jumps:
            v = jc.t.value + k
            if lo < v <= hi:
                jumps.append(jc if k == 0 else _shift(jc, f, k))
        for a, b in base_unres:
            a2, b2 = max(a + k, lo), min(b + k, hi)
            if a2 < b2:
                unresolved.append((a2, b2))
    jumps.sort(key=lambda j: j.t.value)
    dedup: List[JumpCertificate] = []
    for j in jumps:
        if not dedup or dedup[-1].t.value != j.t.value:
            dedup.append(j)
    unresolved.sort()
    return JumpsResult(dedup, unresolved, (lo, hi))
