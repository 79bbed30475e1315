"""Slow, independent reference implementations used to cross-check the
library.  Polynomials are dense numpy coefficient arrays indexed by exponent
vectors; nothing here calls the library's root extraction or test-ideal code.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from fjump.ideals import Ideal
from fjump.poly import Poly, Ring


# ---------------------------------------------------------------------------
# dense conversion


def to_dense(f: Poly, shape: Sequence[int] = None) -> np.ndarray:
    n = f.ring.nvars
    if shape is None:
        shape = [1] * n
        for m in f.terms:
            shape = [max(s, a + 1) for s, a in zip(shape, m)]
    arr = np.zeros(tuple(shape), dtype=np.int64)
    for m, c in f.terms.items():
        arr[m] = c
    return arr


def from_dense(arr: np.ndarray, ring: Ring) -> Poly:
    idx = np.argwhere(arr % ring.p)
    return Poly(ring, {tuple(int(a) for a in i): int(arr[tuple(i)] % ring.p) for i in idx})


# ---------------------------------------------------------------------------
# arithmetic


def dense_mul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product mod p, looping over the nonzero entries of the sparser factor."""
    if np.count_nonzero(a) < np.count_nonzero(b):
        a, b = b, a
    shape = tuple(x + y - 1 for x, y in zip(a.shape, b.shape))
    out = np.zeros(shape, dtype=np.int64)
    for idx in np.argwhere(b):
        c = int(b[tuple(idx)])
        sl = tuple(slice(int(i), int(i) + s) for i, s in zip(idx, a.shape))
        out[sl] = (out[sl] + c * a) % p
    return out


def dense_spread(a: np.ndarray, q: int) -> np.ndarray:
    """Substitute x_i -> x_i^q."""
    shape = tuple((s - 1) * q + 1 for s in a.shape)
    out = np.zeros(shape, dtype=np.int64)
    out[tuple(slice(None, None, q) for _ in a.shape)] = a
    return out


def dense_power(f: Poly, k: int) -> np.ndarray:
    """f^k mod p from base-p digits: f^k = prod_j (f^{d_j})(x^{p^j})."""
    p = f.ring.p
    base = to_dense(f)
    out = np.ones((1,) * f.ring.nvars, dtype=np.int64)
    q = 1
    while k:
        k, d = divmod(k, p)
        if d:
            piece = np.ones_like(out[(slice(0, 1),) * out.ndim])
            for _ in range(d):
                piece = dense_mul(piece, base, p)
            out = dense_mul(out, dense_spread(piece, q), p)
        q *= p
    return out


# ---------------------------------------------------------------------------
# roots via the trace map


def dense_trace(arr: np.ndarray, q: int) -> np.ndarray:
    """ψ_e on a dense polynomial: keep the coefficients of x^{(q−1)+qγ} and
    send them to x^γ."""
    return arr[tuple(slice(q - 1, None, q) for _ in arr.shape)]


def trace_components(arr: np.ndarray, q: int) -> np.ndarray:
    """All ψ_e(x^{q−1−i}·h) at once, as an array of shape (q,)*n + blocks.

    Multiplying by x^{q−1−i} and keeping exponents ≡ q−1 (mod q) selects the
    exponents ≡ i, so component i is a strided view of h.  The reshape below
    computes every component in one step."""
    n = arr.ndim
    blocks = [-(-s // q) for s in arr.shape]
    padded = np.zeros(tuple(b * q for b in blocks), dtype=np.int64)
    padded[tuple(slice(0, s) for s in arr.shape)] = arr
    shaped = padded.reshape(tuple(x for b in blocks for x in (b, q)))
    order = [2 * k + 1 for k in range(n)] + [2 * k for k in range(n)]
    return shaped.transpose(order)


def oracle_root_dense(arr: np.ndarray, ring: Ring, q: int) -> List[Poly]:
    comps = trace_components(arr, q)
    n = ring.nvars
    live = np.argwhere(comps.reshape((q,) * n + (-1,)).any(axis=-1))
    return [from_dense(comps[tuple(i)], ring) for i in live]


def oracle_root_poly(h: Poly, q: int) -> List[Poly]:
    """Generators ψ_e(x^{q−1−i} h), 0 <= i_j < q, of (h)^{[1/q]}."""
    return oracle_root_dense(to_dense(h), h.ring, q)


def oracle_frobenius_root(J: Ideal, e: int) -> Ideal:
    q = J.ring.p**e
    gens = []
    for h in J.gens:
        gens.extend(oracle_root_poly(h, q))
    return Ideal(J.ring, gens)


def bracket_contains(R: Ideal, J: Ideal, e: int) -> bool:
    """R^{[q]} ⊇ J, with R^{[q]} built by dense spreading."""
    q = R.ring.p**e
    ring = R.ring
    Rq = Ideal(ring, [from_dense(dense_spread(to_dense(g), q), ring) for g in R.gens])
    return all(Rq.contains_poly(h) for h in J.gens)


# ---------------------------------------------------------------------------
# thresholds


def chain_tau(f: Poly, t: Fraction, levels: Sequence[int]) -> List[Ideal]:
    """Members (f^{⌈t q⌉})^{[1/q]} of the increasing chain, q = p^level."""
    p = f.ring.p
    out = []
    for e in levels:
        q = p**e
        k = -(-t.numerator * q // t.denominator)
        arr = dense_power(f, k)
        out.append(Ideal(f.ring, oracle_root_dense(arr, f.ring, q)).canonical())
    return out


def chain_tau_stable(f: Poly, t: Fraction, max_n: int = 6) -> Ideal:
    """Chain value at levels b + n·c until two consecutive members agree
    (desk-scale use only)."""
    p = f.ring.p
    d = t.denominator
    b = 0
    while d % p == 0:
        d //= p
        b += 1
    c = 1
    while (p**c - 1) % d:
        c += 1
    prev = None
    for n in range(max_n):
        (cur,) = chain_tau(f, t, [b + n * c])
        if prev is not None and cur == prev:
            return cur
        prev = cur
    raise RuntimeError("chain oracle did not settle")


def nu_bruteforce(f: Poly, e: int) -> int:
    """Largest r with some monomial of f^r having every exponent < p^e."""
    q = f.ring.p**e
    best = 0
    g = f.ring.one()
    for r in range(q + 1):
        if r:
            g = _truncate(g * f, q)
        if g.terms:
            best = r
        else:
            break
    return best


def _truncate(g: Poly, q: int) -> Poly:
    return Poly(g.ring, {m: c for m, c in g.terms.items() if all(a < q for a in m)})


def monomial_jumps(exponents: Sequence[int], hi: int = 1) -> List[Fraction]:
    """Jumps of t ↦ (x^{⌊t a⌋}) for a principal monomial x^a: t = k / a_i."""
    out = set()
    for a in exponents:
        if a:
            for k in range(1, a * hi + 1):
                out.add(Fraction(k, a))
    return sorted(out)


def monomial_tau(exponents: Sequence[int], t: Fraction) -> List[int]:
    return [(a * t.numerator) // t.denominator for a in exponents]
