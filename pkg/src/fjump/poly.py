"""Sparse multivariate polynomials over a prime field F_p.

A polynomial lives in a :class:`Ring`, which fixes the characteristic, the
variable names and a monomial order.  Terms are stored as a mapping from
exponent tuples (Python ints, so bracket powers like ``x^(p^20)`` are exact)
to nonzero coefficients in ``range(p)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import FjumpError, ParseError, RingMismatchError

Monomial = Tuple[int, ...]

__all__ = [
    "Monomial",
    "MonomialOrder",
    "Poly",
    "Ring",
    "is_prime",
    "parse",
    "total_degree",
]


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every n < 3.4e14."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# monomial orders


def _degrevlex_key(e: Sequence[int]) -> Tuple[int, ...]:
    return (sum(e),) + tuple(-x for x in reversed(e))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: ``degrevlex``, ``lex``, or ``elim`` (block order
    eliminating the first ``k`` variables, degrevlex inside each block).

    ``key(m)`` is a flat int tuple; larger key means larger monomial.
    """

    kind: str = "degrevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.k < 1:
            raise ValueError("block elimination order needs k >= 1")

    def key(self, m: Monomial) -> Tuple[int, ...]:
        if self.kind == "degrevlex":
            return _degrevlex_key(m)
        if self.kind == "lex":
            return tuple(m)
        return _degrevlex_key(m[: self.k]) + _degrevlex_key(m[self.k :])

    def key_function(self) -> Callable[[Monomial], Tuple[int, ...]]:
        if self.kind == "degrevlex":
            return _degrevlex_key
        if self.kind == "lex":
            return tuple
        return self.key

    def __str__(self):
        return f"elim({self.k})" if self.kind == "elim" else self.kind


DEGREVLEX = MonomialOrder("degrevlex")


@dataclass(frozen=True)
class Ring:
    """Polynomial ring F_p[vars] with a fixed monomial order."""

    p: int
    names: Tuple[str, ...]
    order: MonomialOrder = DEGREVLEX

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p < 2**31:
            raise FjumpError("BAD_PRIME", f"characteristic must be an integer in [2, 2^31), got {self.p!r}")
        if not is_prime(self.p):
            raise FjumpError("BAD_PRIME", f"{self.p} is not prime")
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise FjumpError("BAD_VARS", f"duplicate variable names in {names}")
        for n in names:
            if not _VAR_RE.fullmatch(n):
                raise FjumpError("BAD_VARS", f"invalid variable name {n!r}")

    @classmethod
    def make(cls, p: int, names: Union[str, Iterable[str]], order: Union[str, MonomialOrder] = "degrevlex") -> "Ring":
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",") if n.strip()]
        if isinstance(order, str):
            order = MonomialOrder(order)
        return cls(p, tuple(names), order)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.p, self.names, order)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.nvars: 1})

    def const(self, c: int) -> "Poly":
        c %= self.p
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name: Union[str, int]) -> "Poly":
        i = self.names.index(name) if isinstance(name, str) else name
        m = [0] * self.nvars
        m[i] = 1
        return Poly(self, {tuple(m): 1})

    def gens(self) -> Tuple["Poly", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> "Poly":
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        c = coeff % self.p
        return Poly(self, {tuple(int(e) for e in exps): c} if c else {})

    def parse(self, text: str) -> "Poly":
        return parse(text, self)

    def __call__(self, text: str) -> "Poly":
        return parse(text, self)


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuples to
    coefficients in ``1..p-1``; the zero polynomial has no terms."""

    __slots__ = ("ring", "terms", "_sorted", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, int], *, normalized: bool = True):
        if not normalized:
            p = ring.p
            clean: Dict[Monomial, int] = {}
            for m, c in terms.items():
                c %= p
                if c:
                    clean[tuple(m)] = c
            terms = clean
        self.ring = ring
        self.terms = terms
        self._sorted = None
        self._hash = None

    # -- basic protocol -----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> Tuple[Tuple[Monomial, int], ...]:
        """Terms in descending monomial order (the canonical iteration order)."""
        if self._sorted is None:
            key = self.ring.order.key_function()
            self._sorted = tuple(sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True))
        return self._sorted

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self.sorted_terms())

    def lm(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.sorted_terms()[0][0]

    def lc(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.sorted_terms()[0][1]

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        c = self.lc()
        if c == 1:
            return self
        inv = pow(c, -1, self.ring.p)
        p = self.ring.p
        return Poly(self.ring, {m: a * inv % p for m, a in self.terms.items()})

    def total_degree(self):
        """Largest exponent sum; ``None`` stands for the degree of 0."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def constant_coeff(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatchError(self.ring, other.ring)
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        p = self.ring.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = (out.get(m, 0) + c) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Poly(self.ring, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Poly":
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {m: a * c % p for m, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.ring.zero()
        return Poly(self.ring, _mul_terms(self.terms, other.terms, self.ring.p))

    __rmul__ = __mul__

    def mul_monomial(self, m: Monomial, c: int = 1) -> "Poly":
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {tuple(a + b for a, b in zip(k, m)): v * c % p for k, v in self.terms.items()})

    def frobenius(self, q: int) -> "Poly":
        """``self ** q`` for ``q`` a power of p, computed by scaling exponents.

        Coefficients are fixed because ``c^p = c`` in F_p."""
        return Poly(self.ring, {tuple(q * a for a in m): c for m, c in self.terms.items()})

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        return poly_pow(self, k)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def _mul_terms(a: Mapping[Monomial, int], b: Mapping[Monomial, int], p: int) -> Dict[Monomial, int]:
    if len(a) < len(b):
        a, b = b, a
    out: Dict[Monomial, int] = {}
    get = out.get
    for mb, cb in b.items():
        for ma, ca in a.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = (get(m, 0) + ca * cb) % p
    return {m: c for m, c in out.items() if c}


def _binary_pow(f: Poly, k: int) -> Poly:
    result = f.ring.one()
    base = f
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def poly_pow(f: Poly, k: int) -> Poly:
    """``f ** k``.  The exponent is split into base-p digits so that only
    digit-sized powers are multiplied out (binary exponentiation); the p-power
    parts are Frobenius exponent scalings."""
    ring = f.ring
    if k == 0:
        return ring.one()
    if not f.terms:
        return ring.zero()
    if len(f.terms) == 1:
        (m, c), = f.terms.items()
        return Poly(ring, {tuple(k * a for a in m): pow(c, k, ring.p)})
    p = ring.p
    result = ring.one()
    q = 1
    while k:
        k, digit = divmod(k, p)
        if digit:
            result = result * _binary_pow(f, digit).frobenius(q)
        q *= p
    return result


def total_degree(f: Poly):
    """Total degree of ``f``; ``None`` is the bottom value for the zero polynomial."""
    return f.total_degree()


# ---------------------------------------------------------------------------
# printing


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    names = f.ring.names
    parts = []
    for m, c in f.sorted_terms():
        factors = []
        for name, e in zip(names, m):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        if not factors:
            parts.append(str(c))
        elif c == 1:
            parts.append("*".join(factors))
        else:
            parts.append(f"{c}*" + "*".join(factors))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# parsing
#
# expr   := term (('+'|'-') term)*
# term   := factor ('*'? factor)*
# factor := INT | VAR ('^' INT)?

_VAR_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([a-zA-Z][a-zA-Z0-9_]*)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        mt = _TOKEN_RE.match(text, pos)
        if mt is None:  # trailing whitespace
            break
        if mt.group(1) is not None:
            tokens.append(("INT", int(mt.group(1)), mt.start(1)))
        elif mt.group(2) is not None:
            tokens.append(("VAR", mt.group(2), mt.start(2)))
        elif mt.group(3) is not None:
            ch = mt.group(3)
            if ch not in "+-*^":
                raise ParseError(f"unexpected character {ch!r}", mt.start(3), text)
            tokens.append((ch, ch, mt.start(3)))
        pos = mt.end()
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {n: j for j, n in enumerate(ring.names)}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, tok[2], self.text)

    def expr(self) -> Dict[Monomial, int]:
        p = self.ring.p
        out: Dict[Monomial, int] = {}
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            m, c = self.term()
            out[m] = (out.get(m, 0) + sign * c) % p
            kind = self.peek()[0]
            if kind in ("+", "-"):
                self.take()
                sign = -1 if kind == "-" else 1
                if self.peek()[0] == "-":  # "x + -3*y"
                    self.take()
                    sign = -sign
                continue
            if kind == "EOF":
                break
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return {m: c for m, c in out.items() if c}

    def term(self) -> Tuple[Monomial, int]:
        exps = [0] * self.ring.nvars
        coeff = 1
        coeff, exps = self.factor(coeff, exps)
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                coeff, exps = self.factor(coeff, exps)
            elif kind in ("INT", "VAR"):
                coeff, exps = self.factor(coeff, exps)
            else:
                break
        return tuple(exps), coeff

    def factor(self, coeff, exps):
        tok = self.take()
        if tok[0] == "-" and self.peek()[0] == "INT":  # signed INT inside a product
            return -coeff * self.take()[1], exps
        if tok[0] == "INT":
            return coeff * tok[1], exps
        if tok[0] == "VAR":
            j = self.index.get(tok[1])
            if j is None:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2], self.text)
            power = 1
            if self.peek()[0] == "^":
                self.take()
                nt = self.take()
                if nt[0] != "INT":
                    raise self.error("expected a non-negative integer exponent", nt)
                power = nt[1]
            exps[j] += power
            return coeff, exps
        if tok[0] == "EOF":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {tok[1]!r}", tok)


def parse(text: str, ring: Ring) -> Poly:
    """Parse a polynomial string in ``ring``; coefficients are reduced mod p."""
    if not isinstance(text, str):
        raise ParseError("polynomial must be a string", 0, repr(text))
    if not text.strip():
        raise ParseError("empty polynomial", 0, text)
    return Poly(ring, _Parser(text, ring).expr())
