"""Continued fractions and normalization of two-bridge knots b(p, q).

A two-bridge knot is named here by the value ``q/p`` of an INVERSE continued
fraction ``1/(a1 + 1/(a2 + ... + 1/ak))``.  The knot only depends on ``q``
modulo ``p`` and on the pair ``{q, q^-1 mod p}``; replacing ``q`` by ``-q``
gives the mirror image.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DivisionByZero, InvalidCF, InvalidFraction, NotAKnot


class Convention(enum.Enum):
    INVERSE = "inverse"  # 1/(a1 + 1/(a2 + ...))
    DIRECT = "direct"  # a1 + 1/(a2 + ...)


@dataclass(frozen=True)
class ContinuedFraction:
    terms: tuple[int, ...]
    convention: Convention = Convention.INVERSE

    def __post_init__(self):
        terms = tuple(int(a) for a in self.terms)
        if not terms:
            raise InvalidCF("empty continued fraction")
        if any(a == 0 for a in terms):
            raise InvalidCF(f"zero term in {list(terms)}")
        object.__setattr__(self, "terms", terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def negated(self) -> ContinuedFraction:
        return ContinuedFraction(tuple(-a for a in self.terms), self.convention)

    def as_convention(self, convention: Convention) -> ContinuedFraction:
        return ContinuedFraction(self.terms, convention)

    def value(self) -> Fraction:
        return eval_cf(self)

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.terms)) + "]"


def cf(*terms: int, convention: Convention = Convention.INVERSE) -> ContinuedFraction:
    if len(terms) == 1 and not isinstance(terms[0], int):
        terms = tuple(terms[0])
    return ContinuedFraction(tuple(terms), convention)


def eval_cf(c: ContinuedFraction) -> Fraction:
    """Exact value of ``c`` under its own convention."""
    tail = Fraction(c.terms[-1])
    for a in reversed(c.terms[:-1]):
        if tail == 0:
            raise DivisionByZero(f"tail evaluates to 0 in {c}")
        tail = a + 1 / tail
    if c.convention is Convention.DIRECT:
        return tail
    if tail == 0:
        raise DivisionByZero(f"{c} evaluates to 0 before inversion")
    return 1 / tail


def _nearest_even(u: Fraction) -> int:
    return 2 * math.floor(u / 2 + Fraction(1, 2))


def even_expansion(f: Fraction | int) -> ContinuedFraction:
    """The all-even INVERSE expansion of the even representative of ``f = q/p``.

    ``q`` is moved into ``(-p, p)`` with even numerator (same residue mod p),
    then expanded greedily: every partial quotient is the even integer
    nearest to the current tail.
    """
    f = Fraction(f)
    p, q = f.denominator, f.numerator
    if p % 2 == 0:
        raise NotAKnot(f"{f}: p = {p} is even (two-bridge link)")
    if p == 1:
        raise InvalidFraction(f"{f}: p = 1 is the trivial knot")
    q %= p
    if q % 2:
        q -= p
    u = Fraction(p, q)
    terms = []
    while u.denominator != 1:
        a = _nearest_even(u)
        if abs(u - a) >= 1:
            raise NotAKnot(f"{f}: no all-even expansion")
        terms.append(a)
        u = 1 / (u - a)
    if u.numerator % 2:
        raise NotAKnot(f"{f}: no all-even expansion")
    terms.append(u.numerator)
    return ContinuedFraction(tuple(terms))


def regular_cf(p: int, q: int) -> ContinuedFraction:
    """All-positive expansion of ``q/p`` for ``0 < q < p`` (Euclid on p/q)."""
    if not 0 < q < p:
        raise InvalidFraction(f"need 0 < q < p, got {q}/{p}")
    terms = []
    a, b = p, q
    while b:
        terms.append(a // b)
        a, b = b, a % b
    return ContinuedFraction(tuple(terms))


def positive_cf(c: ContinuedFraction | Sequence[int]) -> ContinuedFraction:
    """Subtractive rewrite of a signed INVERSE expansion into an all-positive one
    for the same knot (same residue of q modulo p)."""
    if not isinstance(c, ContinuedFraction):
        c = ContinuedFraction(tuple(c))
    v = eval_cf(c.as_convention(Convention.INVERSE))
    p, q = v.denominator, v.numerator % v.denominator
    if q == 0:
        raise InvalidCF(f"{c} evaluates to an integer")
    return regular_cf(p, q)


@dataclass(frozen=True)
class TwoBridgeKnot:
    """Canonical two-bridge knot.

    ``q`` is the smallest even member of ``{q, q^-1, p-q, p-q^-1}`` in (0, p);
    ``mirrored`` says whether the knot is the mirror of b(p, q).  ``even_cf``
    carries the chirality: it evaluates to ``q/p`` or ``-q/p``.
    """

    p: int
    q: int
    mirrored: bool = False
    even_cf: ContinuedFraction = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.even_cf is None:
            e = even_expansion(Fraction(self.q, self.p))
            object.__setattr__(self, "even_cf", e.negated() if self.mirrored else e)

    @classmethod
    def from_fraction(cls, p: int, q: int) -> TwoBridgeKnot:
        return normalize(p, q)

    @classmethod
    def from_cf(cls, terms: ContinuedFraction | Iterable[int]) -> TwoBridgeKnot:
        c = terms if isinstance(terms, ContinuedFraction) else ContinuedFraction(tuple(terms))
        v = eval_cf(c.as_convention(Convention.INVERSE))
        return normalize(v.denominator, v.numerator)

    @property
    def value(self) -> Fraction:
        """Signed value q/p of the chirality-carrying even expansion."""
        return Fraction(-self.q if self.mirrored else self.q, self.p)

    @property
    def genus(self) -> int:
        return len(self.even_cf) // 2

    @property
    def chirality(self) -> str:
        return "mirror" if self.mirrored else "standard"

    def __str__(self) -> str:
        return f"b({self.p},{self.q}){'*' if self.mirrored else ''}"


def normalize(p: int, q: int) -> TwoBridgeKnot:
    p, q = int(p), int(q)
    if p < 0:
        p, q = -p, -q
    if p % 2 == 0:
        raise NotAKnot(f"b({p}, {q}): p is even, not a knot")
    if p < 3:
        raise InvalidFraction(f"b({p}, {q}): p must be at least 3")
    if math.gcd(p, q) != 1:
        raise InvalidFraction(f"b({p}, {q}): gcd(p, q) != 1, not a knot")
    r = q % p
    same = {r, pow(r, -1, p)}
    other = {p - s for s in same}
    q_can = min(s for s in same | other if s % 2 == 0)
    return TwoBridgeKnot(p, q_can, mirrored=q_can not in same)


def mirror(K: TwoBridgeKnot) -> TwoBridgeKnot:
    if is_amphichiral(K):
        return K
    return replace(K, mirrored=not K.mirrored, even_cf=K.even_cf.negated())


def is_amphichiral(K: TwoBridgeKnot) -> bool:
    return (K.q * K.q + 1) % K.p == 0


def even_representatives(K: TwoBridgeKnot) -> list[ContinuedFraction]:
    """Every all-even expansion describing ``K`` with its chirality (one per
    residue in {q, q^-1})."""
    qs = K.value.numerator % K.p
    out = []
    for r in sorted({qs, pow(qs, -1, K.p)}):
        e = even_expansion(Fraction(r, K.p))
        if e not in out:
            out.append(e)
    return out


def family_cf(x: int, y: int) -> ContinuedFraction:
    """[2x, 2y, -2(x+y), 2x]"""
    if x == 0 or y == 0 or x + y == 0:
        raise InvalidCF(f"(x, y) = ({x}, {y}) gives a zero term")
    return ContinuedFraction((2 * x, 2 * y, -2 * (x + y), 2 * x))


def family_params(K: TwoBridgeKnot) -> tuple[int, int] | None:
    """(x, y) with x > 0 when K is the knot of [2x, 2y, -2(x+y), 2x] (same chirality)."""
    for e in even_representatives(K):
        if len(e) != 4:
            continue
        a, b, c, d = e.terms
        if a == d and c == -(a + b) and a > 0:
            return a // 2, b // 2
    return None


def family_n(K: TwoBridgeKnot) -> int | None:
    """n when K is C[4n, -2n, -2n, 4n] (amphichiral, so chirality is irrelevant)."""
    for e in even_representatives(K):
        if len(e) != 4:
            continue
        a, b, c, d = (abs(t) for t in e.terms)
        s = e.terms
        if a == d == 2 * b == 2 * c and s[0] * s[1] < 0 and s[1] == s[2] and s[0] == s[3]:
            return a // 4
    return None
