"""Boundary slopes of two-bridge knots and the Casson surgery difference.

Boundary slopes are read off the DIRECT continued-fraction expansions
[a_1, ..., a_k] with every |a_i| >= 2 of two targets attached to the knot:
u = 1/v and u' = 1/(v -+ 1), where v = q/p is the value of the even
expansion.  Both name the same knot (q and q - p are the same residue).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidFraction, InvalidSlope, OutOfRegion
from .rational import ContinuedFraction, Convention, TwoBridgeKnot, eval_cf, family_cf

DIRECT = Convention.DIRECT


@dataclass(frozen=True)
class SlopeRecord:
    expansion: ContinuedFraction
    n_plus: int
    n_minus: int
    slope: int
    weight: int

    def as_tuple(self) -> tuple:
        return (list(self.expansion.terms), self.n_plus, self.n_minus, self.slope, self.weight)


@dataclass(frozen=True)
class SlopeSummary:
    records: tuple[SlopeRecord, ...]
    s_plus: int = field(init=False)
    s_minus: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "s_plus", sum(r.weight for r in self.records if r.slope > 0))
        object.__setattr__(self, "s_minus", sum(r.weight for r in self.records if r.slope < 0))

    def slopes(self) -> list[int]:
        return sorted({r.slope for r in self.records})

    def __len__(self) -> int:
        return len(self.records)


@lru_cache(maxsize=4096)
def _expansions(u: Fraction) -> tuple[tuple[int, ...], ...]:
    if u.denominator == 1:
        return ((int(u),),) if abs(u) >= 2 else ()
    out = []
    for a in (math.floor(u), math.ceil(u)):
        if abs(a) < 2:
            continue
        for rest in _expansions(1 / (u - a)):
            out.append((a,) + rest)
    return tuple(out)


def enumerate_expansions(u: Fraction | int) -> list[ContinuedFraction]:
    """Every DIRECT expansion of ``u`` whose terms all have absolute value >= 2.

    Each step picks floor(u) or ceil(u); the tail 1/(u - a) has a strictly
    smaller denominator, so the search terminates.
    """
    u = Fraction(u)
    if abs(u) <= 1:
        raise InvalidFraction(f"need |u| > 1, got {u}")
    return [ContinuedFraction(e, DIRECT) for e in _expansions(u)]


def count_signs(terms) -> tuple[int, int]:
    """(n+, n-): n+ counts terms whose sign follows +, -, +, - ... by position."""
    n_plus = sum(1 for i, a in enumerate(terms) if (a > 0) == (i % 2 == 0))
    return n_plus, len(terms) - n_plus


def weight(terms) -> int:
    return math.prod(abs(a) - 1 for a in terms)


def slope_targets(even_cf: TwoBridgeKnot | ContinuedFraction) -> tuple[Fraction, Fraction]:
    if isinstance(even_cf, TwoBridgeKnot):
        even_cf = even_cf.even_cf
    v = eval_cf(even_cf.as_convention(Convention.INVERSE))
    return 1 / v, 1 / (v - 1) if v > 0 else 1 / (v + 1)


def _sort_key(r: SlopeRecord):
    return (r.slope, len(r.expansion), r.expansion.terms)


def slope_records(K: TwoBridgeKnot | ContinuedFraction) -> SlopeSummary:
    """Slope records of a knot, or of the knot named by an all-even INVERSE expansion.

    Which even expansion is used (q or q^-1) changes the listed expansions
    but not the multiset of (N, W).
    """
    even = K.even_cf if isinstance(K, TwoBridgeKnot) else K
    n0p, n0m = count_signs(even.terms)
    base = n0p - n0m
    records = []
    for u in slope_targets(even):
        for e in enumerate_expansions(u):
            n_plus, n_minus = count_signs(e.terms)
            records.append(SlopeRecord(
                expansion=e,
                n_plus=n_plus,
                n_minus=n_minus,
                slope=2 * ((n_plus - n_minus) - base),
                weight=weight(e.terms),
            ))
    records.sort(key=_sort_key)
    return SlopeSummary(tuple(records))


def parse_slope(slope) -> tuple[int, int]:
    if isinstance(slope, tuple):
        p, q = slope
    else:
        if isinstance(slope, str):
            if "/" in slope:
                num, den = slope.split("/", 1)
                p, q = int(num), int(den)
            else:
                p, q = int(slope), 1
        else:
            s = Fraction(slope)
            p, q = s.numerator, s.denominator
    if q == 0:
        raise InvalidSlope("slope with q = 0 (the meridian) is not a surgery")
    if q < 0:
        p, q = -p, -q
    g = math.gcd(p, q)
    if g == 0 or p == 0:
        raise InvalidSlope("slope 0 is its own negative")
    return p // g, q // g


def casson_difference(K: TwoBridgeKnot | SlopeSummary, slope) -> Fraction:
    """lambda(K(p/q)) - lambda(K(-p/q)) = 1/4 sum_i W_i (|p - q N_i| - |-p - q N_i|)."""
    p, q = parse_slope(slope)
    summary = K if isinstance(K, SlopeSummary) else slope_records(K)
    total = sum(r.weight * (abs(p - q * r.slope) - abs(-p - q * r.slope)) for r in summary.records)
    return Fraction(total, 4)


def s_difference_family(x: int, y: int) -> int:
    """S_- - S_+ for the knot of [2x, 2y, -2(x+y), 2x] with x > 0, y < 0, x + y > 0."""
    if not (x > 0 and y < 0 and x + y > 0):
        raise OutOfRegion(f"(x, y) = ({x}, {y}) is outside x > 0, y < 0, x + y > 0")
    s = slope_records(TwoBridgeKnot.from_cf(family_cf(x, y)))
    return s.s_minus - s.s_plus


def s_difference_closed_form(x: int, y: int) -> int:
    return 2 * (x + 2 * y) * (4 * x * x - 6 * x + 5)
