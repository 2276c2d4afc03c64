"""Jones polynomials through the Kauffman bracket.

Two engines live here:

* a transfer-matrix evaluation along the twist regions of a 4-plat, where a
  tangle is a pair (f, g) of coefficients on the 0- and infinity-tangles;
* a frontier contraction for an arbitrary PD code, used for links produced by
  smoothing and switching crossings.

Normalization: <O> = 1, delta = -A^2 - A^-2, V = (-A^3)^(-w) <D> at t = A^-4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotALink
from .laurent import LaurentPoly, ONE, T, T_HALF, T_INV, ZERO, divides_exactly, exp_substitute
from .plat import Diagonal, Diagram, PlatDiagram, Twist, build_plat, build_tangle, knot_plat
from .rational import ContinuedFraction, TwoBridgeKnot, positive_cf

A = LaurentPoly({2: 1})
A_INV = LaurentPoly({-2: 1})
DELTA = -(A * A) - A_INV * A_INV


@dataclass(frozen=True)
class BracketState:
    """Skein-module coefficients of a 2-string tangle on the (0, infinity) basis."""

    v0: LaurentPoly
    vinf: LaurentPoly

    @classmethod
    def zero_tangle(cls) -> BracketState:
        return cls(ONE, ZERO)

    @classmethod
    def infinity_tangle(cls) -> BracketState:
        return cls(ZERO, ONE)

    def twist(self, kind: Twist, over: Diagonal) -> BracketState:
        f, g = self.v0, self.vinf
        if kind is Twist.HORIZONTAL:
            # horizontal smoothing passes the tangle through, vertical one caps NE-SE
            a_is_pass = over is Diagonal.NW_SE
            alpha, beta = (A, A_INV) if a_is_pass else (A_INV, A)
            return BracketState(alpha * f, alpha * g + beta * (f + DELTA * g))
        a_is_pass = over is Diagonal.NE_SW
        alpha, beta = (A, A_INV) if a_is_pass else (A_INV, A)
        return BracketState(alpha * f + beta * (DELTA * f + g), alpha * g)

    def numerator(self) -> LaurentPoly:
        return DELTA * self.v0 + self.vinf


@dataclass(frozen=True)
class JonesResult:
    V: LaurentPoly
    writhe: int
    bracket: LaurentPoly


def _bracket_to_jones(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    unit = (-(A ** 3)) ** (-writhe)
    return (unit * bracket).substitute_power(Fraction(-1, 4))


def bracket_plat(D: PlatDiagram) -> LaurentPoly:
    t = build_tangle(D.cf.terms)
    # the innermost term decides the starting tangle, exactly as in build_tangle
    start = D.twist_regions[-1][0]
    state = BracketState.zero_tangle() if start is Twist.HORIZONTAL else BracketState.infinity_tangle()
    for x in t.crossings:
        state = state.twist(x.twist, x.over)
    return state.numerator()


def jones_plat(D: PlatDiagram) -> JonesResult:
    b = bracket_plat(D)
    w = D.diagram.writhe()
    return JonesResult(_bracket_to_jones(b, w), w, b)


def jones_two_bridge(K: TwoBridgeKnot) -> JonesResult:
    return jones_plat(knot_plat(K))


def jones_cf(terms: ContinuedFraction | Sequence[int]) -> JonesResult:
    """Jones polynomial of the two-bridge knot or link named by an INVERSE expansion."""
    return jones_plat(build_plat(positive_cf(terms)))


# ---------------------------------------------------------------- PD engine


def _order_crossings(D: Diagram) -> list[int]:
    """Greedy order keeping the open frontier small: next crossing shares most edges."""
    remaining = set(range(D.size))
    order: list[int] = []
    open_edges: set[int] = set()
    while remaining:
        best = max(remaining, key=lambda i: (len(open_edges & set(D.crossings[i].edges)), -i))
        remaining.discard(best)
        order.append(best)
        open_edges ^= set(D.crossings[best].edges)
    return order


def _add_arc(partner: dict[int, int], x: int, y: int) -> int:
    """Glue an arc with end labels x, y into the partial state; returns closed circles."""
    if x == y:
        return 1
    ex = x
    if x in partner:
        ex = partner.pop(x)
        del partner[ex]
        if ex == y:
            return 1
    ey = y
    if y in partner:
        ey = partner.pop(y)
        del partner[ey]
        if ey == ex:
            return 1
    partner[ex] = ey
    partner[ey] = ex
    return 0


def bracket_pd(D: Diagram) -> LaurentPoly:
    """Kauffman bracket of a PD code by contracting one crossing at a time."""
    states: dict[frozenset, LaurentPoly] = {frozenset(): ONE}
    for i in _order_crossings(D):
        a, b, c, d = D.crossings[i].edges
        nxt: dict[frozenset, LaurentPoly] = {}
        for key, coef in states.items():
            for weight, pairs in ((A, ((a, b), (c, d))), (A_INV, ((a, d), (b, c)))):
                partner = {}
                for u, v in key:
                    partner[u] = v
                    partner[v] = u
                circles = 0
                for u, v in pairs:
                    circles += _add_arc(partner, u, v)
                new_key = frozenset(tuple(sorted(p)) for p in partner.items())
                term = coef * weight * DELTA ** circles
                nxt[new_key] = nxt.get(new_key, ZERO) + term
        states = {k: v for k, v in nxt.items() if v}
    total = states.get(frozenset(), ZERO) * DELTA ** D.loops
    if D.size == 0:
        total = DELTA ** D.loops
    quotient = divides_exactly(total, DELTA)
    assert quotient is not None
    return quotient


def jones_pd(D: Diagram) -> LaurentPoly:
    return _bracket_to_jones(bracket_pd(D), D.writhe())


# ---------------------------------------------------------------- closed forms


def jones_torus_2m(m: int) -> LaurentPoly:
    """Jones polynomial of the 2-component torus link T(2, m), coherently oriented.

    T(2, -2k) is -t^(1/2) (t^(2k) (t + 1 + t^-1) + 1) / (1 + t); T(2, 2k) is its
    mirror.  T(2, -2) is the Hopf link with two positive crossings.
    """
    if m == 0 or m % 2:
        raise NotALink(f"T(2, {m}) is not a 2-component torus link")
    k = -m // 2
    num = -T_HALF * (LaurentPoly.monomial(2 * k) * (T + 1 + T_INV) + 1)
    q = divides_exactly(num, 1 + T)
    assert q is not None
    return q


def _family_fraction_part(n: int) -> LaurentPoly:
    """t^-4n (t + 1 + t^-1) + 1.

    Not divisible by (1 + t)(1 + t^-1) on its own; callers multiply by
    1 - t^(+-2n) first.
    """
    return LaurentPoly.monomial(-4 * n) * (T + 1 + T_INV) + 1


def jones_family_pieces(n: int) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """(V of C[4n, -2n], V of C[4n, 2n], V of L_n) from their closed forms."""
    if n < 1:
        raise ValueError("n must be positive")
    den = (1 + T) * (1 + T_INV)
    inner = _family_fraction_part(n)
    t2n = LaurentPoly.monomial(2 * n)
    tm2n = LaurentPoly.monomial(-2 * n)
    q_minus = divides_exactly((1 - tm2n) * inner, den)
    q_plus = divides_exactly((1 - t2n) * inner, den)
    assert q_minus is not None and q_plus is not None
    v_minus = tm2n + q_minus
    v_plus = t2n + q_plus
    v_link = v_minus * jones_torus_2m(-4 * n)
    return v_minus, v_plus, v_link


def jones_family_knot(n: int) -> LaurentPoly:
    """V of C[4n, -2n, -2n, 4n] assembled from the skein relation at one crossing."""
    v_minus, v_plus, v_link = jones_family_pieces(n)
    t2n = LaurentPoly.monomial(2 * n)
    q = divides_exactly(T_HALF * (1 - t2n) * v_link, 1 + T)
    assert q is not None
    return t2n * v_plus - q


def family_identity_sides(V: LaurentPoly, n: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of (1+t)^2 (1+t^-1)^2 (V - 1) = (1-t^2n)(1-t^-2n)(t^2n - t^-2n)^2 (t+1+t^-1)."""
    t2n = LaurentPoly.monomial(2 * n)
    tm2n = LaurentPoly.monomial(-2 * n)
    lhs = (1 + T) ** 2 * (1 + T_INV) ** 2 * (V - 1)
    rhs = (1 - t2n) * (1 - tm2n) * (t2n - tm2n) ** 2 * (T + 1 + T_INV)
    return lhs, rhs


def j4(V: LaurentPoly | JonesResult) -> Fraction:
    """Coefficient of h^4 in V(e^h)."""
    if isinstance(V, JonesResult):
        V = V.V
    return exp_substitute(V, 4)[4]
