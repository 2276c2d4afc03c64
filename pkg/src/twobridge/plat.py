"""4-plat diagrams of two-bridge knots and links, and planar-diagram (PD) codes.

A rational tangle is grown one crossing at a time.  Each crossing has four
corners in counterclockwise order NE, NW, SW, SE and an over-diagonal (either
NE-SW or NW-SE).  A horizontal twist is added on the right of the tangle, a
vertical twist at the bottom.  The numerator closure joins NW to NE and SW to
SE.

PD conventions: a crossing (a, b, c, d) lists its edges counterclockwise
starting from the incoming under-edge.  The over-strand is b-d; the crossing
is positive when the over-strand runs d -> b.  The A-smoothing pairs (a, b)
with (c, d); the B-smoothing pairs (a, d) with (b, c).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidCF, MultiComponent
from .rational import ContinuedFraction, TwoBridgeKnot, positive_cf

NE, NW, SW, SE = 0, 1, 2, 3
CORNER_NAMES = ("NE", "NW", "SW", "SE")


class Twist(enum.Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class Diagonal(enum.Enum):
    NE_SW = "/"
    NW_SE = "\\"


# Over-diagonal of a crossing in a positive twist region.  Fixed so that every
# all-positive expansion gives an alternating diagram whose chirality agrees
# with the Seifert-matrix route (see tests/test_plat.py).
POSITIVE_OVER = {Twist.HORIZONTAL: Diagonal.NW_SE, Twist.VERTICAL: Diagonal.NW_SE}


def _flip(d: Diagonal) -> Diagonal:
    return Diagonal.NW_SE if d is Diagonal.NE_SW else Diagonal.NE_SW


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


# ---------------------------------------------------------------- PD codes


@dataclass(frozen=True)
class PDCrossing:
    edges: tuple[int, int, int, int]
    sign: int  # +1 or -1

    def __iter__(self):
        return iter(self.edges)


@dataclass(frozen=True)
class Diagram:
    """An oriented link diagram as a PD code plus a count of crossingless circles."""

    crossings: tuple[PDCrossing, ...]
    loops: int = 0

    @property
    def size(self) -> int:
        return len(self.crossings)

    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def positive_crossings(self) -> int:
        return sum(1 for x in self.crossings if x.sign > 0)

    def edges(self) -> set[int]:
        return {e for x in self.crossings for e in x.edges}

    def components(self) -> int:
        uf = _UnionFind()
        for x in self.crossings:
            a, b, c, d = x.edges
            uf.find(b)
            uf.find(d)
            uf.union(a, c)
            uf.union(b, d)
        return len({uf.find(e) for e in self.edges()}) + self.loops

    def state_circles(self, choices: Sequence[bool]) -> int:
        """Circles of the Kauffman state; ``choices[i]`` True means A at crossing i."""
        uf = _UnionFind()
        loops = self.loops
        for x, use_a in zip(self.crossings, choices):
            a, b, c, d = x.edges
            pairs = ((a, b), (c, d)) if use_a else ((a, d), (b, c))
            for u, v in pairs:
                if not uf.union(u, v):
                    loops += 1
        return loops

    def all_A_circles(self) -> int:
        return self.state_circles([True] * self.size)

    def all_B_circles(self) -> int:
        return self.state_circles([False] * self.size)

    def switch(self, i: int) -> Diagram:
        """Exchange over and under at crossing i."""
        x = self.crossings[i]
        a, b, c, d = x.edges
        new = PDCrossing((d, a, b, c), -1) if x.sign > 0 else PDCrossing((b, c, d, a), 1)
        return Diagram(self.crossings[:i] + (new,) + self.crossings[i + 1:], self.loops)

    def smooth(self, i: int, oriented: bool = True, use_a: bool | None = None) -> Diagram:
        """Remove crossing i by a smoothing (the orientation-respecting one by default).

        Signs of the remaining crossings are kept as they were, which is only
        meaningful for the oriented smoothing.
        """
        x = self.crossings[i]
        if use_a is None:
            if not oriented:
                raise ValueError("choose a smoothing")
            use_a = x.sign > 0
        a, b, c, d = x.edges
        pairs = ((a, b), (c, d)) if use_a else ((a, d), (b, c))
        rest = self.crossings[:i] + self.crossings[i + 1:]
        uf = _UnionFind()
        loops = self.loops
        # joining the two ends of one arc closes a free circle
        for u, v in pairs:
            if not uf.union(u, v):
                loops += 1
        relabel = {e: uf.find(e) for e in (a, b, c, d)}
        new = tuple(
            PDCrossing(tuple(relabel.get(e, e) for e in y.edges), y.sign) for y in rest
        )
        return Diagram(new, loops)

    def mirror(self) -> Diagram:
        d = self
        for i in range(self.size):
            d = d.switch(i)
        return d

    def is_alternating(self) -> bool:
        """Every edge runs from an over-passage to an under-passage."""
        role: dict[int, list[str]] = {}
        for x in self.crossings:
            a, b, c, d = x.edges
            for e in (a, c):
                role.setdefault(e, []).append("u")
            for e in (b, d):
                role.setdefault(e, []).append("o")
        return all(sorted(r) == ["o", "u"] for r in role.values())

    def signature_traczyk(self) -> int:
        """o(D) - y(D) - 1 for a reduced alternating diagram of a knot."""
        if self.components() != 1:
            raise MultiComponent(f"{self.components()} components")
        return self.all_A_circles() - self.positive_crossings() - 1

    def pd_lines(self) -> list[str]:
        return [
            "X[{},{},{},{}] {}".format(*x.edges, "+" if x.sign > 0 else "-")
            for x in self.crossings
        ]


# ---------------------------------------------------------------- tangles


@dataclass
class _Crossing:
    twist: Twist
    over: Diagonal


@dataclass
class TangleBuilder:
    """Grows a rational tangle.  Slots are (crossing index, corner) or ("B", k)."""

    crossings: list[_Crossing] = field(default_factory=list)
    links: list[tuple] = field(default_factory=list)
    ends: dict[int, tuple] = field(default_factory=dict)

    @classmethod
    def zero(cls) -> TangleBuilder:
        t = cls(ends={k: ("B", k) for k in range(4)})
        t.links += [(("B", NW), ("B", NE)), (("B", SW), ("B", SE))]
        return t

    @classmethod
    def infinity(cls) -> TangleBuilder:
        t = cls(ends={k: ("B", k) for k in range(4)})
        t.links += [(("B", NW), ("B", SW)), (("B", NE), ("B", SE))]
        return t

    def _new(self, twist: Twist, positive: bool) -> int:
        over = POSITIVE_OVER[twist]
        self.crossings.append(_Crossing(twist, over if positive else _flip(over)))
        return len(self.crossings) - 1

    def twist_right(self, positive: bool = True) -> None:
        i = self._new(Twist.HORIZONTAL, positive)
        self.links += [(self.ends[NE], (i, NW)), (self.ends[SE], (i, SW))]
        self.ends[NE], self.ends[SE] = (i, NE), (i, SE)

    def twist_bottom(self, positive: bool = True) -> None:
        i = self._new(Twist.VERTICAL, positive)
        self.links += [(self.ends[SW], (i, NW)), (self.ends[SE], (i, NE))]
        self.ends[SW], self.ends[SE] = (i, SW), (i, SE)

    def numerator_closure(self) -> list[tuple]:
        return self.links + [(self.ends[NW], self.ends[NE]), (self.ends[SW], self.ends[SE])]


def _diagram_from_links(crossings: list[_Crossing], links: list[tuple]) -> Diagram:
    """Turn slot-level connectivity into an oriented PD code."""
    adj: dict[tuple, list[tuple]] = {}
    for u, v in links:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    def walk_arc(start: tuple) -> tuple:
        """Follow boundary pseudo-slots from a crossing corner to the next corner."""
        prev, cur = start, adj[start][0]
        while cur[0] == "B":
            nxt = [s for s in adj[cur] if s != prev]
            if not nxt:
                nxt = [prev]
            prev, cur = cur, nxt[0]
        return cur

    # free circles made only of pseudo-slots
    seen_pseudo = set()
    loops = 0
    for s in adj:
        if s[0] == "B" and s not in seen_pseudo:
            stack, comp, hits = [s], set(), False
            while stack:
                u = stack.pop()
                if u in comp:
                    continue
                comp.add(u)
                for v in adj[u]:
                    if v[0] == "B":
                        stack.append(v)
                    else:
                        hits = True
            seen_pseudo |= comp
            if not hits:
                loops += 1

    n = len(crossings)
    edge_of: dict[tuple, int] = {}
    direction: dict[tuple, str] = {}  # slot -> "in" or "out"
    label = 0
    for c in range(n):
        for k in range(4):
            start = (c, k)
            if start in direction:
                continue
            # traverse the whole component from this slot, leaving through it
            slot = start
            while True:
                direction[slot] = "out"
                nxt = walk_arc(slot)
                edge_of[slot] = edge_of[nxt] = label
                label += 1
                direction[nxt] = "in"
                slot = (nxt[0], (nxt[1] + 2) % 4)
                if slot in direction:
                    break

    pd = []
    for c, x in enumerate(crossings):
        under = (NE, SW) if x.over is Diagonal.NW_SE else (NW, SE)
        k_in = under[0] if direction[(c, under[0])] == "in" else under[1]
        e = tuple(edge_of[(c, (k_in + j) % 4)] for j in range(4))
        over_in = (k_in + 3) % 4  # corner d
        sign = 1 if direction[(c, over_in)] == "in" else -1
        pd.append(PDCrossing(e, sign))
    return Diagram(tuple(pd), loops)


@dataclass(frozen=True)
class PlatDiagram:
    """Standard 4-plat diagram of an all-positive INVERSE expansion."""

    cf: ContinuedFraction
    twist_regions: tuple[tuple[Twist, int], ...]
    crossing_twists: tuple[Twist, ...]
    crossing_over: tuple[Diagonal, ...]
    diagram: Diagram

    @property
    def crossings(self) -> tuple[PDCrossing, ...]:
        return self.diagram.crossings

    @property
    def component_count(self) -> int:
        return self.diagram.components()

    def all_A_circles(self) -> int:
        return self.diagram.all_A_circles()

    def all_B_circles(self) -> int:
        return self.diagram.all_B_circles()

    def positive_crossings(self) -> int:
        if self.component_count != 1:
            raise MultiComponent(f"{self.component_count} components")
        return self.diagram.positive_crossings()

    def signature_traczyk(self) -> int:
        return self.diagram.signature_traczyk()

    def is_alternating(self) -> bool:
        return self.diagram.is_alternating()

    def pd_lines(self) -> list[str]:
        return self.diagram.pd_lines()


def twist_sequence(terms: Sequence[int]) -> list[tuple[Twist, int]]:
    """Twist regions in build order, last term first.  Odd-position terms
    (1-based) are horizontal, even-position terms vertical."""
    return [
        (Twist.HORIZONTAL if i % 2 == 0 else Twist.VERTICAL, terms[i])
        for i in range(len(terms) - 1, -1, -1)
    ]


def build_tangle(terms: Sequence[int]) -> TangleBuilder:
    seq = twist_sequence(terms)
    t = TangleBuilder.zero() if seq[0][0] is Twist.HORIZONTAL else TangleBuilder.infinity()
    for kind, count in seq:
        for _ in range(abs(count)):
            if kind is Twist.HORIZONTAL:
                t.twist_right(count > 0)
            else:
                t.twist_bottom(count > 0)
    return t


def build_plat(cf: ContinuedFraction | Iterable[int]) -> PlatDiagram:
    c = cf if isinstance(cf, ContinuedFraction) else ContinuedFraction(tuple(cf))
    if any(a <= 0 for a in c.terms):
        raise InvalidCF(f"{c} has a nonpositive term; rewrite with positive_cf first")
    t = build_tangle(c.terms)
    d = _diagram_from_links(t.crossings, t.numerator_closure())
    seq = twist_sequence(c.terms)
    return PlatDiagram(
        cf=c,
        twist_regions=tuple(reversed(seq)),
        crossing_twists=tuple(x.twist for x in t.crossings),
        crossing_over=tuple(x.over for x in t.crossings),
        diagram=d,
    )


def signed_diagram(terms: Sequence[int]) -> Diagram:
    """Diagram of a signed expansion without rewriting (generally non-alternating)."""
    t = build_tangle(terms)
    return _diagram_from_links(t.crossings, t.numerator_closure())


def knot_plat(K: TwoBridgeKnot) -> PlatDiagram:
    return build_plat(positive_cf(K.even_cf))


def signature_traczyk(K: TwoBridgeKnot | PlatDiagram) -> int:
    D = knot_plat(K) if isinstance(K, TwoBridgeKnot) else K
    return D.signature_traczyk()
