"""Obstructions to purely cosmetic surgeries on two-bridge knots.

The gates run in a fixed order and each one only reads knot invariants:

1. ``hanselman``: Alexander polynomial form, genus 2, signature 0.
2. ``boyer_lines``: the z^2 Conway coefficient must vanish.
3. ``casson``: the Casson difference at slopes 1 and 2 must vanish.
4. ``ito``: degree-4/6 finite type invariants, for the knots C[4n, -2n, -2n, 4n].

A knot is cleared as soon as one gate excludes it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import HypothesisViolation
from .jones import j4 as jones_j4, jones_two_bridge
from .laurent import LaurentPoly
from .rational import TwoBridgeKnot, family_n
from .seifert import (
    SeifertData,
    alexander_poly,
    conway_coeffs,
    conway_poly,
    genus_alternating,
    signature_seifert,
)
from .slopes import casson_difference, slope_records


class Outcome(enum.Enum):
    EXCLUDES = "EXCLUDES"
    PASSES = "PASSES"
    NOT_APPLICABLE = "NOT_APPLICABLE"


class Verdict(enum.Enum):
    NO_COSMETIC_SURGERIES = "NO_COSMETIC_SURGERIES"
    UNDETERMINED = "UNDETERMINED"


@dataclass(frozen=True)
class Stage:
    name: str
    outcome: Outcome
    witness: dict[str, Any] = field(default_factory=dict)


# ---------------------------------------------------------------- gate 1


def family_coefficient(delta: LaurentPoly) -> int | None:
    """n >= 1 with delta = n t^2 - 4n t + (6n+1) - 4n t^-1 + n t^-2, else None."""
    if delta.is_zero() or delta.min_exp != -2 or delta.max_exp != 2:
        return None
    n, b, c, d, e = delta.coeff_list()
    if n >= 1 and (b, c, d, e) == (-4 * n, 6 * n + 1, -4 * n, n):
        return n
    return None


def genus_slope_bound(g: int, thickness: int = 0) -> Fraction | None:
    """(th + 2g) / (2g(g - 1)), the bound on q for slopes +-1/q; None when g < 2."""
    if g < 2:
        return None
    return Fraction(thickness + 2 * g, 2 * g * (g - 1))


@dataclass(frozen=True)
class HanselmanCheck:
    matches_family: bool
    n_coefficient: int | None
    allowed_slopes: frozenset[Fraction]
    genus_ok: bool
    signature_ok: bool
    thickness: int = 0
    slope_bound: Fraction | None = None

    @property
    def outcome(self) -> Outcome:
        ok = self.matches_family and self.genus_ok and self.signature_ok
        return Outcome.PASSES if ok else Outcome.EXCLUDES


def hanselman_gate(delta: LaurentPoly, sigma: int, g: int, thickness: int = 0) -> HanselmanCheck:
    n = family_coefficient(delta)
    bound = genus_slope_bound(g, thickness)
    allowed: set[Fraction] = set()
    if g == 2:
        allowed |= {Fraction(2), Fraction(-2)}
        if bound is not None and bound >= 1:
            allowed |= {Fraction(1), Fraction(-1)}
    return HanselmanCheck(
        matches_family=n is not None,
        n_coefficient=n,
        allowed_slopes=frozenset(allowed),
        genus_ok=g == 2,
        signature_ok=sigma == 0,
        thickness=thickness,
        slope_bound=bound,
    )


# ---------------------------------------------------------------- gate 2


def boyer_lines_gate(nabla: LaurentPoly) -> Outcome:
    a2 = conway_coeffs(nabla).get(2, 0)
    return Outcome.EXCLUDES if a2 != 0 else Outcome.PASSES


# ---------------------------------------------------------------- gate 3


CASSON_SLOPES = (Fraction(1), Fraction(2))


def casson_gate(K: TwoBridgeKnot) -> tuple[Outcome, dict[Fraction, Fraction]]:
    summary = slope_records(K)
    values = {r: casson_difference(summary, r) for r in CASSON_SLOPES}
    outcome = Outcome.EXCLUDES if any(values.values()) else Outcome.PASSES
    return outcome, values


# ---------------------------------------------------------------- gate 4


@dataclass(frozen=True)
class FTIBundle:
    a2: int
    a4: int
    a6: int
    v4: Fraction
    w4: Fraction
    v6: Fraction
    j4: Fraction

    @classmethod
    def from_invariants(cls, nabla: LaurentPoly, j4: Fraction) -> FTIBundle:
        a = conway_coeffs(nabla)
        a2, a4, a6 = a.get(2, 0), a.get(4, 0), a.get(6, 0)
        if a2 != 0 or a6 != 0:
            raise HypothesisViolation(f"need a2 = a6 = 0, got a2 = {a2}, a6 = {a6}")
        j4 = Fraction(j4)
        return cls(
            a2=a2, a4=a4, a6=a6,
            v4=Fraction(-a4, 2),
            w4=j4 / 96 + Fraction(3 * a4, 32),
            v6=Fraction(-a4, 12),
            j4=j4,
        )

    def ito_equation(self, p2: int, q2: int) -> Fraction:
        """p^2 (24 w4 - 5 v4) + 5 v4 + q^2 (210 v6 + 5 v4)."""
        return p2 * (24 * self.w4 - 5 * self.v4) + 5 * self.v4 + q2 * (210 * self.v6 + 5 * self.v4)


ITO_SLOPES = ((1, 1), (4, 1))  # (p^2, q^2) for slopes 1 and 2


def ito_reduced(j4: Fraction, n: int, p2: int, q2: int) -> Fraction:
    """p^2 (j4/4 + 19 n^4) - 10 n^4 - 80 q^2 n^4."""
    n4 = n ** 4
    return p2 * (Fraction(j4) / 4 + 19 * n4) - 10 * n4 - 80 * q2 * n4


def ito_thresholds(n: int) -> dict[tuple[int, int], int]:
    """j4 values at which the reduced equation vanishes, per (p^2, q^2)."""
    n4 = n ** 4
    # p2 (j4/4 + 19 n4) = (10 + 80 q2) n4
    return {(p2, q2): int(4 * ((10 + 80 * q2) * n4 / Fraction(p2) - 19 * n4)) for p2, q2 in ITO_SLOPES}


def ito_gate(K: TwoBridgeKnot, n: int, nabla: LaurentPoly | None = None,
             j4: Fraction | None = None) -> tuple[Outcome, dict[str, Any]]:
    if nabla is None:
        nabla = conway_poly(K)
    if j4 is None:
        j4 = jones_j4(jones_two_bridge(K))
    bundle = FTIBundle.from_invariants(nabla, j4)
    values = {(p2, q2): ito_reduced(bundle.j4, n, p2, q2) for p2, q2 in ITO_SLOPES}
    outcome = Outcome.EXCLUDES if all(values.values()) else Outcome.PASSES
    return outcome, {"n": n, "j4": bundle.j4, "bundle": bundle, "values": values}


# ---------------------------------------------------------------- pipeline


@dataclass(frozen=True)
class ObstructionReport:
    knot: TwoBridgeKnot
    stages: tuple[Stage, ...]
    verdict: Verdict

    @property
    def deciding_stage(self) -> str | None:
        for s in self.stages:
            if s.outcome is Outcome.EXCLUDES:
                return s.name
        return None


def cosmetic_verdict(K: TwoBridgeKnot, full: bool = False) -> ObstructionReport:
    """Run the gates in order; stop at the first exclusion unless ``full``."""
    stages: list[Stage] = []

    def done() -> bool:
        return not full and any(s.outcome is Outcome.EXCLUDES for s in stages)

    S = SeifertData.of(K)
    delta = alexander_poly(S)
    sigma = signature_seifert(S)
    g = genus_alternating(delta)
    h = hanselman_gate(delta, sigma, g)
    stages.append(Stage("hanselman", h.outcome, {
        "n": h.n_coefficient, "genus": g, "signature": sigma,
        "allowed_slopes": sorted(h.allowed_slopes),
    }))

    nabla = conway_poly(S)
    if not done():
        a2 = conway_coeffs(nabla).get(2, 0)
        stages.append(Stage("boyer_lines", boyer_lines_gate(nabla), {"a2": a2}))

    if not done():
        outcome, values = casson_gate(K)
        stages.append(Stage("casson", outcome, {"differences": values}))

    if not done():
        n = family_n(K)
        if n is None:
            stages.append(Stage("ito", Outcome.NOT_APPLICABLE, {"reason": "not of the form C[4n,-2n,-2n,4n]"}))
        else:
            try:
                outcome, w = ito_gate(K, n, nabla=nabla)
                stages.append(Stage("ito", outcome, {"n": n, "j4": w["j4"], "values": w["values"]}))
            except HypothesisViolation as exc:
                stages.append(Stage("ito", Outcome.NOT_APPLICABLE, {"reason": str(exc)}))

    excluded = any(s.outcome is Outcome.EXCLUDES for s in stages)
    verdict = Verdict.NO_COSMETIC_SURGERIES if excluded else Verdict.UNDETERMINED
    return ObstructionReport(K, tuple(stages), verdict)
