"""JSON report assembly.

Polynomials are lists of [doubled exponent, coefficient] pairs; integers that
grow with the knot (coefficients, p, q, weights, determinants) and all
rationals are decimal strings so no consumer truncates them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .jones import jones_two_bridge
from .laurent import LaurentPoly
from .obstructions import ObstructionReport, cosmetic_verdict
from .rational import TwoBridgeKnot, is_amphichiral, mirror, normalize
from .seifert import (
    SeifertData,
    alexander_poly,
    conway_poly,
    determinant,
    genus_alternating,
    is_fibered_alternating,
    signature_seifert,
)
from .slopes import SlopeSummary, casson_difference, slope_records

SCHEMA_VERSION = "1.0"


def rational_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def poly_json(P: LaurentPoly) -> list[list]:
    return [[k, str(c)] for k, c in P.to_pairs()]


def poly_from_json(pairs) -> LaurentPoly:
    return LaurentPoly.from_pairs(pairs)


def knot_json(K: TwoBridgeKnot) -> dict[str, Any]:
    return {
        "p": str(K.p),
        "q": str(K.q),
        "even_cf": list(K.even_cf.terms),
        "chirality": K.chirality,
    }


def knot_from_json(block: dict[str, Any]) -> TwoBridgeKnot:
    K = normalize(int(block["p"]), int(block["q"]))
    if (block["chirality"] == "mirror") != K.mirrored:
        K = mirror(K)
    return K


def invariants_json(K: TwoBridgeKnot) -> dict[str, Any]:
    S = SeifertData.of(K)
    delta = alexander_poly(S)
    return {
        "alexander": poly_json(delta),
        "conway": poly_json(conway_poly(S)),
        "jones": poly_json(jones_two_bridge(K).V),
        "signature": signature_seifert(S),
        "genus": genus_alternating(delta),
        "determinant": str(determinant(S)),
        "fibered": is_fibered_alternating(delta),
        "amphichiral": is_amphichiral(K),
    }


def slopes_json(summary: SlopeSummary) -> list[dict[str, Any]]:
    return [
        {
            "expansion": list(r.expansion.terms),
            "n_plus": r.n_plus,
            "n_minus": r.n_minus,
            "slope": r.slope,
            "weight": str(r.weight),
        }
        for r in summary.records
    ]


def _witness_json(value):
    if isinstance(value, dict):
        return {_key(k): _witness_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_witness_json(v) for v in value]
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    return str(value)


def _key(k) -> str:
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    if isinstance(k, Fraction):
        return rational_str(k)
    return str(k)


def verdict_json(r: ObstructionReport) -> dict[str, Any]:
    return {
        "verdict": r.verdict.value,
        "stage": r.deciding_stage,
        "stages": [
            {"name": s.name, "outcome": s.outcome.value, "witness": _witness_json(s.witness)}
            for s in r.stages
        ],
    }


CASSON_REPORT_SLOPES = (Fraction(1), Fraction(2))


def full_report(K: TwoBridgeKnot, full_gates: bool = False) -> dict[str, Any]:
    summary = slope_records(K)
    return {
        "schema_version": SCHEMA_VERSION,
        "knot": knot_json(K),
        "invariants": invariants_json(K),
        "slopes": slopes_json(summary),
        "s_plus": str(summary.s_plus),
        "s_minus": str(summary.s_minus),
        "casson": {rational_str(r): rational_str(casson_difference(summary, r)) for r in CASSON_REPORT_SLOPES},
        "verdict": verdict_json(cosmetic_verdict(K, full=full_gates)),
    }
