"""Exact invariants of two-bridge knots and a cosmetic-surgery obstruction pipeline."""

from .rational import (
    ContinuedFraction,
    Convention,
    TwoBridgeKnot,
    eval_cf,
    even_expansion,
    is_amphichiral,
    mirror,
    normalize,
)
from .laurent import LaurentPoly, RationalSeries, divides_exactly, exp_substitute

__all__ = [
    "ContinuedFraction",
    "Convention",
    "TwoBridgeKnot",
    "eval_cf",
    "even_expansion",
    "is_amphichiral",
    "mirror",
    "normalize",
    "LaurentPoly",
    "RationalSeries",
    "divides_exactly",
    "exp_substitute",
]
