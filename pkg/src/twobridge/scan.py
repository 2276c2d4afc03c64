"""Batch scan of every two-bridge knot class up to a bound on p."""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Iterator

from .rational import TwoBridgeKnot, normalize
from .report import full_report


@dataclass(frozen=True)
class ScanConfig:
    max_p: int
    jobs: int = 1
    chunksize: int = 16

    def __post_init__(self):
        if self.max_p < 3:
            raise ValueError(f"--max-p must be at least 3, got {self.max_p}")
        if self.jobs < 1:
            raise ValueError(f"--jobs must be positive, got {self.jobs}")


def canonical_knots(max_p: int) -> list[TwoBridgeKnot]:
    """One knot per class (p, q) with q ~ q^-1 ~ -q ~ -q^-1, in (p, q) order.

    A knot and its mirror share a class; the canonical member is b(p, q) with
    the smallest even q, which is also the first q of its class met here.
    """
    out = []
    for p in range(3, max_p + 1, 2):
        seen = set()
        for q in range(2, p, 2):
            if math.gcd(p, q) != 1:
                continue
            K = normalize(p, q)
            if K.q not in seen:
                seen.add(K.q)
                out.append(TwoBridgeKnot(K.p, K.q))
    return out


def _scan_one(K: TwoBridgeKnot) -> dict[str, Any]:
    return full_report(K)


def iter_reports(cfg: ScanConfig) -> Iterator[dict[str, Any]]:
    knots = canonical_knots(cfg.max_p)
    if cfg.jobs == 1:
        yield from map(_scan_one, knots)
        return
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        # map keeps input order, so the stream is identical for every job count
        yield from pool.map(_scan_one, knots, chunksize=cfg.chunksize)


def summarize(reports: list[dict[str, Any]]) -> dict[str, Any]:
    verdicts = Counter(r["verdict"]["verdict"] for r in reports)
    stages = Counter(r["verdict"]["stage"] or "none" for r in reports)
    return {
        "knots": len(reports),
        "verdicts": dict(sorted(verdicts.items())),
        "stages": dict(sorted(stages.items())),
        "undetermined": verdicts.get("UNDETERMINED", 0),
    }
