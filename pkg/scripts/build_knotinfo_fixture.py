"""Freeze two-bridge knot data from the KnotInfo tables into a JSON test fixture.

Needs the ``database_knotinfo`` package at build time only; the test suite
reads the frozen file.

    python3 scripts/build_knotinfo_fixture.py --max-crossings 12
"""

import argparse
import json
import re
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "knotinfo_twobridge.json"

_TERM = re.compile(r"([+-]?)(\d*)(t?)(?:\^\(?(-?\d+)\)?)?")


def parse_poly(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for sign, c, t, e in _TERM.findall(text.replace(" ", "").replace("*", "")):
        if not (c or t):
            continue
        coef = int(c) if c else 1
        if sign == "-":
            coef = -coef
        exp = (int(e) if e else 1) if t else 0
        out[exp] = out.get(exp, 0) + coef
    return {k: v for k, v in out.items() if v}


def parse_list(text: str):
    raw = (text or "").strip(" []")
    if not raw:
        return None
    return sorted({int(x) for x in raw.split(",") if x.strip()})


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossings", type=int, default=12)
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()

    from database_knotinfo import link_list

    rows = []
    for k in link_list()[1:]:
        tb = k.get("two_bridge_notation")
        if not tb or int(k["crossing_number"]) > args.max_crossings:
            continue
        p, q = map(int, tb.strip("[]").split(","))
        alex = parse_poly(k["alexander_polynomial"])
        lo, hi = min(alex), max(alex)
        rows.append({
            "name": k["name"],
            "p": p,
            "q": q,
            "crossings": int(k["crossing_number"]),
            "alexander": [alex.get(i, 0) for i in range(lo, hi + 1)],
            "jones": sorted([e, c] for e, c in parse_poly(k["jones_polynomial"]).items()),
            "signature": int(k["signature"]),
            "determinant": int(k["determinant"]),
            "genus": int(k["three_genus"]),
            "fibered": k["fibered"].strip() == "Y",
            "boundary_slopes": parse_list(k["boundary_slopes"]),
        })
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps({"source": "KnotInfo (database_knotinfo)", "knots": rows}, indent=1) + "\n")
    print(f"wrote {len(rows)} knots to {args.out}")


if __name__ == "__main__":
    main()
