"""Print Conway, j4 and the reduced Ito values for the knots C[4n, -2n, -2n, 4n].

    python3 scripts/family_table.py --max-n 6
"""

import argparse

from twobridge.jones import j4, jones_cf
from twobridge.obstructions import ITO_SLOPES, ito_reduced, ito_thresholds
from twobridge.rational import TwoBridgeKnot
from twobridge.seifert import conway_coeffs, conway_poly


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    print(f"{'n':>3} {'p':>8} {'a4':>6} {'j4':>10} " + " ".join(f"{f'I{s}':>12} {f'thr{s}':>10}" for s in ITO_SLOPES))
    for n in range(1, args.max_n + 1):
        terms = [4 * n, -2 * n, -2 * n, 4 * n]
        K = TwoBridgeKnot.from_cf(terms)
        a4 = conway_coeffs(conway_poly(K)).get(4, 0)
        jv = j4(jones_cf(terms))
        thr = ito_thresholds(n)
        cells = " ".join(f"{str(ito_reduced(jv, n, *s)):>12} {thr[s]:>10}" for s in ITO_SLOPES)
        print(f"{n:>3} {K.p:>8} {a4:>6} {str(jv):>10} {cells}")


if __name__ == "__main__":
    main()
