"""Reproduction suites: each returns a list of named checks with a diff on failure."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .casebook import GROUPS, KNOWN_MISPRINTS, REPRESENTATIVES, all_case_ids, compare_case, unmatched_records
from .catalog import fibered_generators, generator_verdicts, load_catalog
from .jones import family_identity_sides, j4, jones_cf, jones_family_knot
from .laurent import LaurentPoly
from .obstructions import FTIBundle, ITO_SLOPES, Outcome, ito_reduced, ito_thresholds
from .plat import build_plat
from .rational import family_cf
from .seifert import SeifertData, conway_coeffs, conway_poly, signature_seifert
from .slopes import s_difference_closed_form, s_difference_family

FAMILY_RANGE = range(1, 5)
EXPECTED_FIBERED = ("6_3", "7_7", "8_12", "3_1#3_1*", "4_1#4_1")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        tail = f": {self.detail}" if self.detail else ""
        return f"{tag} {self.suite} {self.name}{tail}"


# ---------------------------------------------------------------- slope cases


def case_checks(case_id: str | None = None, x: int | None = None, y: int | None = None) -> list[Check]:
    ids = [case_id] if case_id else all_case_ids()
    out = []
    for cid in ids:
        c = compare_case(cid, x, y)
        line = c.printed
        head = f"[{','.join(map(str, line.expansion))}] at (x,y)=({c.x},{c.y})"
        if c.ok:
            n_plus, n_minus, N, W = c.computed
            detail = f"{head} n+={n_plus} n-={n_minus} N={N} W={W}"
        else:
            detail = f"{head} " + "; ".join(c.mismatches)
            if cid in KNOWN_MISPRINTS:
                detail += f" (known: {KNOWN_MISPRINTS[cid]})"
        out.append(Check("case", f"{cid}", c.ok, detail))
    if case_id is None:
        for group in GROUPS:
            gx, gy = REPRESENTATIVES[group]
            extra = unmatched_records(group, gx, gy)
            out.append(Check(
                "case", f"group-{group}-coverage", not extra,
                "" if not extra else "unprinted expansions " + ", ".join(str(list(r.expansion.terms)) for r in extra),
            ))
    return out


# ---------------------------------------------------------------- closed form


def closed_form_grid(max_x: int = 8, min_y: int = -8) -> list[tuple[int, int]]:
    return [(x, y) for x in range(1, max_x + 1) for y in range(min_y, 0) if x + y > 0]


def closed_form_checks() -> list[Check]:
    bad = []
    grid = closed_form_grid()
    for x, y in grid:
        got, want = s_difference_family(x, y), s_difference_closed_form(x, y)
        if got != want:
            bad.append(f"({x},{y}): enumerated {got}, formula {want}")
    return [Check("closed-form", f"S- - S+ on {len(grid)} knots", not bad, "; ".join(bad))]


# ---------------------------------------------------------------- signature


def signature_template(x: int, y: int) -> tuple[list[int], tuple[int, int], int]:
    """Reduced alternating diagram (positive INVERSE terms), its (o, y) counts and sigma."""
    if y > 0 and x + y > 0:
        return [2*x, 2*y - 1, 1, 2*x + 2*y - 2, 1, 2*x - 1], (4*x + 4*y - 3, 4*x + 4*y - 2), -2
    if y < 0 and x + y < 0:
        return [2*x - 1, 1, -2*y - 2, 1, -2*x - 2*y - 1, 2*x], (2*x + 3, 2*x), 2
    if y < 0 and x + y > 0:
        return [2*x - 1, 1, -2*y - 1, 2*x + 2*y - 1, 1, 2*x - 1], (4*x + 2*y, 4*x + 2*y - 1), 0
    raise ValueError(f"(x, y) = ({x}, {y}) is on a region boundary")


def signature_grid(max_x: int = 8, max_abs_y: int = 8) -> list[tuple[int, int]]:
    return [
        (x, y)
        for x in range(1, max_x + 1)
        for y in range(-max_abs_y, max_abs_y + 1)
        if y != 0 and x + y != 0
    ]


def signature_checks() -> list[Check]:
    by_region: dict[int, list[str]] = {-2: [], 0: [], 2: []}
    counts: dict[int, int] = {-2: 0, 0: 0, 2: 0}
    for x, y in signature_grid():
        terms, (o_want, y_want), sigma = signature_template(x, y)
        counts[sigma] += 1
        s_seifert = signature_seifert(SeifertData.from_even_cf(family_cf(x, y)))
        D = build_plat(terms)
        o_got, y_got = D.all_A_circles(), D.positive_crossings()
        s_diagram = D.signature_traczyk()
        if (s_seifert, s_diagram, o_got, y_got) != (sigma, sigma, o_want, y_want):
            by_region[sigma].append(
                f"({x},{y}): seifert {s_seifert}, diagram {s_diagram}, o={o_got}/{o_want}, y={y_got}/{y_want}"
            )
    names = {-2: "y>0,x+y>0 sigma=-2", 2: "y<0,x+y<0 sigma=+2", 0: "y<0,x+y>0 sigma=0"}
    return [
        Check("signature", f"{names[s]} ({counts[s]} knots)", not by_region[s], "; ".join(by_region[s]))
        for s in (-2, 0, 2)
    ]


# ---------------------------------------------------------------- family


def family_cf_n(n: int) -> list[int]:
    return [4 * n, -2 * n, -2 * n, 4 * n]


def family_checks(n: int) -> list[Check]:
    terms = family_cf_n(n)
    nabla = conway_poly(SeifertData.from_even_cf(terms))
    want_nabla = 1 + LaurentPoly({8: 4 * n ** 4})
    V = jones_cf(terms).V
    lhs, rhs = family_identity_sides(V, n)
    jv = j4(V)
    closed = jones_family_knot(n)
    out = [
        Check("family", f"n={n} conway", nabla == want_nabla,
              f"nabla = {nabla.format('z')}" + ("" if nabla == want_nabla else f", expected {want_nabla.format('z')}")),
        Check("family", f"n={n} jones-identity", lhs == rhs, "" if lhs == rhs else f"lhs - rhs = {(lhs - rhs).format('t')}"),
        Check("family", f"n={n} jones-closed-form", closed == V, "" if closed == V else "state sum and closed form differ"),
        Check("family", f"n={n} j4", jv == -12 * n ** 4, f"j4 = {jv}"),
    ]
    return out


# ---------------------------------------------------------------- Ito arithmetic


def ito_checks(n: int) -> list[Check]:
    n4 = n ** 4
    want = {(1, 1): -74 * n4, (4, 1): -26 * n4}
    jv = Fraction(-12 * n4)
    out = []
    for p2, q2 in ITO_SLOPES:
        got = ito_reduced(jv, n, p2, q2)
        out.append(Check("ito", f"n={n} (p^2,q^2)=({p2},{q2}) value", got == want[(p2, q2)], f"{got}"))
    thr = ito_thresholds(n)
    want_thr = {(1, 1): 284 * n4, (4, 1): 14 * n4}
    for (p2, q2), value in thr.items():
        vanishes = ito_reduced(Fraction(value), n, p2, q2) == 0
        out.append(Check("ito", f"n={n} (p^2,q^2)=({p2},{q2}) threshold", vanishes and value == want_thr[(p2, q2)],
                         f"j4 = {value}"))
    # full equation against the reduced one, with the family's own invariants
    nabla = conway_poly(SeifertData.from_even_cf(family_cf_n(n)))
    bundle = FTIBundle.from_invariants(nabla, jv)
    agree = all(bundle.ito_equation(p2, q2) == ito_reduced(jv, n, p2, q2) for p2, q2 in ITO_SLOPES)
    out.append(Check("ito", f"n={n} full=reduced", agree, f"a4 = {conway_coeffs(nabla).get(4, 0)}"))
    return out


# ---------------------------------------------------------------- generators


def generator_checks(path=None) -> list[Check]:
    entries = load_catalog(path)
    fibered = tuple(e.name for e in fibered_generators(entries))
    out = [Check("generators", "fibered set", set(fibered) == set(EXPECTED_FIBERED), ", ".join(fibered))]
    for name, outcome in generator_verdicts(entries):
        out.append(Check("generators", f"{name} fails alexander form", outcome is Outcome.EXCLUDES, outcome.value))
    return out


def all_checks() -> list[Check]:
    out = case_checks() + closed_form_checks() + signature_checks()
    for n in FAMILY_RANGE:
        out += family_checks(n)
    for n in FAMILY_RANGE:
        out += ito_checks(n)
    return out + generator_checks()
