"""Catalog of the genus-two generators of prime alternating knots, with checks.

Rows come from a small CSV (header ``name,kind,descriptor,alexander,genus,
signature,source``).  ``alexander`` lists symmetric coefficients from the
lowest to the highest exponent, separated by semicolons.  ``kind`` is one of

* ``twobridge``: descriptor ``p/q``; invariants are recomputed and compared;
* ``sum``: descriptor ``A:B`` naming the summands (``*`` marks a mirror);
* ``table``: invariants taken as given.

The environment variable ``TBK_CATALOG`` points to a replacement CSV.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import InputError, ParseError, ValidationError
from .laurent import LaurentPoly, ONE
from .obstructions import Outcome, hanselman_gate
from .rational import TwoBridgeKnot, mirror, normalize
from .seifert import alexander_poly, genus_alternating, is_fibered_alternating, signature_seifert

HEADER = ["name", "kind", "descriptor", "alexander", "genus", "signature", "source"]
KINDS = {"twobridge", "sum", "table"}

# summands that are not rows of their own
BASE_KNOTS: dict[str, tuple[int, int]] = {"3_1": (3, 1), "4_1": (5, 2)}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    descriptor: str
    alexander: LaurentPoly
    genus: int
    sigma: int | None
    source: str

    @property
    def fibered(self) -> bool:
        return is_fibered_alternating(self.alexander)


def default_path() -> Path | None:
    env = os.environ.get("TBK_CATALOG")
    return Path(env) if env else None


def _read_text(path: str | Path | None) -> str:
    path = Path(path) if path is not None else default_path()
    if path is not None:
        return path.read_text(encoding="utf-8")
    return resources.files("twobridge").joinpath("data/generators.csv").read_text(encoding="utf-8")


def _parse_int(text: str, what: str, line: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} {text!r} is not an integer", line) from None


def _parse_alexander(text: str, line: int) -> LaurentPoly:
    parts = [p for p in text.split(";") if p.strip()]
    if not parts:
        raise ParseError("empty alexander column", line)
    coeffs = [_parse_int(p.strip(), "coefficient", line) for p in parts]
    if len(coeffs) % 2 == 0:
        raise ParseError("a symmetric coefficient list has odd length", line)
    return LaurentPoly.from_coeffs(coeffs, low=-(len(coeffs) // 2))


def _resolve_knot(name: str, rows: dict[str, CatalogEntry]) -> tuple[TwoBridgeKnot | None, LaurentPoly, int | None]:
    """(knot if two-bridge, Alexander polynomial, signature) of a named summand."""
    is_mirror = name.endswith("*")
    base = name.rstrip("*")
    if base in BASE_KNOTS:
        K = normalize(*BASE_KNOTS[base])
    elif base in rows and rows[base].kind == "twobridge":
        p, q = (int(s) for s in rows[base].descriptor.split("/"))
        K = normalize(p, q)
    elif base in rows:
        e = rows[base]
        sig = None if e.sigma is None else (-e.sigma if is_mirror else e.sigma)
        return None, e.alexander, sig
    else:
        raise KeyError(base)
    if is_mirror:
        K = mirror(K)
    return K, alexander_poly(K), signature_seifert(K)


def _validate(e: CatalogEntry, rows: dict[str, CatalogEntry]) -> None:
    delta = e.alexander
    if abs(delta.evaluate(1)) != 1:
        raise ValidationError(e.name, f"Alexander polynomial has value {delta.evaluate(1)} at t = 1")
    if not delta.is_symmetric():
        raise ValidationError(e.name, "Alexander polynomial is not symmetric")
    if genus_alternating(delta) != e.genus:
        raise ValidationError(e.name, f"genus {e.genus} but Alexander breadth gives {genus_alternating(delta)}")

    if e.kind == "twobridge":
        try:
            p, q = (int(s) for s in e.descriptor.split("/"))
            K = normalize(p, q)
        except (ValueError, InputError) as exc:
            raise ValidationError(e.name, f"bad two-bridge descriptor {e.descriptor!r}: {exc}") from None
        if alexander_poly(K) != delta:
            raise ValidationError(e.name, f"stored Alexander polynomial differs from b({p},{q})")
        if e.sigma is not None and signature_seifert(K) != e.sigma:
            raise ValidationError(e.name, f"stored signature {e.sigma} differs from {signature_seifert(K)}")
    elif e.kind == "sum":
        product, sigma = ONE, 0
        for factor in e.descriptor.split(":"):
            try:
                _, d, s = _resolve_knot(factor.strip(), rows)
            except KeyError:
                raise ValidationError(e.name, f"unknown summand {factor!r}") from None
            product = product * d
            sigma = None if (sigma is None or s is None) else sigma + s
        if product != delta:
            raise ValidationError(e.name, "Alexander polynomial is not the product of the summands'")
        if e.sigma is not None and sigma is not None and sigma != e.sigma:
            raise ValidationError(e.name, f"stored signature {e.sigma} differs from the sum {sigma}")


def load_catalog(path: str | Path | None = None) -> list[CatalogEntry]:
    text = _read_text(path)
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty catalog", 1) from None
    if [h.strip() for h in header] != HEADER:
        raise ParseError(f"header must be {','.join(HEADER)}", 1)
    entries: list[CatalogEntry] = []
    rows: dict[str, CatalogEntry] = {}
    for line, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(HEADER):
            raise ParseError(f"expected {len(HEADER)} columns, got {len(row)}", line)
        name, kind, descriptor, alex, genus, sig, source = (c.strip() for c in row)
        if kind not in KINDS:
            raise ParseError(f"unknown kind {kind!r}", line)
        entry = CatalogEntry(
            name=name,
            kind=kind,
            descriptor=descriptor,
            alexander=_parse_alexander(alex, line),
            genus=_parse_int(genus, "genus", line),
            sigma=_parse_int(sig, "signature", line) if sig else None,
            source=source,
        )
        if name in rows:
            raise ParseError(f"duplicate entry {name!r}", line)
        entries.append(entry)
        rows[name] = entry
    for e in entries:
        _validate(e, rows)
    return entries


def fibered_generators(entries: list[CatalogEntry] | None = None) -> list[CatalogEntry]:
    entries = load_catalog() if entries is None else entries
    return [e for e in entries if e.fibered]


def generator_verdicts(entries: list[CatalogEntry] | None = None) -> list[tuple[str, Outcome]]:
    """Hanselman-gate outcome of every fibered generator."""
    out = []
    for e in fibered_generators(entries):
        sigma = 0 if e.sigma is None else e.sigma
        out.append((e.name, hanselman_gate(e.alexander, sigma, e.genus).outcome))
    return out
