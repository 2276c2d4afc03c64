"""Sparse Laurent polynomials with integer coefficients on the half-integer grid.

Exponents are stored doubled: the key ``k`` stands for ``t^(k/2)``.  The same
type holds polynomials in ``t``, ``z`` or ``A``; the variable name only matters
when printing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import GridViolation, ZeroDivisor


def _as_key(e) -> int:
    d = Fraction(e) * 2
    if d.denominator != 1:
        raise GridViolation(f"exponent {e} is off the half-integer grid")
    return int(d)


class LaurentPoly:
    """Immutable sparse Laurent polynomial; ``terms`` maps doubled exponent -> coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {k: int(c) for k, c in (terms or {}).items() if c}
        self._hash = None

    # constructors

    @classmethod
    def from_exponents(cls, pairs: Mapping | Iterable) -> LaurentPoly:
        """Build from ``{exponent: coeff}`` with real (integer or half-integer) exponents."""
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        out: dict[int, int] = {}
        for e, c in items:
            k = _as_key(e)
            out[k] = out.get(k, 0) + int(c)
        return cls(out)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int | Fraction = 0) -> LaurentPoly:
        """Consecutive integer-step coefficients starting at exponent ``low``."""
        k0 = _as_key(low)
        return cls({k0 + 2 * i: c for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, e=1, c: int = 1) -> LaurentPoly:
        return cls({_as_key(e): c})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    # access

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        """(exponent as Fraction, coefficient) pairs, increasing exponent."""
        return [(Fraction(k, 2), c) for k, c in sorted(self._terms.items())]

    def coeff(self, e) -> int:
        return self._terms.get(_as_key(e), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def on_integer_grid(self) -> bool:
        return all(k % 2 == 0 for k in self._terms)

    def require_integer_grid(self) -> None:
        if not self.on_integer_grid():
            raise GridViolation(f"{self} has half-integer exponents")

    @property
    def min_exp(self) -> Fraction:
        return Fraction(min(self._terms), 2)

    @property
    def max_exp(self) -> Fraction:
        return Fraction(max(self._terms), 2)

    def span(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self.max_exp - self.min_exp

    def leading_coeff(self) -> int:
        return self._terms[max(self._terms)] if self._terms else 0

    def trailing_coeff(self) -> int:
        return self._terms[min(self._terms)] if self._terms else 0

    def coeff_sum(self) -> int:
        return sum(self._terms.values())

    def coeff_list(self) -> list[int]:
        """Dense coefficients from lowest to highest exponent in integer steps."""
        if not self._terms:
            return []
        lo, hi = min(self._terms), max(self._terms)
        if (hi - lo) % 2:
            raise GridViolation("mixed integer and half-integer exponents")
        return [self._terms.get(k, 0) for k in range(lo, hi + 1, 2)]

    # arithmetic

    def __add__(self, other) -> LaurentPoly:
        other = _coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = _coerce(other)
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            return LaurentPoly({-k * -n: c ** -n})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # substitutions

    def shift(self, e) -> LaurentPoly:
        """Multiply by ``t^e``."""
        k0 = _as_key(e)
        return LaurentPoly({k + k0: c for k, c in self._terms.items()})

    def mirror(self) -> LaurentPoly:
        """t -> t^-1."""
        return LaurentPoly({-k: c for k, c in self._terms.items()})

    def substitute_power(self, s) -> LaurentPoly:
        """t -> t^s for a nonzero integer or half-integer ``s``."""
        s = Fraction(s)
        if s == 0:
            raise GridViolation("substitution by t^0 collapses the polynomial")
        out: dict[int, int] = {}
        for k, c in self._terms.items():
            nk = Fraction(k) * s
            if nk.denominator != 1:
                raise GridViolation(f"t^({Fraction(k, 2)}) -> exponent {nk / 2} leaves the grid")
            out[int(nk)] = out.get(int(nk), 0) + c
        return LaurentPoly(out)

    def evaluate(self, x):
        """Value at ``t = x``; half-integer exponents need ``x`` to admit a square root."""
        total = 0
        for k, c in self._terms.items():
            if k % 2 == 0:
                total += c * _power(x, k // 2)
            else:
                r = _sqrt(x)
                total += c * _power(r, k)
        return total

    def is_symmetric(self) -> bool:
        return self == self.mirror()

    def is_palindromic_up_to_shift(self) -> bool:
        if not self._terms:
            return True
        lo, hi = min(self._terms), max(self._terms)
        return all(self._terms.get(lo + hi - k, 0) == c for k, c in self._terms.items())

    def symmetrized(self) -> LaurentPoly:
        """Shift so the exponent range is centered at 0."""
        if not self._terms:
            return self
        lo, hi = min(self._terms), max(self._terms)
        if (lo + hi) % 2:
            raise GridViolation("odd doubled span cannot be centered")
        return LaurentPoly({k - (lo + hi) // 2: c for k, c in self._terms.items()})

    # printing

    def format(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms):
            c = self._terms[k]
            e = Fraction(k, 2)
            if e == 0:
                mono = ""
            elif e == 1:
                mono = var
            else:
                mono = f"{var}^{e}" if e.denominator == 1 and e > 0 else f"{var}^({e})"
            mag = abs(c)
            body = (str(mag) if mag != 1 or not mono else "") + mono
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()})"

    __str__ = __repr__

    def to_pairs(self) -> list[list[int]]:
        """[[doubled_exponent, coeff], ...] in increasing exponent order."""
        return [[k, c] for k, c in sorted(self._terms.items())]

    @classmethod
    def from_pairs(cls, pairs) -> LaurentPoly:
        return cls({int(k): int(c) for k, c in pairs})


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


def _power(x, n: int):
    if n >= 0:
        return x ** n
    if isinstance(x, int):
        x = Fraction(x)
    return 1 / x ** (-n)


def _sqrt(x):
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        if x >= 0:
            rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
            if rn * rn == x.numerator and rd * rd == x.denominator:
                return Fraction(rn, rd)
        raise GridViolation(f"t^(1/2) at t = {x} is not rational")
    return x ** 0.5


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
T = LaurentPoly({2: 1})
T_INV = LaurentPoly({-2: 1})
T_HALF = LaurentPoly({1: 1})


def divides_exactly(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    """Exact quotient ``num / den`` in the Laurent ring, or None."""
    if den.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    if num.is_zero():
        return ZERO
    n = dict(num.terms)
    d = den.terms
    dlo, dhi = min(d), max(d)
    lead = d[dhi]
    q: dict[int, int] = {}
    # long division from the top; every surviving term must be cancelled
    while n:
        top = max(n)
        if top - dhi < min(n) - dlo:
            return None
        c, r = divmod(n[top], lead)
        if r:
            return None
        shift = top - dhi
        q[shift] = c
        for k, dc in d.items():
            v = n.get(k + shift, 0) - c * dc
            if v:
                n[k + shift] = v
            else:
                n.pop(k + shift, None)
    return LaurentPoly(q)


@dataclass(frozen=True)
class RationalSeries:
    """Truncated power series c_0 + c_1 h + ... + c_order h^order."""

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int) -> Fraction:
        return self.coeffs[m] if m < len(self.coeffs) else Fraction(0)

    def __mul__(self, other: RationalSeries) -> RationalSeries:
        order = min(self.order, other.order)
        return RationalSeries(tuple(
            sum((self.coeffs[i] * other.coeffs[m - i] for i in range(m + 1)), Fraction(0))
            for m in range(order + 1)
        ))

    def __add__(self, other: RationalSeries) -> RationalSeries:
        order = min(self.order, other.order)
        return RationalSeries(tuple(self.coeffs[m] + other.coeffs[m] for m in range(order + 1)))


def exp_substitute(P: LaurentPoly, order: int) -> RationalSeries:
    """Taylor coefficients of P(e^h) up to h^order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    P.require_integer_grid()
    items = [(k // 2, c) for k, c in P.terms.items()]
    return RationalSeries(tuple(
        Fraction(sum(c * e ** m for e, c in items), math.factorial(m)) for m in range(order + 1)
    ))
