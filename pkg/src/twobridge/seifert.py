"""Seifert-matrix invariants read off an all-even continued fraction.

For an even expansion [2c_1, ..., 2c_2m] the knot bounds a plumbing of
twisted bands with Seifert matrix V: V[i][i] = d_i = (-1)^(i+1) c_i,
V[i][i+1] = 1 and zero elsewhere.  Everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateAlexander, InvalidCF
from .laurent import LaurentPoly, ONE, T_HALF, ZERO
from .rational import ContinuedFraction, TwoBridgeKnot

Z = LaurentPoly({2: 1})  # z, stored on the same grid as t


@dataclass(frozen=True)
class SeifertData:
    diag: tuple[int, ...]

    def __post_init__(self):
        if not self.diag or len(self.diag) % 2:
            raise InvalidCF(f"Seifert data needs an even, nonzero number of bands: {self.diag}")
        if any(d == 0 for d in self.diag):
            raise InvalidCF("zero band twist")

    @classmethod
    def from_even_cf(cls, cf: ContinuedFraction | Sequence[int]) -> SeifertData:
        terms = tuple(cf)
        if any(a % 2 for a in terms):
            raise InvalidCF(f"{list(terms)} is not all-even")
        return cls(tuple((-1) ** i * (a // 2) for i, a in enumerate(terms)))

    @classmethod
    def of(cls, K: TwoBridgeKnot) -> SeifertData:
        return cls.from_even_cf(K.even_cf)

    @property
    def genus(self) -> int:
        return len(self.diag) // 2

    def matrix(self) -> list[list[int]]:
        n = len(self.diag)
        V = [[0] * n for _ in range(n)]
        for i, d in enumerate(self.diag):
            V[i][i] = d
            if i + 1 < n:
                V[i][i + 1] = 1
        return V

    def symmetrized(self) -> list[list[int]]:
        V = self.matrix()
        n = len(V)
        return [[V[i][j] + V[j][i] for j in range(n)] for i in range(n)]


def _seifert(obj) -> SeifertData:
    if isinstance(obj, SeifertData):
        return obj
    if isinstance(obj, TwoBridgeKnot):
        return SeifertData.of(obj)
    return SeifertData.from_even_cf(obj)


def conway_poly(S) -> LaurentPoly:
    """Conway polynomial in z, via D_k = d_k z D_{k-1} + D_{k-2}."""
    S = _seifert(S)
    prev, cur = ZERO, ONE
    for d in S.diag:
        prev, cur = cur, Z * d * cur + prev
    return cur


def conway_coeffs(nabla: LaurentPoly) -> dict[int, int]:
    """{2k: a_2k} for a Conway polynomial stored with doubled z exponents."""
    return {int(e): c for e, c in nabla.items()}


def conway_to_alexander(nabla: LaurentPoly) -> LaurentPoly:
    z = T_HALF - T_HALF.mirror()
    out = ZERO
    zk = ONE
    last = 0
    for e, c in nabla.items():
        e = int(e)
        while last < e:
            zk = zk * z
            last += 1
        out = out + zk * c
    return out


def alexander_poly(S) -> LaurentPoly:
    """Symmetric Alexander polynomial, Delta(t) = nabla(t^1/2 - t^-1/2)."""
    return conway_to_alexander(conway_poly(S))


def determinant(S) -> int:
    return abs(alexander_poly(S).evaluate(-1))


def _minor_signature(diag: Sequence[int]) -> int | None:
    # tridiagonal V + V^T: diagonal 2d_k, off-diagonal 1
    prev, cur = 1, 2 * diag[0]
    if cur == 0:
        return None
    sig = 1 if cur > 0 else -1
    for d in diag[1:]:
        prev, cur = cur, 2 * d * cur - prev
        if cur == 0:
            return None
        sig += 1 if cur * prev > 0 else -1
    return sig


def congruence_signature(M: Sequence[Sequence]) -> int:
    """Signature of a symmetric rational matrix by exact congruence diagonalization."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((i for i in range(k, n) if A[i][i] != 0), None)
        if piv is None:
            # all remaining diagonal entries vanish; make one nonzero via a_i += a_j
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for r in range(n):
                A[i][r] += A[j][r]
            for r in range(n):
                A[r][i] += A[r][j]
            piv = i
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            for row in A:
                row[k], row[piv] = row[piv], row[k]
        p = A[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = A[i][k] / p
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
                for j in range(k, n):
                    A[j][i] -= f * A[j][k]
        k += 1
    return pos - neg


def signature_seifert(S) -> int:
    S = _seifert(S)
    sig = _minor_signature(S.diag)
    if sig is None:
        sig = congruence_signature(S.symmetrized())
    return sig


def genus_alternating(delta: LaurentPoly) -> int:
    if delta.is_zero() or delta.span() == 0:
        raise DegenerateAlexander(f"{delta.format()} has zero breadth")
    return int(delta.span()) // 2


def is_fibered_alternating(delta: LaurentPoly) -> bool:
    return abs(delta.leading_coeff()) == 1
