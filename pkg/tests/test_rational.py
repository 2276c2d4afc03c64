import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from oracles import canonical_class
from twobridge.errors import DivisionByZero, InvalidCF, InvalidFraction, NotAKnot
from twobridge.rational import (
    ContinuedFraction,
    Convention,
    TwoBridgeKnot,
    cf,
    eval_cf,
    even_expansion,
    even_representatives,
    family_cf,
    family_n,
    family_params,
    is_amphichiral,
    mirror,
    normalize,
    positive_cf,
    regular_cf,
)

knot_pq = st.integers(1, 400).map(lambda k: 2 * k + 1).flatmap(
    lambda p: st.tuples(st.just(p), st.integers(1, p - 1).filter(lambda q: math.gcd(p, q) == 1))
)


def test_eval_conventions():
    assert eval_cf(cf(2, 2)) == Fraction(2, 5)
    assert eval_cf(cf(2, 2, convention=Convention.DIRECT)) == Fraction(5, 2)
    assert eval_cf(cf(4, -2, -2, 4)) == Fraction(18, 65)
    assert cf([3, 1]).terms == (3, 1)


def test_cf_validation():
    with pytest.raises(InvalidCF):
        ContinuedFraction(())
    with pytest.raises(InvalidCF):
        cf(2, 0, 2)
    with pytest.raises(DivisionByZero):
        eval_cf(cf(2, -1, 1))
    with pytest.raises(DivisionByZero):
        eval_cf(cf(1, -1))


@pytest.mark.parametrize("frac, terms", [
    (Fraction(2, 3), (2, -2)),
    (Fraction(2, 5), (2, 2)),
    (Fraction(18, 65), (4, -2, -2, 4)),
    # odd numerators move to q - p first: 1/3 -> -2/3
    (Fraction(1, 3), (-2, 2)),
])
def test_even_expansion_examples(frac, terms):
    assert even_expansion(frac).terms == terms


def test_even_expansion_errors():
    with pytest.raises(NotAKnot):
        even_expansion(Fraction(1, 4))
    with pytest.raises(InvalidFraction):
        even_expansion(Fraction(3))


def test_normalize_examples():
    # b(3,1) is the mirror of b(3,2): 1 is not in {2, 2^-1 = 2}
    assert normalize(3, 1) == TwoBridgeKnot(3, 2, mirrored=True)
    assert normalize(3, 2) == TwoBridgeKnot(3, 2)
    assert normalize(65, 18).even_cf.terms == (4, -2, -2, 4)
    assert normalize(65, 47) == mirror(normalize(65, 18)) == normalize(65, 18)
    assert normalize(7, 5) == mirror(normalize(7, 2))
    assert mirror(normalize(7, 2)).even_cf.terms == tuple(-a for a in normalize(7, 2).even_cf.terms)
    assert str(normalize(3, 1)) == "b(3,2)*"
    assert normalize(-3, -2) == normalize(3, 2)


@pytest.mark.parametrize("p, q, exc", [(4, 2, NotAKnot), (8, 3, NotAKnot), (9, 3, InvalidFraction), (1, 0, InvalidFraction)])
def test_normalize_rejects(p, q, exc):
    with pytest.raises(exc):
        normalize(p, q)


def test_regular_and_positive_cf():
    assert regular_cf(65, 18).terms == (3, 1, 1, 1, 1, 3)
    assert eval_cf(positive_cf([4, -2, -2, 4])) == Fraction(18, 65)
    assert positive_cf([2, -2]).terms == (1, 2)
    with pytest.raises(InvalidFraction):
        regular_cf(5, 5)
    with pytest.raises(InvalidCF):
        positive_cf([1])


def test_family_helpers():
    K = TwoBridgeKnot.from_cf(family_cf(2, -1))
    assert family_params(K) == (2, -1)
    assert family_n(normalize(65, 18)) == 1
    assert family_n(mirror(normalize(65, 18))) == 1
    assert family_n(TwoBridgeKnot.from_cf([8, -4, -4, 8])) == 2
    assert family_n(normalize(5, 2)) is None
    with pytest.raises(InvalidCF):
        family_cf(1, -1)


def test_amphichiral():
    assert is_amphichiral(normalize(5, 2))
    assert is_amphichiral(normalize(65, 18))
    assert not is_amphichiral(normalize(3, 2))


@given(knot_pq)
def test_even_expansion_evaluates_back(pq):
    p, q = pq
    e = even_expansion(Fraction(q, p))
    v = eval_cf(e)
    assert v.denominator == p
    assert (v.numerator - q) % p == 0
    assert all(a % 2 == 0 for a in e.terms)
    assert len(e) % 2 == 0


@given(knot_pq)
def test_normalize_is_a_class_function(pq):
    p, q = pq
    K = normalize(p, q)
    cls = canonical_class(p, q)
    assert K.q == min(r for r in cls if r % 2 == 0)
    inv = pow(q, -1, p)
    assert normalize(p, inv) == K
    assert normalize(p, p - q) == mirror(K)
    assert normalize(p, q + 7 * p) == K
    assert mirror(mirror(K)) == K
    # the chirality-carrying expansion names the input residue up to inversion
    r = eval_cf(K.even_cf).numerator % p
    assert r in {q % p, inv}


@given(knot_pq)
def test_even_representatives_share_the_knot(pq):
    K = normalize(*pq)
    reps = even_representatives(K)
    assert 1 <= len(reps) <= 2
    assert all(TwoBridgeKnot.from_cf(e) == K for e in reps)
    assert all(len(e) == len(reps[0]) for e in reps)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=8))
def test_positive_cf_keeps_the_residue(terms):
    v = eval_cf(cf(*terms))
    assume(v.denominator > 1)
    w = eval_cf(positive_cf(terms))
    assert w.denominator == v.denominator and (w.numerator - v.numerator) % v.denominator == 0
