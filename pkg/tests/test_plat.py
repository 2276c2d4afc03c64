import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from oracles import numpy_signature
from twobridge.errors import InvalidCF, MultiComponent
from twobridge.jones import jones_pd, jones_two_bridge
from twobridge.plat import (
    POSITIVE_OVER,
    Diagonal,
    Twist,
    build_plat,
    knot_plat,
    signature_traczyk,
    signed_diagram,
    twist_sequence,
)
from twobridge.rational import eval_cf, mirror, normalize
from twobridge.seifert import SeifertData, signature_seifert

knot_pq = st.integers(1, 150).map(lambda k: 2 * k + 1).flatmap(
    lambda p: st.tuples(st.just(p), st.integers(1, p - 1).filter(lambda q: math.gcd(p, q) == 1))
)
positive_terms = st.lists(st.integers(1, 5), min_size=1, max_size=6)


def test_twist_sequence_order():
    assert twist_sequence([3, 1, 2]) == [
        (Twist.HORIZONTAL, 2), (Twist.VERTICAL, 1), (Twist.HORIZONTAL, 3),
    ]
    assert POSITIVE_OVER == {Twist.HORIZONTAL: Diagonal.NW_SE, Twist.VERTICAL: Diagonal.NW_SE}


def test_trefoil_diagram():
    D = knot_plat(normalize(3, 2))
    assert D.cf.terms == (1, 2)
    assert D.diagram.size == 3 and D.component_count == 1
    assert D.is_alternating()
    assert D.all_A_circles() == 3 and D.positive_crossings() == 0
    assert D.signature_traczyk() == 2 == signature_seifert(normalize(3, 2))
    assert len(D.pd_lines()) == 3 and D.pd_lines()[0].startswith("X[")


def test_errors():
    with pytest.raises(InvalidCF):
        build_plat([2, -1])
    hopf = build_plat([2])
    assert hopf.component_count == 2
    with pytest.raises(MultiComponent):
        hopf.signature_traczyk()
    with pytest.raises(MultiComponent):
        hopf.positive_crossings()


@given(positive_terms)
def test_pd_code_is_well_formed(terms):
    D = build_plat(terms).diagram
    assert D.size == sum(terms)
    counts = Counter(e for x in D.crossings for e in x.edges)
    assert set(counts.values()) == {2}
    assert len(counts) == 2 * D.size
    assert D.is_alternating()
    # a 4-plat closes to one component for odd p and two for even p
    v = eval_cf(build_plat(terms).cf)
    assert D.components() == (1 if v.denominator % 2 else 2)


@given(knot_pq)
def test_traczyk_equals_seifert(pq):
    K = normalize(*pq)
    S = SeifertData.of(K)
    assert signature_traczyk(K) == signature_seifert(S) == numpy_signature(S.matrix())
    assert signature_traczyk(mirror(K)) == -signature_seifert(S)


@given(knot_pq)
def test_signed_diagram_is_the_same_knot(pq):
    K = normalize(*pq)
    if sum(abs(a) for a in K.even_cf.terms) > 24:
        return
    D = signed_diagram(K.even_cf.terms)
    assert D.components() == 1
    assert jones_pd(D) == jones_two_bridge(K).V


@given(positive_terms)
def test_switch_and_mirror(terms):
    D = build_plat(terms).diagram
    for i in range(D.size):
        assert D.switch(i).switch(i) == D
        assert D.switch(i).writhe() == D.writhe() - 2 * D.crossings[i].sign
    M = D.mirror()
    assert M.writhe() == -D.writhe()
    assert M.all_A_circles() == D.all_B_circles()


def test_smoothing_changes_components():
    D = knot_plat(normalize(5, 2)).diagram
    for i in range(D.size):
        assert D.smooth(i).components() == 2
        assert D.smooth(i, use_a=True).size == D.size - 1
    with pytest.raises(ValueError):
        D.smooth(0, oriented=False)
