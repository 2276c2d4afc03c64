import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from oracles import knotinfo, numpy_signature, sympy_alexander
from twobridge.errors import DegenerateAlexander, InvalidCF
from twobridge.laurent import LaurentPoly, T, T_INV
from twobridge.rational import mirror, normalize
from twobridge.seifert import (
    SeifertData,
    alexander_poly,
    congruence_signature,
    conway_coeffs,
    conway_poly,
    conway_to_alexander,
    determinant,
    genus_alternating,
    is_fibered_alternating,
    signature_seifert,
)

Z = LaurentPoly({2: 1})
knot_pq = st.integers(1, 100).map(lambda k: 2 * k + 1).flatmap(
    lambda p: st.tuples(st.just(p), st.integers(1, p - 1).filter(lambda q: math.gcd(p, q) == 1))
)


def test_small_knots():
    trefoil = normalize(3, 2)
    assert SeifertData.of(trefoil).diag == (1, 1)
    assert conway_poly(trefoil) == 1 + Z * Z
    assert alexander_poly(trefoil) == T_INV - 1 + T
    assert signature_seifert(trefoil) == 2
    assert signature_seifert(mirror(trefoil)) == -2
    fig8 = normalize(5, 2)
    assert conway_poly(fig8) == 1 - Z * Z
    assert signature_seifert(fig8) == 0
    assert determinant(fig8) == 5


def test_seifert_matrix_shape():
    S = SeifertData.from_even_cf([4, -2, -2, 4])
    assert S.diag == (2, 1, -1, -2)
    assert S.matrix() == [[2, 1, 0, 0], [0, 1, 1, 0], [0, 0, -1, 1], [0, 0, 0, -2]]
    assert S.genus == 2
    assert conway_coeffs(conway_poly(S)) == {0: 1, 4: 4}


def test_invalid_inputs():
    with pytest.raises(InvalidCF):
        SeifertData.from_even_cf([2, 3])
    with pytest.raises(InvalidCF):
        SeifertData((1,))
    with pytest.raises(DegenerateAlexander):
        genus_alternating(LaurentPoly.constant(1))


def test_congruence_signature_zero_diagonal():
    assert congruence_signature([[0, 1], [1, 0]]) == 0
    assert congruence_signature([[0, 1, 0], [1, 0, 0], [0, 0, -3]]) == -1
    assert congruence_signature([[0, 0], [0, 0]]) == 0


def test_against_knotinfo():
    for e in knotinfo():
        K = normalize(e["p"], e["q"])
        S = SeifertData.of(K)
        delta = alexander_poly(S)
        assert delta.coeff_list() == e["alexander"] or delta.coeff_list() == [-c for c in e["alexander"]], e["name"]
        assert signature_seifert(S) == e["signature"], e["name"]
        assert determinant(S) == e["determinant"] == e["p"], e["name"]
        assert genus_alternating(delta) == e["genus"], e["name"]
        assert is_fibered_alternating(delta) == e["fibered"], e["name"]


@settings(max_examples=40)
@given(knot_pq)
def test_alexander_matches_symbolic_determinant(pq):
    S = SeifertData.of(normalize(*pq))
    assume(S.genus <= 8)  # keeps the exact determinants cheap
    want = sympy_alexander(S.matrix())
    got = alexander_poly(S)
    assert {int(e): c for e, c in got.items()} == want


@given(knot_pq)
def test_signature_matches_eigenvalues(pq):
    K = normalize(*pq)
    S = SeifertData.of(K)
    sig = signature_seifert(S)
    assert sig == numpy_signature(S.matrix())
    assert sig == congruence_signature(S.symmetrized())
    assert signature_seifert(mirror(K)) == -sig or sig == 0


@given(knot_pq)
def test_conway_alexander_consistency(pq):
    K = normalize(*pq)
    nabla = conway_poly(K)
    delta = conway_to_alexander(nabla)
    assert delta.is_symmetric()
    assert nabla.evaluate(0) == 1
    assert all(int(e) % 2 == 0 for e, _ in nabla.items())
    assert genus_alternating(delta) == SeifertData.of(K).genus == len(K.even_cf) // 2


@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=5, max_size=5))
def test_congruence_signature_random_forms(rows):
    M = np.array(rows)
    S = (M + M.T).tolist()
    assume(abs(np.linalg.det(np.array(S, dtype=float))) > 1e-6)
    half = (np.array(S) / 2.0).tolist()
    assert congruence_signature(S) == numpy_signature(half)
