import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from m5index.characters import (
    char_sl2,
    char_sl3,
    dim_sl3,
    dim_sl3_formula,
    gelfand_tsetlin_patterns,
    sl2_decompose,
    sl3_decompose,
)
from m5index.series import ExponentVector, mono

labels = st.tuples(st.integers(0, 4), st.integers(0, 4))


def weyl_images(a1, a2):
    # permutations of (y1, y2, y3) acting on y1^a1 y2^a2 y3^0
    w = (a1, a2, 0)
    out = set()
    for p in [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]:
        v = tuple(w[i] for i in p)
        out.add((v[0] - v[2], v[1] - v[2]))
    return out


def test_fundamental_characters():
    assert char_sl3(1, 0).terms == {mono(a1=1): 1, mono(a2=1): 1, mono(a1=-1, a2=-1): 1}
    assert char_sl3(0, 1).terms == {mono(a1=-1): 1, mono(a2=-1): 1, mono(a1=1, a2=1): 1}


def test_adjoint_has_double_zero_weight():
    c = char_sl3(1, 1)
    assert c[ExponentVector(0, 0, 0, 0)] == 2
    assert dim_sl3(1, 1) == 8


@settings(max_examples=25, deadline=None)
@given(labels)
def test_dimension_formula(ab):
    assert dim_sl3(*ab) == dim_sl3_formula(*ab)


@settings(max_examples=25, deadline=None)
@given(labels)
def test_weyl_invariance(ab):
    c = char_sl3(*ab)
    for e, m in c.terms.items():
        for a1, a2 in weyl_images(e[0], e[1]):
            assert c[ExponentVector(a1, a2, 0, 0)] == m


@settings(max_examples=25, deadline=None)
@given(st.dictionaries(labels, st.integers(-3, 3), max_size=4))
def test_decompose_round_trip(combo):
    poly = {}
    for (a, b), m in combo.items():
        for e, c in char_sl3(a, b).terms.items():
            poly[(e[0], e[1])] = poly.get((e[0], e[1]), 0) + m * c
    assert sl3_decompose(poly) == {k: v for k, v in combo.items() if v}


def test_tensor_product_decomposition():
    prod = char_sl3(1, 0) * char_sl3(1, 0)
    poly = {(e[0], e[1]): c for e, c in prod.terms.items()}
    assert sl3_decompose(poly) == {(2, 0): 1, (0, 1): 1}


def test_decompose_rejects_non_invariant():
    with pytest.raises(ValueError):
        sl3_decompose({(-1, 0): 1})


def test_gt_pattern_count():
    assert sum(1 for _ in gelfand_tsetlin_patterns((2, 1, 0))) == 8


def test_sl2_characters():
    r = (0, 0, 1, -1)
    c = char_sl2(2)
    assert c.terms == {ExponentVector(0, 0, 2, -2): 1, ExponentVector(0, 0, 0, 0): 1,
                       ExponentVector(0, 0, -2, 2): 1}
    assert char_sl2(0, r).terms == {ExponentVector(0, 0, 0, 0): 1}
    assert sl2_decompose({2: 1, 0: 2, -2: 1}) == {2: 1, 0: 1}
    with pytest.raises(ValueError):
        sl2_decompose({1: 1})
    with pytest.raises(ValueError):
        char_sl2(-1)
