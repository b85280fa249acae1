from fractions import Fraction

import pytest
from hypothesis import given, settings

from m5index.frames import (
    FRAMES,
    SCHUR_T,
    euler_in_frame,
    fm,
    frame_convert,
    get_frame,
    limit_zero,
    schur_limit,
    specialize,
    zw_degree,
)
from m5index.render import render_euler, render_monomial
from m5index.series import (
    DivergentLimit,
    EulerExpr,
    ExponentVector,
    NonLatticeImage,
    PoleAtSpecialization,
    TruncatedSeries,
    euler_expand,
    laurent,
    mono,
)

from strategies import exponents


@settings(max_examples=100, deadline=None)
@given(exponents(-8, 8))
def test_square_frames_round_trip(e):
    for name in ("y", "t", "x"):
        f = FRAMES[name]
        assert f.to_canonical(f.from_canonical(e)) == e


def test_t_frame_dictionary():
    t = get_frame("t")
    assert t.to_canonical({"t1": -1}) == mono(a1=1)
    assert t.to_canonical({"t1": 1, "t2": -1}) == mono(a2=1)
    assert t.to_canonical({"t2": 1}) == mono(a1=-1, a2=-1)
    assert t.to_canonical({"r": 1, "q": Fraction(1, 2)}) == mono(b=1)


def test_x_frame_is_qy():
    assert get_frame("x").to_canonical({"x": 1}) == mono(b=1, q=1)
    assert get_frame("x").from_canonical(mono(b=2, q=3)) == (0, 0, 2, 1)


def test_zw_constraint_and_degree():
    zw = get_frame("zw")
    z123 = zw.to_canonical({"z1": 1, "z2": 1, "z3": 1})
    w12 = zw.to_canonical({"w1": 1, "w2": 1})
    assert z123 == w12
    assert zw_degree(zw.to_canonical({"z3": 1})) == 1
    assert zw_degree(zw.to_canonical({"w2": 1})) == 1
    assert zw_degree(zw.to_canonical({"z1": 3, "w1": 2})) == 0


def test_zw_presentation_round_trip():
    zw = get_frame("zw")
    for exps in [(1, 0, 0, 2, 0), (0, 0, 1, 0, 0), (2, 1, 0, 0, 1), (0, 0, 0, 3, 0)]:
        e = zw.to_canonical(exps)
        assert zw.to_canonical(zw.from_canonical(e)) == e


def test_non_lattice_points_are_rejected():
    with pytest.raises(NonLatticeImage):
        get_frame("zw").from_canonical(mono(q=1))
    with pytest.raises(NonLatticeImage):
        get_frame("y").to_canonical({"q": Fraction(1, 3)})


def test_frame_convert_maps_dicts_and_euler_data():
    num = {(0, 0, 1, 1): 1}  # t-frame: r q
    out = frame_convert(num, "t", "y")
    assert out == {(0, 0, 1, Fraction(1, 2)): 1}
    _, d2 = frame_convert((num, [(0, 0, 0, 1)]), "t", "x")
    assert d2 == [(0, 0, 0, 1)]


def test_unknown_frame():
    with pytest.raises(KeyError):
        get_frame("w")


def test_schur_limit_of_a_geometric_factor():
    e = EulerExpr(laurent({mono(b=1, q=1): 1}), [mono(b=1, q=1), mono(a1=1, q=1)])
    s = schur_limit(e)
    assert s == EulerExpr(laurent({mono(q=1): 1}), [mono(q=1), mono(a1=1, q=1)])


def test_specialize_pole_is_reported():
    with pytest.raises(PoleAtSpecialization):
        specialize(EulerExpr(1, [mono(b=1)]), {"y": 1})


def test_specialize_truncated_series_keeps_grading():
    s = TruncatedSeries({mono(a1=1, b=2, q=1): 3}, 4)
    assert specialize(s, {"y": 1}) == TruncatedSeries({mono(a1=1, q=1): 3}, 4)


def test_t_frame_schur_specialization():
    # (r q^(3/2)) / (1 - t2 q) -> q^2 / (1 - q)
    e = euler_in_frame({fm(r=1, q=Fraction(3, 2)): 1}, [fm(t2=1, q=1)], "t")
    got = specialize(e, SCHUR_T, "t")
    assert got == EulerExpr(laurent({mono(q=2): 1}), [mono(q=1)])


def test_limit_zero_drops_positive_degree():
    zw = get_frame("zw")
    z1, z3, w1 = (zw.to_canonical({v: 1}) for v in ("z1", "z3", "w1"))
    e = EulerExpr(laurent({w1: 1, z3: 1}), [z1, z3])
    assert limit_zero(e) == EulerExpr(laurent({w1: 1}), [z1])


def test_limit_zero_divergence():
    zw = get_frame("zw")
    bad = zw.to_canonical({"z1": 1, "z3": -1})
    with pytest.raises(DivergentLimit):
        limit_zero(EulerExpr(laurent({bad: 1})))


def test_render_in_frames():
    e = mono(a1=1, b=1, q=Fraction(3, 2))
    assert render_monomial(e, "y") == "y1*y*q^(3/2)"
    assert render_monomial(mono(a1=-1, a2=-1), "y") == "y3"
    assert render_monomial(mono(b=1, q=1), "x") == "x"
    d = EulerExpr(1, [mono(q=1)])
    assert render_euler(d, "t") == "(1)/((1-q))"


def test_euler_expand_is_frame_independent():
    e = euler_in_frame({fm(r=1, q=Fraction(3, 2)): 1}, [fm(t1=1, q=1)], "t")
    s = euler_expand(e, 4)
    assert s[ExponentVector(0, 0, 1, 2)] == 1
