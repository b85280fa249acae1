from fractions import Fraction

import pytest

from m5index import formulas as F
from m5index.jets import (
    BundleSummand,
    NotEnumerable,
    UncalibratedConvention,
    WeightConvention,
    all_conventions,
    bundle_spec_for_weight,
    calibrate_conventions,
    calibration_report,
    jet_character,
    summand_blocks,
    summand_character,
)
from m5index.series import ExponentVector, euler_expand


@pytest.fixture(scope="module")
def conv():
    return calibrate_conventions(4)


def test_search_space_size():
    assert len(all_conventions()) == 48


def test_calibration_is_unique(conv):
    rep = calibration_report(4)
    assert len(rep.matches) == 1
    assert conv.key() == (1, 1, 1, 1, 1)
    assert len(rep.rejected) == 47


def test_central_extension_breaks_f1():
    assert calibration_report(4).central_extension_matches_f1 is False


def test_uncalibrated_convention_is_refused():
    with pytest.raises(UncalibratedConvention):
        jet_character(bundle_spec_for_weight(0), WeightConvention(), 3)


def test_reversed_jets_are_not_enumerable():
    c = WeightConvention(jet_sign=-1, calibrated=True)
    with pytest.raises(NotEnumerable):
        jet_character(bundle_spec_for_weight(0), c, 3)


@pytest.mark.parametrize("k", [-1, 0, 1, 2, 3, 4])
def test_oracle_matches_gk(conv, k):
    assert jet_character(bundle_spec_for_weight(k), conv, 6) == euler_expand(F.single_particle_g(k), 6)


def test_bundle_ranks():
    ranks = [s.rank for s in bundle_spec_for_weight(2)]
    assert ranks == [9, 5, 2, 12]
    with pytest.raises(ValueError):
        BundleSummand(0, "normal", 0)
    with pytest.raises(F.InvalidWeight):
        bundle_spec_for_weight(-2)


def test_coordinate_weights(conv):
    cw = conv.coordinate_weights()
    assert cw["z1"] == ExponentVector(-1, 0, 0, -2)
    assert cw["w1"] == ExponentVector(0, 0, 1, 2)
    assert cw["w2"] == ExponentVector(0, 0, -1, 4)


def test_single_summand_has_sign_from_parity(conv):
    s = summand_character(BundleSummand(0, "trivial", Fraction(-1, 2), odd=True), conv, 4)
    assert all(c == -1 for c in s.terms.values())


@pytest.mark.parametrize("k", [1, 2, 3])
def test_blocks_are_single_sl2_multiplets(conv, k):
    # each summand contributes only chi_a(r) multiplets, a its sl(2) weight, with the parity sign
    for summand, blocks in summand_blocks(k, conv, 8):
        sign = -1 if summand.odd else 1
        for mults in blocks.values():
            assert set(mults) == {summand.sl2_weight}
            assert all(m * sign > 0 for m in mults.values())
