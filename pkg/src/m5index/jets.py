"""Brute-force character oracle: enumerate jets of graded bundles on the formal 3-disk.

A summand ``S^a (C^2) (x) slot (x) K^p`` (even or odd) contributes one
fugacity monomial per sl(2) weight vector, per slot weight vector and per jet
``d_z1^n1 d_z2^n2 d_z3^n3``.  How these pieces are weighted (orientation of
the jets and of the fiber, sign of the canonical-bundle twist, the overall
shift coming from top forms, and the parity sign) is a
:class:`WeightConvention`; :func:`calibrate_conventions` picks the unique one
that reproduces ``g_{-1}`` and ``g_0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from .characters import sl2_decompose
from .formulas import InvalidWeight, single_particle_g
from .series import (
    ExponentVector,
    SeriesError,
    TruncatedSeries,
    euler_expand,
    mono_mul,
    mono_pow,
    to_order2,
)

SLOTS = ("trivial", "tangent", "cotangent")

# fugacity of d/dz_i under the standard orientation: y_i q
JET_WEIGHTS = (ExponentVector(1, 0, 0, 2), ExponentVector(0, 1, 0, 2), ExponentVector(-1, -1, 0, 2))
R = ExponentVector(0, 0, 1, -1)


class CalibrationFailed(SeriesError):
    pass


class UncalibratedConvention(SeriesError):
    pass


class NotEnumerable(SeriesError):
    """The jets do not have bounded q-weight under the convention."""


@dataclass(frozen=True)
class BundleSummand:
    sl2_weight: int
    slot: str
    canonical_power: Fraction
    odd: bool = False

    def __post_init__(self):
        if self.slot not in SLOTS:
            raise ValueError(f"unknown slot {self.slot!r}")
        if self.sl2_weight < 0:
            raise ValueError("sl(2) weight must be non-negative")
        object.__setattr__(self, "canonical_power", Fraction(self.canonical_power))

    @property
    def rank(self) -> int:
        return (self.sl2_weight + 1) * (1 if self.slot == "trivial" else 3)


@dataclass(frozen=True)
class BundleSpec:
    summands: Tuple[BundleSummand, ...]
    label: str = ""

    def __iter__(self):
        return iter(self.summands)


def bundle_spec_for_weight(k: int) -> BundleSpec:
    """Graded bundle whose jets give ``g_k``."""
    S = BundleSummand
    if k < -1:
        raise InvalidWeight(f"weight {k} < -1")
    if k == -1:
        parts = (S(1, "trivial", Fraction(1, 2)), S(0, "trivial", 0), S(0, "cotangent", 0, odd=True))
    elif k == 0:
        parts = (S(0, "tangent", 0), S(2, "trivial", 0), S(1, "cotangent", Fraction(-1, 2), odd=True))
    else:
        even_p, odd_p = Fraction(-k, 2), Fraction(-(k + 1), 2)
        parts = (S(k, "tangent", even_p), S(k + 2, "trivial", even_p),
                 S(k - 1, "trivial", odd_p, odd=True), S(k + 1, "cotangent", odd_p, odd=True))
    return BundleSpec(parts, label=f"V({k})")


@dataclass(frozen=True)
class WeightConvention:
    """Sign choices that turn bundle data into fugacity monomials.

    ``jet_sign``: +1 gives the jet ``d_zi`` the weight ``y_i q``, -1 its inverse.
    ``fiber_sign``: +1 gives tangent vectors ``y_i q`` and covectors the inverse.
    ``k_sign``: the fiber of ``K^p`` carries ``q^(-3 p k_sign)``.
    ``serre``: overall factor ``q^(3 serre)``.
    ``global_sign``: sign of even summands; odd summands get the opposite.
    """

    jet_sign: int = 1
    fiber_sign: int = 1
    k_sign: int = 1
    serre: int = 1
    global_sign: int = 1
    calibrated: bool = False

    def key(self) -> Tuple[int, int, int, int, int]:
        return (self.jet_sign, self.fiber_sign, self.k_sign, self.serre, self.global_sign)

    def jet_weights(self) -> Tuple[ExponentVector, ...]:
        return tuple(mono_pow(w, self.jet_sign) for w in JET_WEIGHTS)

    def coordinate_weights(self) -> Dict[str, ExponentVector]:
        """Fugacities of the coordinates: ``z_i`` is dual to ``d_zi``; ``w_a`` span the K^(1/2) doublet."""
        out = {f"z{i + 1}": mono_pow(w, -1) for i, w in enumerate(self.jet_weights())}
        doublet = _fiber_monomials(BundleSummand(1, "trivial", Fraction(1, 2)), self)
        out["w1"], out["w2"] = max(doublet, key=lambda m: m[2]), min(doublet, key=lambda m: m[2])
        return out


def _slot_monomials(slot: str, conv: WeightConvention) -> List[ExponentVector]:
    if slot == "trivial":
        return [ExponentVector(0, 0, 0, 0)]
    s = conv.fiber_sign if slot == "tangent" else -conv.fiber_sign
    return [mono_pow(w, s) for w in JET_WEIGHTS]


def _fiber_monomials(summand: BundleSummand, conv: WeightConvention) -> List[ExponentVector]:
    twist2 = -3 * summand.canonical_power * conv.k_sign * 2 + 6 * conv.serre
    if Fraction(twist2).denominator != 1:
        raise SeriesError("canonical twist is not a half-integer power of q")
    base = ExponentVector(0, 0, 0, int(twist2))
    out = []
    a = summand.sl2_weight
    for i in range(a + 1):
        u = mono_mul(base, mono_pow(R, a - 2 * i))
        for s in _slot_monomials(summand.slot, conv):
            out.append(mono_mul(u, s))
    return out


def _jets_below(order2: int, floor2: int, conv: WeightConvention):
    """Jet multi-indices whose weight keeps the total q-exponent below ``order2``."""
    jw = conv.jet_weights()
    step = jw[0][3]
    if step <= 0:
        raise NotEnumerable("jets carry non-positive q-weight: infinitely many terms per q-power")
    nmax = max(-1, (order2 - 1 - floor2) // step)
    for n in range(nmax + 1):
        for n1 in range(n + 1):
            for n2 in range(n - n1 + 1):
                yield n1, n2, n - n1 - n2


def summand_character(summand: BundleSummand, conv: WeightConvention, order) -> TruncatedSeries:
    order2 = to_order2(order)
    fiber = _fiber_monomials(summand, conv)
    sign = conv.global_sign * (-1 if summand.odd else 1)
    jw = conv.jet_weights()
    floor2 = min(m[3] for m in fiber)
    acc: Dict[ExponentVector, int] = {}
    for n in _jets_below(order2, floor2, conv):
        jet = ExponentVector(0, 0, 0, 0)
        for w, ni in zip(jw, n):
            jet = mono_mul(jet, mono_pow(w, ni))
        for m in fiber:
            e = mono_mul(m, jet)
            if e[3] < order2:
                acc[e] = acc.get(e, 0) + sign
    return TruncatedSeries(acc, order2)


def jet_character(spec: BundleSpec, conv: WeightConvention, order,
                  central_extension: bool = False) -> TruncatedSeries:
    """Enumerated character of the jets of ``spec`` below ``order``.

    ``central_extension`` adds one even, jet-free direction weighted like the
    trivial summand of ``V(-1)``.
    """
    if not conv.calibrated:
        raise UncalibratedConvention("run calibrate_conventions first, or mark the convention calibrated")
    order2 = to_order2(order)
    total = TruncatedSeries.zero(order2)
    for s in spec:
        total = total + summand_character(s, conv, order2 / Fraction(2))
    if central_extension:
        for m in _fiber_monomials(BundleSummand(0, "trivial", 0), conv):
            total = total + TruncatedSeries({m: conv.global_sign}, order2)
    return total


def all_conventions() -> List[WeightConvention]:
    return [WeightConvention(j, f, k, s, g)
            for j, f, k, s, g in product((1, -1), (1, -1), (1, -1), (-1, 0, 1), (1, -1))]


@dataclass
class CalibrationReport:
    order: Fraction
    matches: List[WeightConvention] = field(default_factory=list)
    rejected: Dict[Tuple[int, ...], str] = field(default_factory=dict)
    central_extension_matches_f1: Optional[bool] = None


def _try(conv: WeightConvention, order) -> Tuple[bool, str]:
    c = WeightConvention(*conv.key(), calibrated=True)
    for k in (-1, 0):
        try:
            got = jet_character(bundle_spec_for_weight(k), c, order)
        except NotEnumerable as exc:
            return False, f"not enumerable: {exc}"
        want = euler_expand(single_particle_g(k), order)
        if got != want:
            return False, f"mismatch with g({k})"
    return True, "match"


def calibration_report(order=5) -> CalibrationReport:
    rep = CalibrationReport(Fraction(to_order2(order), 2))
    for conv in all_conventions():
        ok, why = _try(conv, order)
        if ok:
            rep.matches.append(WeightConvention(*conv.key(), calibrated=True))
        else:
            rep.rejected[conv.key()] = why
    if len(rep.matches) == 1:
        c = rep.matches[0]
        ext = jet_character(bundle_spec_for_weight(-1), c, order, central_extension=True)
        rep.central_extension_matches_f1 = ext == euler_expand(single_particle_g(-1), order)
    return rep


def calibrate_conventions(order=5) -> WeightConvention:
    """The unique convention whose oracle output equals ``g_{-1}`` and ``g_0`` below ``order``."""
    rep = calibration_report(order)
    if len(rep.matches) != 1:
        raise CalibrationFailed(f"{len(rep.matches)} conventions match: {[c.key() for c in rep.matches]}")
    return rep.matches[0]


def sl2_blocks(s: TruncatedSeries, level_limit2: Optional[int] = None) -> Dict[Tuple[int, int, int], Dict[int, int]]:
    """sl(2) content of a series in ``r = q^(-1/2) y``.

    Writing each monomial as ``y1^a1 y2^a2 r^b q^m`` (so ``m = (c2 + b) / 2``),
    returns ``{(a1, a2, 2m): {j: multiplicity of chi_j(r)}}`` for the levels
    with ``2m < level_limit2``.  Those levels must be complete in ``s``.
    """
    groups: Dict[Tuple[int, int, int], Dict[int, int]] = {}
    for e, c in s.terms.items():
        key = (e[0], e[1], e[3] + e[2])
        if level_limit2 is not None and key[2] >= level_limit2:
            continue
        g = groups.setdefault(key, {})
        g[e[2]] = g.get(e[2], 0) + c
    return {key: sl2_decompose(g) for key, g in groups.items()}


def summand_blocks(k: int, conv: WeightConvention, order) -> List[Tuple[BundleSummand, Dict]]:
    """Per summand of ``V(k)``: its sl(2) block decomposition at each level below ``order``.

    A multiplet ``chi_a(r) q^m`` reaches down to ``q^(m - a/2)`` and up to
    ``q^(m + a/2)``, so each summand is expanded ``a/2`` further.
    """
    order2 = to_order2(order)
    out = []
    for s in bundle_spec_for_weight(k):
        ext = Fraction(order2 + s.sl2_weight, 2)
        out.append((s, sl2_blocks(summand_character(s, conv, ext), order2)))
    return out


__all__ = [
    "BundleSummand", "BundleSpec", "WeightConvention", "CalibrationFailed", "UncalibratedConvention",
    "NotEnumerable", "CalibrationReport", "bundle_spec_for_weight",
    "jet_character", "summand_character", "all_conventions", "calibration_report",
    "calibrate_conventions", "sl2_blocks", "summand_blocks", "SLOTS",
]
