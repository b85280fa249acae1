"""Catalogue of single-particle and full indices as Euler expressions.

The output of :func:`index_chi` is the local character of the Lie algebra
chains of the weight-truncated algebra ``G_N`` (``reduced=False``) or of its
center-of-mass-free quotient (``reduced=True``).  Its identification with the
superconformal index of the six-dimensional (2,0) theory of type ``A_{N-1}``
(or ``gl(N)``) is conjectural.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from .characters import char_sl2, char_sl3
from .frames import ZW_FRAME, euler_in_frame, fm, limit_zero
from .plethystic import pexp
from .series import (
    ONE,
    EulerExpr,
    ExponentVector,
    SeriesError,
    TruncatedSeries,
    euler_expand,
    laurent,
    mono,
    to_order2,
)


class InvalidWeight(SeriesError):
    pass


# r = q^(-1/2) y, the argument of every sl(2) character below
R = ExponentVector(0, 0, 1, -1)


@dataclass(frozen=True)
class TheorySpec:
    """``N`` fivebranes; ``reduced`` drops the center-of-mass summand ``g_{-1}``."""

    N: int
    reduced: bool = False

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be a positive integer")

    @property
    def label(self) -> str:
        return f"A{self.N - 1}" if self.reduced else f"gl{self.N}"


def _q(c2: int) -> TruncatedSeries:
    return laurent({ExponentVector(0, 0, 0, c2): 1})


def denominator_factors():
    """Monomials ``y1 q, y2 q, y3 q`` of the common denominator ``d``."""
    return [ExponentVector(1, 0, 0, 2), ExponentVector(0, 1, 0, 2), ExponentVector(-1, -1, 0, 2)]


def denominator_d() -> EulerExpr:
    """``d = (1 - y1 q)(1 - y2 q)(1 - y3 q)``, returned as the expression ``1/d``."""
    return EulerExpr(1, denominator_factors())


def single_particle_f1() -> EulerExpr:
    """Abelian single-particle index, built from its y-frame form."""
    chi01 = char_sl3(0, 1)
    num = (laurent({mono(b=1, q=1): 1, mono(b=-1, q=2): 1})
           - chi01 * _q(4)
           + _q(6))
    return EulerExpr(num, denominator_factors())


def single_particle_f1_t_frame() -> EulerExpr:
    """The same index written term by term in ``(t1, t2, r, q)``."""
    h = Fraction(3, 2)
    num = {
        fm(r=1, q=h): 1, fm(r=-1, q=h): 1,
        fm(t1=1, q=2): -1, fm(t1=-1, t2=1, q=2): -1, fm(t2=-1, q=2): -1,
        fm(q=3): 1,
    }
    dens = [fm(t1=-1, q=1), fm(t1=1, t2=-1, q=1), fm(t2=1, q=1)]
    return euler_in_frame(num, dens, "t")


def _g0_numerator() -> TruncatedSeries:
    chi10, chi01 = char_sl3(1, 0), char_sl3(0, 1)
    y = laurent({mono(b=1): 1})
    yinv_q = laurent({mono(b=-1, q=1): 1})
    return (_q(8) * chi10
            + _q(4) * laurent({mono(b=2): 1, mono(q=1): 1, mono(b=-2, q=2): 1})
            - _q(6) * (y + yinv_q) * chi01)


def _gk_numerator(k: int) -> TruncatedSeries:
    # all q-powers written in doubled units
    chi10, chi01 = char_sl3(1, 0), char_sl3(0, 1)
    t1 = _q(2 + 3 * k) * char_sl2(k, R) * chi10
    t2 = _q(3 * k) * char_sl2(k + 2, R)
    t3 = _q(3 * (k + 1)) * char_sl2(k - 1, R)
    t4 = _q(-2 + 3 * (k + 1)) * char_sl2(k + 1, R) * chi01
    return _q(6) * (t1 + t2 - t3 - t4)


def single_particle_g(k: int) -> EulerExpr:
    """Single-particle character of the weight-``k`` summand, ``k >= -1``."""
    if k < -1:
        raise InvalidWeight(f"weight {k} < -1")
    if k == -1:
        return single_particle_f1()
    if k == 0:
        return EulerExpr(_g0_numerator(), denominator_factors())
    return EulerExpr(_gk_numerator(k), denominator_factors())


def single_particle_fN(spec: TheorySpec) -> EulerExpr:
    """``sum g_k`` over ``k = -1 .. N-2`` (from ``k = 0`` when reduced), over ``d``."""
    start = 0 if spec.reduced else -1
    num = TruncatedSeries.zero()
    for k in range(start, spec.N - 1):
        num = num + single_particle_g(k).numerator
    return EulerExpr(num, denominator_factors())


def index_chi(spec: TheorySpec, order) -> TruncatedSeries:
    f = single_particle_fN(spec)
    return pexp(euler_expand(f, order))


def sugra_single_particle() -> EulerExpr:
    """Supergravity single-particle index in the y-frame."""
    chi10, chi01 = char_sl3(1, 0), char_sl3(0, 1)
    num = (_q(8) * chi10 - _q(4) * chi01
           + (TruncatedSeries.one() - _q(6)) * laurent({mono(b=1, q=1): 1, mono(b=-1, q=2): 1}))
    dens = denominator_factors() + [mono(b=1, q=1), mono(b=-1, q=2)]
    return EulerExpr(num, dens)


def sugra_single_particle_t_frame() -> EulerExpr:
    h = Fraction(3, 2)
    num = {
        fm(t1=-1, q=4): 1, fm(t1=1, t2=-1, q=4): 1, fm(t2=1, q=4): 1,
        fm(t1=1, q=2): -1, fm(t1=-1, t2=1, q=2): -1, fm(t2=-1, q=2): -1,
        fm(r=1, q=h): 1, fm(r=-1, q=h): 1,
        fm(r=1, q=h + 3): -1, fm(r=-1, q=h + 3): -1,
    }
    dens = [fm(t1=-1, q=1), fm(t2=1, q=1), fm(t1=1, t2=-1, q=1), fm(r=1, q=h), fm(r=-1, q=h)]
    return euler_in_frame(num, dens, "t")


def index_sugra(order) -> TruncatedSeries:
    return pexp(euler_expand(sugra_single_particle(), order))


def geometric_S() -> EulerExpr:
    """``S(y, q) = 1 / ((1 - q y)(1 - q^2 y^-1))``."""
    return EulerExpr(1, [mono(b=1, q=1), mono(b=-1, q=2)])


def sl2_tower(kmax: int, order) -> TruncatedSeries:
    """``sum_{k=0..kmax} q^(3k/2) chi_k(q^(-1/2) y)`` truncated below ``order``."""
    order2 = to_order2(order)
    total = TruncatedSeries.zero(order2)
    for k in range(kmax + 1):
        total = total + (_q(3 * k) * char_sl2(k, R)).truncate(order2)
    return total


# -- zw-frame forms and the minimal reduction ---------------------------------

def p_poly(k: int) -> EulerExpr:
    """Complete homogeneous polynomial ``sum_{i+j=k} w1^i w2^j`` (zero for ``k < 0``)."""
    if k < 0:
        return EulerExpr(0)
    return euler_in_frame({fm(w1=i, w2=k - i): 1 for i in range(k + 1)}, [], "zw")


def _zw(**exps) -> TruncatedSeries:
    return laurent({ZW_FRAME.to_canonical(exps): 1})


def gk_zw_form(k: int, corrected: bool = False) -> EulerExpr:
    """``g_k`` (``k >= 1``) written in ``z_i, w_a`` over ``(1-z1)(1-z2)(1-z3)``.

    The default is the display as usually quoted, with ``z1 z2 z3 p_{k-1}``
    in the third numerator term.  That expression is *not* equal to ``g_k``:
    since ``q^3 = z1 z2 z3``, the ``chi_{k-1}`` block of ``g_k`` is
    ``(z1 z2 z3)^2 p_{k-1}``, and the quoted form is off by
    ``z1 z2 z3 (1 - z1 z2 z3) p_{k-1} / ((1-z1)(1-z2)(1-z3))``.
    ``corrected=True`` uses the squared factor and equals ``g_k`` exactly.
    Both versions have the same ``z3, w2 -> 0`` limit.
    """
    if k < 1:
        raise InvalidWeight("the zw form is stated for k >= 1")
    z123 = _zw(z1=1, z2=1, z3=1)
    zsum = _zw(z1=1) + _zw(z2=1) + _zw(z3=1)
    zpairs = _zw(z1=1, z2=1) + _zw(z2=1, z3=1) + _zw(z1=1, z3=1)
    p = lambda j: p_poly(j).numerator  # noqa: E731
    third = z123 * z123 if corrected else z123
    num = z123 * p(k) * zsum + p(k + 2) - third * p(k - 1) - p(k + 1) * zpairs
    dens = [ZW_FRAME.to_canonical({"z1": 1}), ZW_FRAME.to_canonical({"z2": 1}),
            ZW_FRAME.to_canonical({"z3": 1})]
    return EulerExpr(num, dens)


def g_minus1_limit() -> EulerExpr:
    """``(w1 - z1 z2) / ((1 - z1)(1 - z2))``."""
    num = _zw(w1=1) - _zw(z1=1, z2=1)
    return EulerExpr(num, [ZW_FRAME.to_canonical({"z1": 1}), ZW_FRAME.to_canonical({"z2": 1})])


def g_min(k: int) -> EulerExpr:
    """``z3, w2 -> 0`` limit of ``g_k``."""
    return limit_zero(single_particle_g(k))


def minimal_single_particle(N: int) -> EulerExpr:
    """``sum_{k=-1}^{N-2} w1^(k+1) g_{-1}(z1, z2, w1)``."""
    g = g_minus1_limit()
    num = TruncatedSeries.zero()
    for k in range(-1, N - 1):
        num = num + _zw(w1=k + 1) * g.numerator
    return EulerExpr(num, g.denominators)


def minimal_index(N: int, order) -> TruncatedSeries:
    """PExp form of the minimally reduced index.

    In the reduced variables ``z1, z2, w1`` each carries exactly one power of
    q, so the q-order here is the total degree.
    """
    if N < 1:
        raise ValueError("N must be positive")
    return pexp(euler_expand(minimal_single_particle(N), order))


def minimal_product_factors(N: int, order):
    """Numerator and denominator monomials of the double product, below ``order``.

    Returns ``(numerator_monomials, denominator_monomials, excluded)`` where
    ``excluded`` lists unit factors that were skipped (expected empty).
    """
    order2 = to_order2(order)
    nums, dens, excluded = [], [], []
    for a in range(1, N + 1):
        for b in range(order2):
            for c in range(order2):
                mn = ZW_FRAME.to_canonical({"w1": a - 1, "z1": b + 1, "z2": c + 1})
                md = ZW_FRAME.to_canonical({"w1": a, "z1": b, "z2": c})
                for m, bucket in ((mn, nums), (md, dens)):
                    if m == ONE:
                        excluded.append((a, b, c))
                    elif m[3] < order2:
                        bucket.append(m)
    return nums, dens, excluded


def minimal_index_product(N: int, order) -> TruncatedSeries:
    """Truncated expansion of ``prod_a prod_{b,c} (1 - w1^(a-1) z1^(b+1) z2^(c+1)) / (1 - w1^a z1^b z2^c)``."""
    order2 = to_order2(order)
    nums, dens, excluded = minimal_product_factors(N, order)
    if excluded:
        raise SeriesError(f"unit factors in the product: {excluded}")
    num = TruncatedSeries.one()
    for m in nums:
        num = (num * TruncatedSeries({ONE: 1, m: -1})).truncate(order2)
    return euler_expand(EulerExpr(TruncatedSeries(num.terms), dens), order)


CATALOG_LABELS = ("f1", "g(k)", "fN", "f_sugra", "S", "d", "p(k)", "gk_zw", "g_min(k)")


def catalog_entry(label: str, k: int = 0, spec: TheorySpec = None) -> EulerExpr:
    builders: Dict[str, object] = {
        "f1": single_particle_f1,
        "g(k)": lambda: single_particle_g(k),
        "fN": lambda: single_particle_fN(spec),
        "f_sugra": sugra_single_particle,
        "S": geometric_S,
        "d": denominator_d,
        "p(k)": lambda: p_poly(k),
        "gk_zw": lambda: gk_zw_form(k),
        "g_min(k)": lambda: g_min(k),
    }
    return builders[label]()


__all__ = [
    "InvalidWeight", "TheorySpec", "denominator_d", "denominator_factors", "single_particle_f1",
    "single_particle_f1_t_frame", "single_particle_g", "single_particle_fN", "index_chi",
    "sugra_single_particle", "sugra_single_particle_t_frame", "index_sugra", "geometric_S",
    "sl2_tower", "p_poly", "gk_zw_form", "g_minus1_limit", "g_min", "minimal_single_particle",
    "minimal_index", "minimal_index_product", "minimal_product_factors", "catalog_entry",
    "CATALOG_LABELS", "x_graded_index",
]


# -- x-frame grading -----------------------------------------------------------

def _x_regrade(D: int):
    # G = D * (x-frame q exponent) + (x exponent), stored in the q slot (doubled)
    def fwd(e):
        return ExponentVector(e[0], e[1], e[2], D * e[3] - 2 * (D - 1) * e[2])

    def back(e):
        c2, rem = divmod(e[3] + 2 * (D - 1) * e[2], D)
        if rem:
            raise SeriesError("regraded exponent does not come from the lattice")
        return ExponentVector(e[0], e[1], e[2], c2)

    return fwd, back


def x_graded_index(f: EulerExpr, q_order: int, x_degree: int, plethystic: bool = True) -> TruncatedSeries:
    """``PExp[f]`` with every x-frame coefficient of ``q^n x^j`` exact for ``n < q_order``, ``j < x_degree``.

    With ``x = q y`` the coefficient of a fixed power of the x-frame ``q`` is
    an infinite series in ``x``.  Expanding in the combined grading
    ``G = x_degree * n + j`` keeps every factor strictly positive (checked),
    so truncating at ``G < x_degree * q_order`` computes the requested block
    exactly.  The result is an exact Laurent polynomial holding only those
    coefficients.  ``plethystic=False`` returns the same block of ``f`` itself.
    """
    D = x_degree
    fwd, back = _x_regrade(D)
    g = f.map_exponents(fwd)
    for m in g.numerator.terms:
        if m[3] <= 0:
            raise SeriesError(f"numerator monomial {tuple(m)} has non-positive x-grading")
    for m in g.denominators:
        if m[3] <= 0:
            raise SeriesError(f"denominator monomial {tuple(m)} has non-positive x-grading")
    full = euler_expand(g, D * q_order)
    if plethystic:
        full = pexp(full)
    return _x_block(full, back, q_order, D)


def _x_block(full: TruncatedSeries, back, q_order: int, D: int) -> TruncatedSeries:
    out = {}
    for e, c in full.terms.items():
        e0 = back(e)
        j = e0[2]
        n2 = e0[3] - 2 * j
        if j < D and n2 < 2 * q_order:
            out[e0] = c
    return TruncatedSeries(out)
