"""Plethystic exponential and logarithm of truncated series.

``PExp[f] = exp(sum_n adams(f, n) / n)``.  Fermion signs live in the
coefficients: a term ``-m`` contributes the finite factor ``(1 - m)``.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .series import (
    SeriesError,
    TruncatedSeries,
    _div,
    to_order2,
)


class ConstantTermError(SeriesError):
    """PExp is ill-defined: the argument has a term of q-degree <= 0."""


class UnitConstantTermError(SeriesError):
    """PLog needs a series with constant term exactly 1."""


def adams(f: TruncatedSeries, n: int) -> TruncatedSeries:
    """Scale every exponent (and the truncation order) by ``n``."""
    if n < 1:
        raise ValueError("Adams operations are indexed by positive integers")
    order2 = None if f.order2 is None else f.order2 * n
    return TruncatedSeries._raw(
        {(e[0] * n, e[1] * n, e[2] * n, e[3] * n): c for e, c in f.terms.items()}, order2)


def mobius(n: int) -> int:
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


Slice = Dict[Tuple[int, int, int], object]


def _slice_mul_acc(acc: Slice, a: Slice, b: Slice, scale=1) -> None:
    for (x1, x2, x3), u in a.items():
        if scale != 1:
            u = u * scale
        for (z1, z2, z3), v in b.items():
            k = (x1 + z1, x2 + z2, x3 + z3)
            acc[k] = acc.get(k, 0) + u * v


def _resolve_order(f: TruncatedSeries, order) -> int:
    order2 = to_order2(order) if order is not None else f.order2
    if order2 is None:
        raise SeriesError("a truncation order is required for an exact argument")
    if f.order2 is not None and order2 > f.order2:
        raise SeriesError("requested order exceeds the truncation order of the argument")
    return order2


def _euler_log_derivative(f: TruncatedSeries, order2: int) -> Dict[int, Slice]:
    """Graded pieces of ``D(sum_n adams(f, n)/n)`` where ``D`` multiplies by the q-degree."""
    out: Dict[int, Slice] = defaultdict(dict)
    for e, c in f.terms.items():
        d = e[3]
        n = 1
        while n * d < order2:
            sl = out[n * d]
            k = (e[0] * n, e[1] * n, e[2] * n)
            sl[k] = sl.get(k, 0) + d * c
            n += 1
    return out


def pexp(f: TruncatedSeries, order=None) -> TruncatedSeries:
    """Plethystic exponential below ``order`` (q units; default: ``f``'s order).

    Uses the recursion ``d F_d = sum_j J_j F_(d-j)`` on q-graded pieces, where
    ``J`` is the degree-weighted Adams sum of ``f``.
    """
    for e in f.terms:
        if e[3] <= 0:
            raise ConstantTermError(
                f"term with q-exponent {e[3] / 2} <= 0: the plethystic exponential is ill-defined")
    order2 = _resolve_order(f, order)
    J = _euler_log_derivative(f, order2)
    F: Dict[int, Slice] = {0: {(0, 0, 0): 1}}
    jl = sorted(J)
    for d in range(1, order2):
        acc: Slice = {}
        for j in jl:
            if j > d:
                break
            prev = F.get(d - j)
            if prev:
                _slice_mul_acc(acc, J[j], prev)
        sl = {k: _div(v, d) for k, v in acc.items() if v}
        sl = {k: v for k, v in sl.items() if v}
        if sl:
            F[d] = sl
    return TruncatedSeries._raw(
        {(k[0], k[1], k[2], d): v for d, sl in F.items() for k, v in sl.items()}, order2)


def plog(F: TruncatedSeries, order=None) -> TruncatedSeries:
    """Inverse of :func:`pexp` via ``sum_n mobius(n)/n adams(log F, n)``."""
    levels = F.levels()
    if levels.get(0) != {(0, 0, 0): 1} or any(d < 0 for d in levels):
        raise UnitConstantTermError("plethystic logarithm needs constant term exactly 1")
    order2 = _resolve_order(F, order)
    # D log F = (D F) / F
    DL: Dict[int, Slice] = {}
    for d in range(1, order2):
        acc: Slice = {}
        fd = levels.get(d)
        if fd:
            for k, v in fd.items():
                acc[k] = acc.get(k, 0) + d * v
        for j in sorted(DL):
            if j >= d:
                break
            prev = levels.get(d - j)
            if prev:
                _slice_mul_acc(acc, DL[j], prev, -1)
        acc = {k: v for k, v in acc.items() if v}
        if acc:
            DL[d] = acc
    log_terms = {(k[0], k[1], k[2], d): _div(v, d) for d, sl in DL.items() for k, v in sl.items()}
    logF = TruncatedSeries._raw(log_terms, order2)
    vmin = logF.valuation2()
    out = TruncatedSeries.zero(order2)
    if vmin is None:
        return out
    n = 1
    while n * vmin < order2:
        mu = mobius(n)
        if mu:
            out = out + adams(logF, n).truncate(order2).scale(Fraction(mu, n))
        n += 1
    return out


def pexp_product_check(f: TruncatedSeries, order=None) -> Optional[TruncatedSeries]:
    """Independent route for integer-coefficient ``f``: ``prod_m (1 - m)^(-a_m)``.

    Returns ``None`` when some coefficient is not an integer.
    """
    order2 = _resolve_order(f, order)
    result = TruncatedSeries.one(order2)
    for e, a in f.terms.items():
        if Fraction(a).denominator != 1:
            return None
        a = int(a)
        if a > 0:
            # (1 - m)^(-a) = sum_k binom(a + k - 1, k) m^k
            terms = {}
            k, binom = 0, 1
            while k * e[3] < order2:
                terms[(e[0] * k, e[1] * k, e[2] * k, e[3] * k)] = binom
                k += 1
                binom = binom * (a + k - 1) // k
            factor = TruncatedSeries(terms, order2)
        else:
            terms = {}
            b = -a
            binom = 1
            for k in range(b + 1):
                if k * e[3] < order2:
                    terms[(e[0] * k, e[1] * k, e[2] * k, e[3] * k)] = binom * (-1) ** k
                binom = binom * (b - k) // (k + 1)
            factor = TruncatedSeries(terms, order2)
        result = (result * factor).truncate(order2)
    return result
