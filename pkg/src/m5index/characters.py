"""Weyl characters of sl(2) and sl(3) as exact Laurent polynomials.

sl(3) characters come from Gelfand-Tsetlin patterns.  The weight
``(mu1, mu2, mu3)`` of a pattern is the monomial ``y1^mu1 y2^mu2 y3^mu3``,
reduced with ``y1 y2 y3 = 1``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Tuple

from .series import ExponentVector, TruncatedSeries, laurent, mono_pow

__all__ = [
    "char_sl2",
    "char_sl3",
    "dim_sl3",
    "dim_sl3_formula",
    "gelfand_tsetlin_patterns",
    "sl3_decompose",
    "sl2_decompose",
]


def char_sl2(k: int, argument=(0, 0, 1, -1)) -> TruncatedSeries:
    """``sum_{i=0..k} u^(k-2i)`` with ``u`` the canonical monomial ``argument``.

    The default argument is ``r = q^(-1/2) y``.
    """
    if k < 0:
        raise ValueError("sl(2) highest weight must be non-negative")
    return laurent({mono_pow(argument, k - 2 * i): 1 for i in range(k + 1)})


def gelfand_tsetlin_patterns(top: Tuple[int, ...]) -> Iterator[List[Tuple[int, ...]]]:
    """All GT patterns with the given top row (rows listed top to bottom)."""
    if len(top) == 1:
        yield [top]
        return
    ranges = [range(top[i + 1], top[i] + 1) for i in range(len(top) - 1)]
    for row in product(*ranges):
        for rest in gelfand_tsetlin_patterns(tuple(row)):
            yield [top] + rest


@lru_cache(maxsize=None)
def _sl3_weights(a: int, b: int) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    mult: Dict[Tuple[int, int], int] = {}
    for pat in gelfand_tsetlin_patterns((a + b, b, 0)):
        sums = [sum(r) for r in reversed(pat)]  # row lengths 1, 2, 3
        mu = (sums[0], sums[1] - sums[0], sums[2] - sums[1])
        key = (mu[0] - mu[2], mu[1] - mu[2])
        mult[key] = mult.get(key, 0) + 1
    return tuple(sorted(mult.items()))


def char_sl3(a: int, b: int) -> TruncatedSeries:
    """Character of the irreducible sl(3) module with Dynkin labels ``[a, b]``.

    ``[1, 0]`` is ``y1 + y2 + y3`` and ``[0, 1]`` is ``y1^-1 + y2^-1 + y3^-1``.
    """
    if a < 0 or b < 0:
        raise ValueError("Dynkin labels must be non-negative")
    return laurent({ExponentVector(a1, a2, 0, 0): m for (a1, a2), m in _sl3_weights(a, b)})


def dim_sl3(a: int, b: int) -> int:
    """Dimension by counting GT patterns."""
    return sum(m for _, m in _sl3_weights(a, b))


def dim_sl3_formula(a: int, b: int) -> int:
    return (a + 1) * (b + 1) * (a + b + 2) // 2


def _dynkin(a1: int, a2: int) -> Tuple[int, int]:
    # y1^a1 y2^a2 = weight (a1, a2, 0) modulo (1,1,1)
    return a1 - a2, a2


def sl3_decompose(poly: Dict[Tuple[int, int], int]) -> Dict[Tuple[int, int], int]:
    """Write a Weyl-invariant Laurent polynomial in ``(y1, y2)`` as a sum of characters.

    Greedy by height: the dominant weight of largest ``a + b`` is always the
    highest weight of some constituent.
    """
    rest = {k: v for k, v in poly.items() if v}
    out: Dict[Tuple[int, int], int] = {}
    while rest:
        dom = [(_dynkin(*k), v) for k, v in rest.items()
               if _dynkin(*k)[0] >= 0 and _dynkin(*k)[1] >= 0]
        if not dom:
            raise ValueError("polynomial is not a combination of sl(3) characters")
        (a, b), c = max(dom, key=lambda t: (t[0][0] + t[0][1], t[0]))
        out[(a, b)] = out.get((a, b), 0) + c
        for w, m in _sl3_weights(a, b):
            v = rest.get(w, 0) - c * m
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return out


def sl2_decompose(poly: Dict[int, int]) -> Dict[int, int]:
    """Multiplicities of ``chi_k(u)`` in a symmetric Laurent polynomial in ``u``."""
    rest = {k: v for k, v in poly.items() if v}
    out: Dict[int, int] = {}
    while rest:
        k = max(rest)
        if k < 0 or rest.get(-k, 0) != rest[k]:
            raise ValueError("polynomial is not a combination of sl(2) characters")
        c = rest[k]
        out[k] = c
        for j in range(k, -k - 1, -2):
            v = rest.get(j, 0) - c
            if v:
                rest[j] = v
            else:
                rest.pop(j, None)
    return out
