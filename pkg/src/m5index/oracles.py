"""Independent integer-sequence oracles, computed without plethystic machinery."""
from __future__ import annotations

from typing import List


def partition_numbers(n: int) -> List[int]:
    """``p(0) .. p(n-1)`` from Euler's pentagonal-number recurrence."""
    p = [0] * max(n, 1)
    p[0] = 1
    for m in range(1, n):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[:n]


def macmahon_numbers(n: int) -> List[int]:
    """Plane partitions ``a(0) .. a(n-1)`` via ``m a(m) = sum_k sigma_2(k) a(m-k)``."""
    sigma2 = [0] + [sum(d * d for d in range(1, k + 1) if k % d == 0) for k in range(1, n)]
    a = [1] + [0] * (n - 1)
    for m in range(1, n):
        a[m] = sum(sigma2[k] * a[m - k] for k in range(1, m + 1)) // m
    return a[:n]


def product_coefficients(exponents: dict, n: int) -> List[int]:
    """Coefficients of ``prod_j (1 - q^j)^(-exponents[j])`` below ``q^n`` by repeated multiplication."""
    coeffs = [1] + [0] * (n - 1)
    for j, e in sorted(exponents.items()):
        for _ in range(e):
            for m in range(j, n):
                coeffs[m] += coeffs[m - j]
    return coeffs


def w_algebra_vacuum(N: int, n: int) -> List[int]:
    """Vacuum character of the principal W-algebra of type ``A_{N-1}``: ``prod_{s=2}^N prod_{m>=s} (1-q^m)^-1``."""
    exps = {}
    for s in range(2, N + 1):
        for m in range(s, n):
            exps[m] = exps.get(m, 0) + 1
    return product_coefficients(exps, n)


__all__ = ["partition_numbers", "macmahon_numbers", "product_coefficients", "w_algebra_vacuum"]
