"""Exact big-integer combinatorics for monoid sizes.

Everything here is exact integer arithmetic except the analytic lower
bound, which is an inequality check and is evaluated in floating point.
"""

from __future__ import annotations

import math

# Triangular memo table; row n holds the values for 0..n. Rows are only
# ever appended, so concurrent readers always see consistent data.
_stirling_rows: list[list[int]] = [[1]]


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks.

    Zero whenever k > n or k < 1 (except the empty partition at n = k = 0).
    """
    if not (isinstance(n, int) and isinstance(k, int)) or n < 0 or k < 0:
        raise ValueError(f"arguments must be nonnegative integers, got ({n!r}, {k!r})")
    if k > n or (n > 0 and k < 1):
        return 0
    while len(_stirling_rows) <= n:
        prev = _stirling_rows[-1]
        m = len(_stirling_rows)
        row = [0] * (m + 1)
        for i in range(1, m):
            row[i] = prev[i - 1] + i * prev[i]
        row[m] = 1
        _stirling_rows.append(row)
    return _stirling_rows[n][k]


def binomial(n: int, k: int) -> int:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    return math.factorial(n)


def _ukl_size_raw(k: int, l: int) -> int:
    # Closed form for the size of the two-generated near-full monoid:
    #   kl + sum_i (C(n,i) - C(k,i-l)) (S(n,i) - sum_r S(k,r) S(l,i-r)) i!
    # Evaluated for any k, l >= 1; out-of-range binomials are zero.
    n = k + l
    total = k * l
    for i in range(1, n + 1):
        outer = binomial(n, i) - binomial(k, i - l)
        inner = stirling2(n, i) - sum(
            stirling2(k, r) * stirling2(l, i - r) for r in range(1, i + 1)
        )
        total += outer * inner * factorial(i)
    return total


def ukl_size_formula(k: int, l: int) -> int:
    """Exact size of the two-generated monoid for coprime k, l >= 2."""
    if not (isinstance(k, int) and isinstance(l, int)) or k < 2 or l < 2:
        raise ValueError(f"need k, l >= 2, got ({k!r}, {l!r})")
    if math.gcd(k, l) != 1:
        raise ValueError(f"need coprime cycle lengths, got ({k}, {l})")
    size = _ukl_size_raw(k, l)
    assert size >= 0
    return size


def ukl_gap(n: int) -> int:
    """Size difference between the (2, n-2) and (n-2, 2) monoids."""
    if not isinstance(n, int) or n < 5:
        raise ValueError(f"need n >= 5, got {n!r}")
    return _ukl_size_raw(2, n - 2) - _ukl_size_raw(n - 2, 2)


def hk_bracket(n: int) -> float:
    """The parenthesized factor of the analytic lower bound; tends to 1."""
    if not isinstance(n, int) or n < 7:
        raise ValueError(f"the analytic bound needs n >= 7, got {n!r}")
    e112 = math.exp(1 / 12)
    return 1.0 - math.sqrt(2) * (2 / math.e) ** (n / 2) * e112 - math.sqrt(8) / math.sqrt(n) * e112


def hk_lower_bound(n: int) -> float:
    """Analytic lower bound n^n * (1 - sqrt(2)(2/e)^(n/2)e^(1/12) - sqrt(8)e^(1/12)/sqrt(n)).

    May be negative for small n, in which case it holds trivially.
    """
    return float(n) ** n * hk_bracket(n)


def best_coprime_pair(n: int) -> tuple[int, int]:
    """The coprime split k >= 2, l >= 3 of n maximizing the size formula.

    Ties break toward smaller k.
    """
    if not isinstance(n, int) or n < 5:
        raise ValueError(f"no valid split below n = 5, got {n!r}")
    best: tuple[int, int] | None = None
    best_size = -1
    for k in range(2, n - 2):
        l = n - k
        if l < 3 or math.gcd(k, l) != 1:
            continue
        size = _ukl_size_raw(k, l)
        if size > best_size:
            best, best_size = (k, l), size
    if best is None:
        raise ValueError(f"no coprime split with k >= 2, l >= 3 for n = {n}")
    return best
