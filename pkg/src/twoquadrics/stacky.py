"""Exceptional-object counting for the stacky case and the combinatorial
identities behind it.

The decomposition side for the even-dimensional intersection of two
quadrics is built from stacky symmetric powers of the associated stacky
curve (root stacks over projective space); each admits a full
exceptional collection whose length is an explicit binomial sum, and the
total count matches the Euler characteristic of the Fano scheme.  The
identities are verified by exact evaluation over finite ranges.
"""

from __future__ import annotations

import math


def fonarev_rank(g: int, k: int) -> int:
    """Length of the full exceptional collection on the k-th stacky
    symmetric power: sum_{t=0..k} (k+1-t) C(2g+1, t)."""
    if g < 2:
        raise ValueError(f"g = {g}: need g >= 2")
    if k < 0:
        raise ValueError(f"k = {k}: need k >= 0")
    return sum((k + 1 - t) * math.comb(2 * g + 1, t) for t in range(k + 1))


def stacky_collection_length(g: int, k: int) -> int:
    """Total exceptional-object count of the conjectured decomposition:
    sum_{i=0..k+1} C(2g-3-k-i, k+1-i) fonarev_rank(g, i)."""
    if g < 2:
        raise ValueError(f"g = {g}: need g >= 2")
    if not 0 <= k <= g - 2:
        raise ValueError(f"k = {k}: need 0 <= k <= g-2 = {g - 2}")
    return sum(
        math.comb(2 * g - 3 - k - i, k + 1 - i) * fonarev_rank(g, i)
        for i in range(k + 2)
    )


def gessel_identity_check(m: int, a: int) -> bool:
    """Exact check of 4^m C(m+a/2, m) = sum_{i=0..m} C(m+a-i, a) C(2m+a+1, i)
    for m >= 0 and even a >= 0."""
    if m < 0:
        raise ValueError(f"m = {m}: need m >= 0")
    if a < 0 or a % 2:
        raise ValueError(f"a = {a}: need a >= 0 even")
    lhs = 4**m * math.comb(m + a // 2, m)
    rhs = sum(math.comb(m + a - i, a) * math.comb(2 * m + a + 1, i) for i in range(m + 1))
    return lhs == rhs


def gessel_series_check(m: int, a: int) -> bool:
    """Second route to the same identity: the coefficient of x^m in the
    truncated power series (1-4x)^{-(a/2+1)}, expanded by repeated
    convolution of the geometric series, must equal the binomial sum."""
    if m < 0:
        raise ValueError(f"m = {m}: need m >= 0")
    if a < 0 or a % 2:
        raise ValueError(f"a = {a}: need a >= 0 even")
    geometric = [4**j for j in range(m + 1)]
    series = [1] + [0] * m
    for _ in range(a // 2 + 1):
        series = [
            sum(series[j] * geometric[i - j] for j in range(i + 1)) for i in range(m + 1)
        ]
    rhs = sum(math.comb(m + a - i, a) * math.comb(2 * m + a + 1, i) for i in range(m + 1))
    return series[m] == rhs


def chu_vandermonde_check(n: int, j: int, k: int) -> bool:
    """Exact check of the hockey-stick variant
    sum_{m=0..n} C(m, j) C(n-m, k-j) = C(n+1, k+1) for 0 <= j <= k <= n."""
    if not 0 <= j <= k <= n:
        raise ValueError(f"(n, j, k) = ({n}, {j}, {k}): need 0 <= j <= k <= n")
    lhs = sum(math.comb(m, j) * math.comb(n - m, k - j) for m in range(n + 1))
    return lhs == math.comb(n + 1, k + 1)
