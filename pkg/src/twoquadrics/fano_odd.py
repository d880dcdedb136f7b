"""Hodge diamonds of Fano schemes of k-planes on smooth odd-dimensional
intersections of two quadrics (the hyperelliptic case).

The cohomology in degree m is a direct sum of Tate twists of exterior
powers of H^1 of the associated genus-g hyperelliptic curve; the number
of copies is the coefficient of an explicit Laurent kernel, and the
twist offset is forced by weight bookkeeping.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .exactpoly import LaurentPoly, exact_divide
from .hodge import ConsistencyError, HodgeDiamond


@dataclass(frozen=True)
class OddFanoParams:
    """Parameters (g, k): planes of dimension k on an intersection of two
    quadrics in projective (2g+1)-space, with 2 <= g and 0 <= k <= g-2."""

    g: int
    k: int

    def __post_init__(self):
        if self.g < 2:
            raise ValueError(f"g = {self.g}: need g >= 2")
        if not 0 <= self.k <= self.g - 2:
            raise ValueError(f"k = {self.k}: need 0 <= k <= g-2 = {self.g - 2}")

    @property
    def dimension(self) -> int:
        return (self.k + 1) * (2 * self.g - 2 * self.k - 1)


@functools.cache
def multiplicity_kernel(a: int, b: int) -> LaurentPoly:
    """Laurent polynomial whose q^c coefficient is the summand count
    multiplicity(a, b, c).

    Equals q^{-(b-a+1)(2a-1)} (1-q^{4b})
    prod_{l=b-a+2}^{a+b-2} (1-q^{2l}) / prod_{l=1}^{2a-2} (1-q^{2l}),
    computed by exact division (a nonzero remainder signals arguments
    outside the contract a >= 2, b >= a-1).
    """
    if a < 2:
        raise ValueError(f"a = {a}: need a >= 2")
    if b < a - 1:
        raise ValueError(f"b = {b}: need b >= a-1 = {a - 1}")
    num = LaurentPoly({0: 1, 4 * b: -1})
    for ell in range(b - a + 2, a + b - 1):
        num = num * LaurentPoly({0: 1, 2 * ell: -1})
    den = LaurentPoly.one()
    for ell in range(1, 2 * a - 1):
        den = den * LaurentPoly({0: 1, 2 * ell: -1})
    return exact_divide(num, den).shift(-(b - a + 1) * (2 * a - 1))


def multiplicity(a: int, b: int, c: int) -> int:
    """Number of copies of the (a, b) cohomology block in centered degree c."""
    return multiplicity_kernel(a, b).coefficient(c)


@functools.cache
def fano_odd_diamond(params: OddFanoParams) -> HodgeDiamond:
    """Hodge diamond of the k-plane Fano scheme in the hyperelliptic case.

    For each degree m = 0..2d and each j = g-k-1..g, the block
    wedge^{g-j} H^1(C) enters with multiplicity(g-k, j, d-m) copies,
    Tate-twisted by t = (m-(g-j))/2, contributing
    C(g, p-t) C(g, q-t) to h^{p,q} for p+q = m.
    """
    g, k = params.g, params.k
    d = params.dimension
    comb_g = [math.comb(g, r) for r in range(g + 1)]
    h = [[0] * (d + 1) for _ in range(d + 1)]
    for m in range(2 * d + 1):
        lo, hi = max(0, m - d), min(d, m)
        for j in range(g - k - 1, g + 1):
            mult = multiplicity(g - k, j, d - m)
            if not mult:
                continue
            delta = m - (g - j)
            if delta < 0 or delta % 2:
                raise ConsistencyError(
                    f"block (g, k, j, m) = ({g}, {k}, {j}, {m}): twist offset "
                    f"{delta}/2 is not a non-negative integer"
                )
            t = delta // 2
            for p in range(lo, hi + 1):
                pa, qa = p - t, (m - p) - t
                if 0 <= pa <= g and 0 <= qa <= g:
                    h[p][m - p] += mult * comb_g[pa] * comb_g[qa]
    return HodgeDiamond(h)
