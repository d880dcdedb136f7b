"""Betti numbers, Hodge-Tate diamonds and Euler characteristics of Fano
schemes of k-planes on smooth even-dimensional intersections of two
quadrics (the stacky case).

Here the cohomology is concentrated in even degrees and of Hodge-Tate
type, so the diamond is determined by the even Betti numbers, which have
a closed expression through Gaussian binomial coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exactpoly import gauss_coefficients
from .hodge import HodgeDiamond


@dataclass(frozen=True)
class EvenFanoParams:
    """Parameters (g, k): planes of dimension k on an intersection of two
    quadrics in projective 2g-space, with 2 <= g and 0 <= k <= g-2."""

    g: int
    k: int

    def __post_init__(self):
        if self.g < 2:
            raise ValueError(f"g = {self.g}: need g >= 2")
        if not 0 <= self.k <= self.g - 2:
            raise ValueError(f"k = {self.k}: need 0 <= k <= g-2 = {self.g - 2}")

    @property
    def dimension(self) -> int:
        return (self.k + 1) * (2 * self.g - 2 * self.k - 2)


def fano_even_betti(params: EvenFanoParams, p: int) -> int:
    """Betti number b_{2p}: sum over j = 0..k+1 of
    C(2g+1, j) [q^{p-j(g-k-1)}] [2g-k-j-1, k+1-j]_q.

    Out-of-range coefficient extractions contribute 0, so any integer p
    is accepted and p outside 0..dimension gives 0.
    """
    g, k = params.g, params.k
    total = 0
    for j in range(k + 2):
        r = p - j * (g - k - 1)
        coeffs = gauss_coefficients(2 * g - k - j - 1, k + 1 - j)
        if 0 <= r < len(coeffs):
            total += math.comb(2 * g + 1, j) * coeffs[r]
    return total


def fano_even_diamond(params: EvenFanoParams) -> HodgeDiamond:
    """Hodge-Tate diamond: h^{p,p} = b_{2p}, all off-diagonal entries 0."""
    d = params.dimension
    table = [[0] * (d + 1) for _ in range(d + 1)]
    for p in range(d + 1):
        table[p][p] = fano_even_betti(params, p)
    return HodgeDiamond(table)


def euler_closed_form(g: int, k: int) -> int:
    """Euler characteristic C(g, k+1) 4^{k+1}.

    Also accepts the degenerate k = g-1 (a finite reduced scheme of
    cardinality 4^g), for which the formula still holds.
    """
    if g < 2:
        raise ValueError(f"g = {g}: need g >= 2")
    if not 0 <= k <= g - 1:
        raise ValueError(f"k = {k}: need 0 <= k <= g-1 = {g - 1}")
    return math.comb(g, k + 1) * 4 ** (k + 1)
