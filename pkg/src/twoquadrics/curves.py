"""Hodge diamonds of the building blocks: curves, their symmetric powers,
Jacobians and projective spaces."""

from __future__ import annotations

import functools
import math

from .hodge import ConsistencyError, HodgeDiamond


@functools.cache
def curve_diamond(g: int) -> HodgeDiamond:
    """Diamond of a smooth projective curve of genus g."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    return HodgeDiamond(((1, g), (g, 1)))


def _mul_truncated(a, b, order):
    """Product of two truncated series with BiPoly-style dict coefficients;
    index = t-degree, truncated above `order`."""
    out = [dict() for _ in range(order + 1)]
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        for j in range(order - i + 1):
            bj = b[j]
            if not bj:
                continue
            tgt = out[i + j]
            for (p1, q1), c1 in ai.items():
                for (p2, q2), c2 in bj.items():
                    key = (p1 + p2, q1 + q2)
                    v = tgt.get(key, 0) + c1 * c2
                    if v:
                        tgt[key] = v
                    else:
                        del tgt[key]
    return out


@functools.cache
def sym_curve_diamond(g: int, n: int) -> HodgeDiamond:
    """Diamond of the n-th symmetric power of a genus-g curve.

    h^{p,q} is the coefficient of x^p y^q t^n in the generating series
    (1+xt)^g (1+yt)^g / ((1-t)(1-xyt)), expanded exactly with t truncated
    at degree n.
    """
    if g < 0 or n < 0:
        raise ValueError("genus and power must be non-negative")
    fx = [{(j, 0): math.comb(g, j)} if j <= g else {} for j in range(n + 1)]
    fy = [{(0, j): math.comb(g, j)} if j <= g else {} for j in range(n + 1)]
    geo = [{(0, 0): 1} for _ in range(n + 1)]
    diag = [{(j, j): 1} for j in range(n + 1)]
    series = _mul_truncated(_mul_truncated(fx, fy, n), _mul_truncated(geo, diag, n), n)
    top = series[n]
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for (p, q), c in top.items():
        if c < 0 or not (0 <= p <= n and 0 <= q <= n):
            raise ConsistencyError(
                f"symmetric-power series gave h^{{{p},{q}}} = {c} for (g, n) = ({g}, {n})"
            )
        table[p][q] = c
    return HodgeDiamond(table)


@functools.cache
def jacobian_diamond(g: int) -> HodgeDiamond:
    """Diamond of a g-dimensional Jacobian: h^{p,q} = C(g,p) C(g,q)."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    row = [math.comb(g, j) for j in range(g + 1)]
    return HodgeDiamond([[row[p] * row[q] for q in range(g + 1)] for p in range(g + 1)])


@functools.cache
def projective_space_diamond(n: int) -> HodgeDiamond:
    """Diamond of n-dimensional projective space: h^{p,p} = 1."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return HodgeDiamond([[1 if p == q else 0 for q in range(n + 1)] for p in range(n + 1)])
