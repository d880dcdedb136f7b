"""Hodge diamonds and the numerical measures defined on them.

A diamond stores the full (d+1) x (d+1) table of Hodge numbers of a
smooth projective variety; the constructor enforces Hodge symmetry and
Serre duality eagerly, so everything computed downstream inherits those
guarantees.  The measures (E-polynomial, Betti numbers, Euler
characteristic, Hochschild homology dimensions) are read off the table.
"""

from __future__ import annotations

from .exactpoly import BiPoly, LaurentPoly


class ConsistencyError(RuntimeError):
    """Internal bookkeeping produced an impossible Hodge-theoretic value."""


class HodgeDiamond:
    """Immutable table of Hodge numbers h^{p,q} of a d-dimensional variety."""

    __slots__ = ("_dim", "_h")

    def __init__(self, entries):
        rows = tuple(tuple(row) for row in entries)
        d = len(rows) - 1
        if d < 0:
            raise ValueError("a Hodge diamond needs at least the (0, 0) entry")
        for p, row in enumerate(rows):
            if len(row) != d + 1:
                raise ValueError(f"row {p} has length {len(row)}, expected {d + 1}")
            for q, h in enumerate(row):
                if not isinstance(h, int) or h < 0:
                    raise ValueError(f"h^{{{p},{q}}} = {h!r} is not a non-negative integer")
        for p in range(d + 1):
            for q in range(p, d + 1):
                if rows[p][q] != rows[q][p]:
                    raise ValueError(
                        f"Hodge symmetry fails: h^{{{p},{q}}} = {rows[p][q]} "
                        f"but h^{{{q},{p}}} = {rows[q][p]}"
                    )
                if rows[p][q] != rows[d - p][d - q]:
                    raise ValueError(
                        f"Serre duality fails: h^{{{p},{q}}} = {rows[p][q]} "
                        f"but h^{{{d - p},{d - q}}} = {rows[d - p][d - q]}"
                    )
        self._dim = d
        self._h = rows

    @classmethod
    def point(cls) -> "HodgeDiamond":
        return cls(((1,),))

    @property
    def dimension(self) -> int:
        return self._dim

    def hodge_number(self, p: int, q: int) -> int:
        if not (0 <= p <= self._dim and 0 <= q <= self._dim):
            raise ValueError(f"(p, q) = ({p}, {q}) outside the {self._dim}-dimensional table")
        return self._h[p][q]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._h

    def betti(self, m: int) -> int:
        """m-th Betti number, the sum of h^{p,q} over p + q = m."""
        d = self._dim
        if not 0 <= m <= 2 * d:
            raise ValueError(f"Betti index {m} outside 0..{2 * d}")
        return sum(self._h[p][m - p] for p in range(max(0, m - d), min(d, m) + 1))

    def betti_numbers(self) -> tuple[int, ...]:
        return tuple(self.betti(m) for m in range(2 * self._dim + 1))

    def euler(self) -> int:
        return sum((-1) ** m * b for m, b in enumerate(self.betti_numbers()))

    def e_polynomial(self) -> BiPoly:
        """E-polynomial: sum of (-1)^{p+q} h^{p,q} x^p y^q."""
        return BiPoly(
            ((p, q), (h if (p + q) % 2 == 0 else -h))
            for p, row in enumerate(self._h)
            for q, h in enumerate(row)
            if h
        )

    def hochschild_polynomial(self) -> LaurentPoly:
        """Hochschild homology dimensions as a Laurent polynomial in t.

        The coefficient of t^i is the sum of h^{p,q} over q - p = i,
        which is dim HH_i by Hochschild-Kostant-Rosenberg.
        """
        return LaurentPoly(
            (q - p, h) for p, row in enumerate(self._h) for q, h in enumerate(row) if h
        )

    def kunneth(self, other: "HodgeDiamond") -> "HodgeDiamond":
        """Diamond of a product variety (Kunneth convolution of tables)."""
        da, db = self._dim, other._dim
        d = da + db
        out = [[0] * (d + 1) for _ in range(d + 1)]
        for p1, row1 in enumerate(self._h):
            for q1, h1 in enumerate(row1):
                if not h1:
                    continue
                for p2, row2 in enumerate(other._h):
                    for q2, h2 in enumerate(row2):
                        if h2:
                            out[p1 + p2][q1 + q2] += h1 * h2
        return HodgeDiamond(out)

    def to_text(self) -> str:
        """Centered diamond layout: row m holds h^{p,q} with p + q = m,
        p - q increasing left to right."""
        d = self._dim
        rows = []
        for m in range(2 * d + 1):
            lo, hi = max(0, m - d), min(d, m)
            rows.append([self._h[p][m - p] for p in range(lo, hi + 1)])
        cell = max(len(str(v)) for row in rows for v in row)
        lines = [" ".join(str(v).rjust(cell) for v in row) for row in rows]
        width = max(len(line) for line in lines)
        return "\n".join(line.center(width).rstrip() for line in lines)

    def to_json_obj(self) -> dict:
        return {"dimension": self._dim, "hodge": [list(row) for row in self._h]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, HodgeDiamond):
            return NotImplemented
        return self._h == other._h

    def __hash__(self) -> int:
        return hash(self._h)

    def __repr__(self) -> str:
        return f"HodgeDiamond(dimension={self._dim})"
