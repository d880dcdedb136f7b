"""Exact integer polynomial arithmetic.

Laurent polynomials in one variable, polynomials in two commuting
variables, and Gaussian (q-)binomial coefficients.  Coefficients are
arbitrary-precision Python ints, so every operation is exact and
downstream identity checks are literal polynomial equalities.

All values are immutable after construction and all operations are pure;
the Gaussian-binomial memo cache is safe for concurrent use under the
GIL and never changes results.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, Mapping


class InexactDivisionError(ArithmeticError):
    """A polynomial division left a nonzero remainder."""


def _clean(items: Iterable[tuple]) -> dict:
    out: dict = {}
    for key, c in items:
        if c:
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                del out[key]
    return out


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    The variable is anonymous; by context it stands for q (multiplicity
    kernels), L (the Lefschetz class) or t (the Hochschild grading).
    Zero coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        self._coeffs = _clean(items)

    @classmethod
    def _raw(cls, coeffs: dict[int, int]) -> "LaurentPoly":
        # internal fast path; `coeffs` must already be zero-free
        p = object.__new__(cls)
        p._coeffs = coeffs
        return p

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({0: 1})

    @classmethod
    def term(cls, coeff: int, exponent: int = 0) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def power_sum(cls, exponents: Iterable[int]) -> "LaurentPoly":
        """Sum of monomials q^e over `exponents`, with multiplicity."""
        return cls((e, 1) for e in exponents)

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def items(self) -> tuple[tuple[int, int], ...]:
        """(exponent, coefficient) pairs, ascending in exponent."""
        return tuple(sorted(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self._coeffs)

    def valuation(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no valuation")
        return min(self._coeffs)

    def is_effective(self) -> bool:
        """True when every coefficient is non-negative."""
        return all(c >= 0 for c in self._coeffs.values())

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by q^n."""
        if not n:
            return self
        return LaurentPoly._raw({e + n: c for e, c in self._coeffs.items()})

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero()
            return LaurentPoly._raw({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def pretty(self, var: str = "q") -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                head = "" if abs(c) == 1 else f"{abs(c)}*"
                body = f"{head}{var}" if e == 1 else f"{head}{var}^{e}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"


class BiPoly:
    """Immutable polynomial in two commuting variables x, y over the ints.

    Houses E-polynomials; exponents are stored as (p, q) pairs and zero
    coefficients are never stored.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], int] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        self._coeffs = _clean(((int(p), int(q)), c) for (p, q), c in items)

    @classmethod
    def _raw(cls, coeffs: dict) -> "BiPoly":
        p = object.__new__(cls)
        p._coeffs = coeffs
        return p

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "BiPoly":
        return cls._raw({(0, 0): 1})

    @classmethod
    def from_diagonal(cls, p: LaurentPoly) -> "BiPoly":
        """Substitute the Laurent variable by x*y (each L^e becomes x^e y^e)."""
        return cls._raw({(e, e): c for e, c in p._coeffs.items()})

    def coefficient(self, p: int, q: int) -> int:
        return self._coeffs.get((p, q), 0)

    def items(self) -> tuple[tuple[tuple[int, int], int], ...]:
        return tuple(sorted(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def evaluate(self, x: int, y: int) -> int:
        total = 0
        for (p, q), c in self._coeffs.items():
            if p < 0 or q < 0:
                raise ValueError("evaluate requires non-negative exponents")
            total += c * x**p * y**q
        return total

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -c for k, c in self._coeffs.items()})

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return BiPoly.zero()
            return BiPoly._raw({k: c * other for k, c in self._coeffs.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self._coeffs.items():
            for (p2, q2), c2 in other._coeffs.items():
                k = (p1 + p2, q1 + q2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
        return BiPoly._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def pretty(self, x: str = "x", y: str = "y") -> str:
        if not self._coeffs:
            return "0"

        def mono(p, q):
            factors = []
            if p:
                factors.append(x if p == 1 else f"{x}^{p}")
            if q:
                factors.append(y if q == 1 else f"{y}^{q}")
            return "*".join(factors)

        parts = []
        for (p, q), c in self.items():
            m = mono(p, q)
            if not m:
                body = str(abs(c))
            elif abs(c) == 1:
                body = m
            else:
                body = f"{abs(c)}*{m}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BiPoly({dict(self.items())!r})"


def eval_at_one(p: LaurentPoly) -> int:
    """Sum of all coefficients (the value at q = 1)."""
    return sum(p._coeffs.values())


def binomial(n: int, m: int) -> int:
    """Binomial coefficient with the edge conventions used throughout.

    m < 0 gives 0 and m = 0 gives 1 for every n, including negative n
    (these conventions are forced by the top symmetric-power multiplicity
    being 1); 0 <= n < m gives 0.  Negative n with m >= 1 never occurs in
    any formula here and is rejected.
    """
    if m < 0:
        return 0
    if m == 0:
        return 1
    if n < 0:
        raise ValueError(f"binomial({n}, {m}) with n < 0, m >= 1 is undefined here")
    return math.comb(n, m)


@functools.cache
def gauss_coefficients(n: int, m: int) -> tuple[int, ...]:
    """Dense coefficient tuple of the Gaussian binomial [n, m]_q.

    Entry e is the coefficient of q^e; the empty tuple encodes 0.
    Computed division-free by the Pascal recurrence
    [n, m]_q = [n-1, m-1]_q + q^m [n-1, m]_q.
    """
    if m < 0:
        return ()
    if m == 0:
        return (1,)
    if n < 0:
        raise ValueError(f"gauss_binomial({n}, {m}) with n < 0, m >= 1 is undefined here")
    if n < m:
        return ()
    low = gauss_coefficients(n - 1, m - 1)
    high = gauss_coefficients(n - 1, m)
    out = [0] * (m * (n - m) + 1)
    for e, c in enumerate(low):
        out[e] += c
    for e, c in enumerate(high):
        out[e + m] += c
    return tuple(out)


def gauss_binomial(n: int, m: int) -> LaurentPoly:
    """Gaussian binomial coefficient [n, m]_q as a polynomial in q."""
    return LaurentPoly._raw({e: c for e, c in enumerate(gauss_coefficients(n, m)) if c})


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient num / den, which must be exact.

    Raises InexactDivisionError when the division leaves a remainder and
    ZeroDivisionError on a zero divisor.
    """
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return LaurentPoly.zero()
    rem = dict(num._coeffs)
    div = den._coeffs
    top = max(div)
    lead = div[top]
    # an exact Laurent quotient cannot reach below val(num) - val(den)
    floor = min(rem) - min(div)
    quot: dict[int, int] = {}
    while rem:
        rtop = max(rem)
        e = rtop - top
        if e < floor:
            raise InexactDivisionError("polynomial division is not exact")
        c, r = divmod(rem[rtop], lead)
        if r:
            raise InexactDivisionError("polynomial division is not exact")
        quot[e] = c
        for de, dc in div.items():
            ne = de + e
            v = rem.get(ne, 0) - dc * c
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    return LaurentPoly._raw(quot)
