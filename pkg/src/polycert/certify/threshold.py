"""Exact handling of the constant ``1 / cos^2(pi / (n + 2))``.

Write ``c = 2 cos(pi / (n + 2))``. The constant is ``4 / c^2`` and ``c`` is
the largest root of ``S_{n+1}``, where ``S_0 = 1``, ``S_1 = x`` and
``S_{k+1} = x S_k - S_{k-1}``; the roots of ``S_{n+1}`` are
``2 cos(j pi / (n + 2))`` for ``j = 1 .. n + 1``. The root is carried as a
rational isolating interval, and comparisons are settled by an exact gcd
test for equality followed by bisection.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

from ..poly import Polynomial, evaluate, gcd
from ..roots import count_in_interval

__all__ = [
    "AlgebraicThreshold",
    "Relation",
    "chebyshev_s",
    "compare_ratio",
    "cyclotomic_polynomial",
    "generator_minimal_polynomial",
    "threshold",
]

_X = Polynomial([0, 1])


class Relation(str, enum.Enum):
    BELOW = "Below"
    EQUAL = "Equal"
    ABOVE = "Above"


@lru_cache(maxsize=None)
def chebyshev_s(k: int) -> Polynomial:
    """``S_k`` from the three-term recurrence (integer coefficients)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    prev, cur = Polynomial([1]), _X
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, _X * cur - prev
    return cur


@lru_cache(maxsize=None)
def cyclotomic_polynomial(order: int) -> Polynomial:
    p = Polynomial.monomial(order) - 1
    for d in range(1, order):
        if order % d == 0:
            p = p // cyclotomic_polynomial(d)
    return p


@lru_cache(maxsize=None)
def generator_minimal_polynomial(n: int) -> Polynomial:
    """Minimal polynomial over Q of ``2 cos(pi / (n + 2))``.

    Obtained from the palindromic cyclotomic polynomial of order
    ``2 (n + 2)`` by the substitution ``z + 1/z -> x``.
    """
    order = 2 * (n + 2)
    phi = cyclotomic_polynomial(order)
    half = phi.deg // 2
    # V_i(z + 1/z) = z^i + z^-i
    v_prev, v_cur = Polynomial([2]), _X
    out = Polynomial([phi[half]])
    for i in range(1, half + 1):
        out = out + v_cur * phi[half + i]
        v_prev, v_cur = v_cur, _X * v_cur - v_prev
    return out


def _sign(v) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class AlgebraicThreshold:
    """``4 / c^2`` with ``c`` isolated in ``isolating_interval``.

    ``lo == hi`` means ``c`` is that rational exactly.
    """

    n: int
    chebyshev_poly: Polynomial
    isolating_interval: tuple

    @property
    def lo(self) -> Fraction:
        return self.isolating_interval[0]

    @property
    def hi(self) -> Fraction:
        return self.isolating_interval[1]

    def refined(self) -> "AlgebraicThreshold":
        """Halve the isolating interval."""
        lo, hi = self.isolating_interval
        if lo == hi:
            return self
        mid = (lo + hi) / 2
        s_mid = _sign(evaluate(self.chebyshev_poly, mid))
        if s_mid == 0:
            interval = (mid, mid)
        elif s_mid == _sign(evaluate(self.chebyshev_poly, hi)):
            interval = (lo, mid)
        else:
            interval = (mid, hi)
        return AlgebraicThreshold(self.n, self.chebyshev_poly, interval)

    def refined_to(self, width: Fraction) -> "AlgebraicThreshold":
        t = self
        while t.hi - t.lo > width:
            t = t.refined()
        return t

    def value_bounds(self) -> tuple:
        """Rational enclosure ``(lower, upper)`` of the threshold value."""
        t = self
        while t.lo <= 0:
            t = t.refined()
        return Fraction(4) / (t.hi * t.hi), Fraction(4) / (t.lo * t.lo)

    def exact_value(self):
        """The threshold as a ``Fraction`` when it is rational, else ``None``.

        It is rational exactly when ``c^2`` is, i.e. for ``n`` in {1, 2, 4}.
        """
        mu = generator_minimal_polynomial(self.n)
        if mu.deg == 1:
            c = -mu[0]
            return Fraction(4) / (c * c)
        if mu.deg == 2 and mu[1] == 0:
            return Fraction(4) / (-mu[0])
        return None

    def approximation(self, digits: int = 30) -> str:
        with mpmath.workdps(digits + 10):
            value = 1 / mpmath.cos(mpmath.pi / (self.n + 2)) ** 2
            return mpmath.nstr(value, digits, strip_zeros=False)

    def describe(self, digits: int = 30) -> dict:
        exact = self.exact_value()
        return {
            "n": self.n,
            "exact": None if exact is None else str(exact),
            "chebyshev_poly": [str(c) for c in self.chebyshev_poly.coeffs],
            "generator_interval": [str(self.lo), str(self.hi)],
            "approximation": self.approximation(digits),
        }


def _isolate_largest_root(s: Polynomial) -> tuple:
    """Bracket the largest root of ``s`` (all roots lie in (-2, 2))."""
    top = Fraction(2)
    width = Fraction(4)
    while True:
        lo = top - width
        count = count_in_interval(s, lo, top)
        if count == 1:
            break
        # the gap below the largest root is at least 3x its distance to 2,
        # so halving never steps over it
        if count == 0:
            raise RuntimeError("largest-root bracket lost")
        width /= 2
    if evaluate(s, lo) == 0:
        # lo is a smaller root; step up towards it while keeping one root in (lo, top]
        step = (top - lo) / 2
        while True:
            cand = lo + step
            if evaluate(s, cand) != 0 and count_in_interval(s, cand, top) == 1:
                lo = cand
                break
            step /= 2
    return lo, top


@lru_cache(maxsize=None)
def threshold(n: int) -> AlgebraicThreshold:
    if n < 1:
        raise ValueError("threshold requires n >= 1")
    s = chebyshev_s(n + 1)
    return AlgebraicThreshold(n, s, _isolate_largest_root(s))


def compare_ratio(r, t: AlgebraicThreshold) -> Relation:
    """Decide ``r`` against ``4 / c^2`` exactly.

    ``r`` is a rational, or an element of the real cyclotomic field generated
    by the same ``c`` (see :mod:`polycert.numberfield`).
    """
    if not r > 0:
        raise ValueError("ratio must be positive")
    if not isinstance(r, (int, Fraction)):
        return _compare_field(r, t)
    r = Fraction(r)
    lo, hi = t.isolating_interval
    if lo == hi:
        return _relation(r * lo * lo - 4)
    g = gcd(t.chebyshev_poly, Polynomial([-4, 0, r]))
    if g.deg > 0 and _sign(evaluate(g, lo)) != _sign(evaluate(g, hi)):
        return Relation.EQUAL
    cur = t
    while True:
        lo, hi = cur.isolating_interval
        if lo > 0 and r * lo * lo > 4:
            return Relation.ABOVE
        if r * hi * hi < 4:
            return Relation.BELOW
        if lo == hi:
            return _relation(r * lo * lo - 4)
        cur = cur.refined()


def _compare_field(r, t: AlgebraicThreshold) -> Relation:
    field = r.field
    if field.n != t.n:
        raise ValueError(f"ratio lives in the field for n={field.n}, threshold has n={t.n}")
    c = field.generator
    return _relation(r * c * c - 4)


def _relation(diff) -> Relation:
    if diff > 0:
        return Relation.ABOVE
    if diff < 0:
        return Relation.BELOW
    return Relation.EQUAL
