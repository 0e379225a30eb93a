"""Sturm-sequence real-root counting and isolation over exact fields."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial, derivative, evaluate, gcd, square_free_part

__all__ = [
    "RootCount",
    "SturmChain",
    "count_real_roots",
    "sturm_chain",
    "verify_positive",
]

NEG_INF = "-inf"
POS_INF = "+inf"


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _rational_upper(v) -> Fraction:
    """A rational number >= v."""
    if isinstance(v, (Fraction, int)):
        return Fraction(v)
    return v.enclosure()[1]


@dataclass(frozen=True)
class SturmChain:
    chain: tuple

    def signs_at(self, x) -> list:
        if x == NEG_INF:
            return [_sign(q.lc) * (-1 if q.deg % 2 else 1) for q in self.chain]
        if x == POS_INF:
            return [_sign(q.lc) for q in self.chain]
        return [_sign(evaluate(q, x)) for q in self.chain]

    def variations(self, x) -> int:
        signs = [s for s in self.signs_at(x) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def count(self, lo=NEG_INF, hi=POS_INF) -> int:
        """Distinct roots in ``(lo, hi]`` (chain of a square-free polynomial)."""
        return self.variations(lo) - self.variations(hi)


def sturm_chain(p: Polynomial) -> SturmChain:
    """Signed remainder chain; each remainder is divided by ``|lc|``."""
    if p.is_zero():
        raise ValueError("Sturm chain of the zero polynomial is undefined")
    chain = [p]
    if p.deg == 0:
        return SturmChain(tuple(chain))
    chain.append(derivative(p))
    while chain[-1].deg > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        lead = r.lc
        chain.append(-(r * (1 / abs(lead))))
    return SturmChain(tuple(chain))


@dataclass(frozen=True)
class RootCount:
    distinct: int
    with_multiplicity: int
    isolating_intervals: tuple = ()

    def to_json(self) -> dict:
        return {
            "distinct": self.distinct,
            "with_multiplicity": self.with_multiplicity,
            "intervals": [[str(lo), str(hi)] for lo, hi in self.isolating_intervals],
        }


def _distinct(p: Polynomial) -> int:
    if p.deg == 0:
        return 0
    return sturm_chain(square_free_part(p)).count()


def _cauchy_bound(p: Polynomial) -> Fraction:
    lead = p.lc
    return 1 + max(_rational_upper(abs(c / lead)) for c in p.coeffs[:-1])


def _isolate(sf: Polynomial, chain: SturmChain) -> list:
    bound = _cauchy_bound(sf)
    out = []
    stack = [(-bound, bound, chain.count(-bound, bound))]
    while stack:
        lo, hi, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        while evaluate(sf, mid) == 0:
            mid = (lo + mid) / 2
        left = chain.count(lo, mid)
        stack.append((mid, hi, n - left))
        stack.append((lo, mid, left))
    return sorted(out)


def count_real_roots(p: Polynomial, isolate: bool = True) -> RootCount:
    """Count real roots of ``p`` (distinct and with multiplicity).

    Roots with multiplicity > i are exactly the real roots of the i-th
    gcd tower entry ``g_0 = p, g_{i+1} = gcd(g_i, g_i')``.
    """
    if p.is_zero():
        raise ValueError("root count of the zero polynomial is undefined")
    if p.deg == 0:
        return RootCount(0, 0, ())
    sf = square_free_part(p)
    chain = sturm_chain(sf)
    distinct = chain.count()
    total, g = distinct, gcd(p, derivative(p))
    while g.deg > 0:
        total += _distinct(g)
        g = gcd(g, derivative(g))
    intervals = tuple(_isolate(sf, chain)) if isolate and distinct else ()
    return RootCount(distinct, total, intervals)


def verify_positive(p: Polynomial) -> bool:
    """True iff ``p(x) > 0`` on the whole real line."""
    if p.deg % 2:
        raise ValueError("positivity on all of ℝ impossible for odd degree")
    if not p.lc > 0:
        raise ValueError("leading coefficient must be positive")
    if p.deg == 0:
        return True
    return _distinct(p) == 0


def count_in_interval(p: Polynomial, lo, hi) -> int:
    """Distinct roots of ``p`` in ``(lo, hi]``; ``None`` means infinite."""
    chain = sturm_chain(square_free_part(p))
    return chain.count(NEG_INF if lo is None else lo, POS_INF if hi is None else hi)
