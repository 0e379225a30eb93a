"""Coefficient-ratio certificates and their reports.

Three conditions are supported:

* ``EvenTheorem1``: degree ``2n``, ``a_{2k+1}^2 / (a_{2k} a_{2k+2}) < 1/cos^2(pi/(n+2))``
  for ``k = 0 .. n-1`` implies ``P > 0`` on the real line. The proof goes
  through positive definiteness of the tridiagonal form, so the leading
  minors are computed alongside and must all be positive when certified.
* ``OddCorollary1``: degree ``2n+1``, ``a_{2k}^2 / (a_{2k-1} a_{2k+1})`` below
  ``(4k^2-1)/(4k^2) / cos^2(pi/(n+2))`` for ``k = 1 .. n`` implies exactly one
  real zero counted with multiplicity. This is the even condition applied to
  ``P'``, whose form supplies the recorded minors.
* ``Hutchinson``: ``a_k^2 / (a_{k-1} a_{k+1}) >= 4`` for ``k = 1 .. m-1``
  implies all zeros real (Hutchinson's classical criterion, not the matrix
  minor theorem used inside the even-degree proof).

A failed condition says nothing about the polynomial: the criteria are
sufficient only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..poly import Polynomial, derivative, format_scalar
from .form import build_form, check_positive_coefficients, leading_minors
from .threshold import AlgebraicThreshold, Relation, compare_ratio, threshold

__all__ = [
    "CertificateReport",
    "Comparison",
    "Condition",
    "InternalInconsistencyError",
    "Verdict",
    "check_even",
    "check_hutchinson",
    "check_odd",
]


class Condition(str, enum.Enum):
    EVEN = "EvenTheorem1"
    ODD = "OddCorollary1"
    HUTCHINSON = "Hutchinson"


class Verdict(str, enum.Enum):
    CERTIFIED_POSITIVE = "CertifiedPositive"
    CERTIFIED_ONE_REAL_ZERO = "CertifiedOneRealZero"
    CERTIFIED_ALL_REAL_ZEROS = "CertifiedAllRealZeros"
    CONDITION_FAILS = "ConditionFails"
    BOUNDARY_CASE = "BoundaryCase"

    @property
    def certified(self) -> bool:
        return self.value.startswith("Certified")


class InternalInconsistencyError(RuntimeError):
    """Ratios certified but a leading minor is not positive."""


@dataclass(frozen=True)
class Comparison:
    k: int
    ratio: object
    relation: Relation


@dataclass(frozen=True)
class CertificateReport:
    polynomial_degree: int
    condition: Condition
    per_index_comparisons: tuple
    leading_minors: tuple
    verdict: Verdict
    threshold: AlgebraicThreshold = field(default=None, compare=False)

    @property
    def message(self) -> str:
        if self.verdict is Verdict.CONDITION_FAILS:
            return "condition not satisfied"
        if self.verdict is Verdict.BOUNDARY_CASE:
            return "boundary case: equality at some index, no claim"
        return {
            Verdict.CERTIFIED_POSITIVE: "P(x) > 0 for every real x",
            Verdict.CERTIFIED_ONE_REAL_ZERO: "exactly one real zero (with multiplicity)",
            Verdict.CERTIFIED_ALL_REAL_ZEROS: "all zeros real",
        }[self.verdict]

    def to_json(self) -> dict:
        return {
            "degree": self.polynomial_degree,
            "condition": self.condition.value,
            "comparisons": [
                {"k": c.k, "ratio": format_scalar(c.ratio), "relation": c.relation.value}
                for c in self.per_index_comparisons
            ],
            "minors": [format_scalar(m) for m in self.leading_minors],
            "verdict": self.verdict.value,
        }


def _aggregate(relations, certified: Verdict) -> Verdict:
    if any(r is Relation.ABOVE for r in relations):
        return Verdict.CONDITION_FAILS
    if any(r is Relation.EQUAL for r in relations):
        return Verdict.BOUNDARY_CASE
    return certified


def _guard_minors(minors, verdict: Verdict) -> None:
    if verdict.certified and not all(m > 0 for m in minors):
        raise InternalInconsistencyError(
            "ratio condition certified but a leading minor is not positive: "
            + ", ".join(format_scalar(m) for m in minors)
        )


ThresholdSource = Callable[[int], AlgebraicThreshold]


def check_even(p: Polynomial, threshold_of: ThresholdSource = threshold) -> CertificateReport:
    if p.deg % 2:
        raise ValueError("even degree required")
    check_positive_coefficients(p)
    if p.deg == 0:
        return CertificateReport(0, Condition.EVEN, (), (), Verdict.CERTIFIED_POSITIVE)
    n = p.deg // 2
    t = threshold_of(n)
    comparisons = []
    for k in range(n):
        ratio = p[2 * k + 1] ** 2 / (p[2 * k] * p[2 * k + 2])
        comparisons.append(Comparison(k, ratio, compare_ratio(ratio, t)))
    verdict = _aggregate([c.relation for c in comparisons], Verdict.CERTIFIED_POSITIVE)
    minors = tuple(leading_minors(build_form(p)))
    _guard_minors(minors, verdict)
    return CertificateReport(p.deg, Condition.EVEN, tuple(comparisons), minors, verdict, t)


def check_odd(p: Polynomial, threshold_of: ThresholdSource = threshold) -> CertificateReport:
    if p.deg % 2 == 0:
        raise ValueError("odd degree required")
    if p.deg < 3:
        raise ValueError("odd degree >= 3 required")
    check_positive_coefficients(p)
    n = (p.deg - 1) // 2
    t = threshold_of(n)
    comparisons = []
    for k in range(1, n + 1):
        ratio = p[2 * k] ** 2 / (p[2 * k - 1] * p[2 * k + 1])
        scaled = ratio * Fraction(4 * k * k, 4 * k * k - 1)
        comparisons.append(Comparison(k, ratio, compare_ratio(scaled, t)))
    verdict = _aggregate([c.relation for c in comparisons], Verdict.CERTIFIED_ONE_REAL_ZERO)
    minors = tuple(leading_minors(build_form(derivative(p))))
    _guard_minors(minors, verdict)
    return CertificateReport(p.deg, Condition.ODD, tuple(comparisons), minors, verdict, t)


def check_hutchinson(p: Polynomial) -> CertificateReport:
    if p.deg < 2:
        raise ValueError("degree >= 2 required")
    check_positive_coefficients(p)
    comparisons = []
    for k in range(1, p.deg):
        ratio = p[k] ** 2 / (p[k - 1] * p[k + 1])
        diff = ratio - 4
        rel = Relation.ABOVE if diff > 0 else Relation.BELOW if diff < 0 else Relation.EQUAL
        comparisons.append(Comparison(k, ratio, rel))
    ok = all(c.relation is not Relation.BELOW for c in comparisons)
    verdict = Verdict.CERTIFIED_ALL_REAL_ZEROS if ok else Verdict.CONDITION_FAILS
    return CertificateReport(p.deg, Condition.HUTCHINSON, tuple(comparisons), (), verdict)
