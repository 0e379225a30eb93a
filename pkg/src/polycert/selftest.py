"""Deterministic invariant batteries for small ``n`` (``n <= 6``)."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator

from .certify import (
    Relation,
    Verdict,
    build_form,
    check_even,
    check_odd,
    cofactor_determinant,
    dense_matrix,
    leading_minors,
    quadratic_form_value,
    threshold,
)
from .extremal import perturb_toward_interior, theorem2_polynomial, theorem3_polynomial, verify_extremal_ratios
from .poly import evaluate
from .roots import count_real_roots, verify_positive
from .sampling import even_certifiable, make_rng, odd_certifiable, random_rational

MAX_N = 6
FAULTS = ("threshold",)


def _corrupted_threshold(n: int):
    return threshold(n + 1)


def _evaluation_identity(seed: int, **_) -> bool:
    rng = make_rng(seed)
    for n in range(1, MAX_N + 1):
        for _ in range(20):
            p = even_certifiable(rng, n)
            x = random_rational(rng)
            if quadratic_form_value(build_form(p), [x**k for k in range(n + 1)]) != evaluate(p, x):
                return False
    return True


def _minor_recurrence(seed: int, **_) -> bool:
    rng = make_rng(seed + 1)
    for n in range(1, 6):
        for _ in range(5):
            f = build_form(even_certifiable(rng, n, fill=Fraction(3)))
            m = dense_matrix(f)
            direct = [cofactor_determinant([row[:j] for row in m[:j]]) for j in range(1, f.size + 1)]
            if direct != leading_minors(f):
                return False
    return True


def _threshold_exact(**_) -> bool:
    return [threshold(n).exact_value() for n in (1, 2, 4)] == [4, 2, Fraction(4, 3)]


def _boundary_detection(threshold_of: Callable, **_) -> bool:
    for n in range(1, MAX_N + 1):
        even = check_even(theorem2_polynomial(n).polynomial(), threshold_of=threshold_of)
        odd = check_odd(theorem3_polynomial(n).polynomial(), threshold_of=threshold_of)
        for report in (even, odd):
            if report.verdict is not Verdict.BOUNDARY_CASE:
                return False
            if any(c.relation is not Relation.EQUAL for c in report.per_index_comparisons):
                return False
    return True


def _extremal_ratios(**_) -> bool:
    return all(
        verify_extremal_ratios(ctor(n, mode))
        for n in range(1, MAX_N + 1)
        for ctor in (theorem2_polynomial, theorem3_polynomial)
        for mode in ("exact", "numeric")
    )


def _extremal_roots(**_) -> bool:
    for n in range(1, 5):
        if count_real_roots(theorem2_polynomial(n).polynomial(), isolate=False).with_multiplicity < 2:
            return False
        if count_real_roots(theorem3_polynomial(n).polynomial(), isolate=False).with_multiplicity < 3:
            return False
    return True


def _soundness(seed: int, threshold_of: Callable, **_) -> bool:
    rng = make_rng(seed + 2)
    for i in range(60):
        n = 1 + i % MAX_N
        p = even_certifiable(rng, n)
        if check_even(p, threshold_of=threshold_of).verdict is not Verdict.CERTIFIED_POSITIVE:
            return False
        if not verify_positive(p):
            return False
        q = odd_certifiable(rng, n)
        if check_odd(q, threshold_of=threshold_of).verdict is not Verdict.CERTIFIED_ONE_REAL_ZERO:
            return False
        if count_real_roots(q, isolate=False).with_multiplicity != 1:
            return False
    return True


def _sweep(threshold_of: Callable, **_) -> bool:
    for n in range(1, 4):
        e = theorem2_polynomial(n)
        for eps in (Fraction(1, 2), Fraction(1, 10), Fraction(1, 100)):
            p = perturb_toward_interior(e, eps)
            if check_even(p, threshold_of=threshold_of).verdict is not Verdict.CERTIFIED_POSITIVE:
                return False
            if count_real_roots(p, isolate=False).distinct != 0:
                return False
    return True


BATTERIES = (
    ("evaluation_identity", _evaluation_identity),
    ("minor_recurrence", _minor_recurrence),
    ("threshold_exact", _threshold_exact),
    ("extremal_ratios", _extremal_ratios),
    ("boundary_detection", _boundary_detection),
    ("extremal_roots", _extremal_roots),
    ("soundness", _soundness),
    ("sharpness_sweep", _sweep),
)


def run(seed: int = 0, fault: str = None) -> Iterator[tuple]:
    """Yield ``(name, passed)`` per battery."""
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    threshold_of = _corrupted_threshold if fault == "threshold" else threshold
    for name, battery in BATTERIES:
        try:
            ok = bool(battery(seed=seed, threshold_of=threshold_of))
        except Exception:  # a crashing battery is a failed battery
            ok = False
        yield name, ok
