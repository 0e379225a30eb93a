"""Seeded random instances satisfying the ratio conditions.

All randomness comes from numpy's counter-based Philox generator keyed by a
single integer seed, so every sample is reproducible.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .certify.threshold import threshold
from .poly import Polynomial

_RESOLUTION = 2**20


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def unit_fraction(rng: np.random.Generator) -> Fraction:
    """Uniform rational in the open interval (0, 1)."""
    return Fraction(int(rng.integers(1, _RESOLUTION)), _RESOLUTION)


def positive_fraction(rng: np.random.Generator, lo: Fraction = Fraction(1, 4), hi: Fraction = Fraction(4)) -> Fraction:
    return lo + (hi - lo) * unit_fraction(rng)


def even_certifiable(rng: np.random.Generator, n: int, fill: Fraction = Fraction(9, 10)) -> Polynomial:
    """Degree ``2n`` with every ratio uniform in ``(0, fill * threshold)``.

    Coefficients are built outward from ``a_0 = 1``: ``a_{2k+1}`` is drawn,
    then ``a_{2k+2} = a_{2k+1}^2 / (ratio_k a_{2k})``.
    """
    lower = threshold(n).value_bounds()[0]
    coeffs = [Fraction(1)]
    for _ in range(n):
        ratio = unit_fraction(rng) * fill * lower
        odd = positive_fraction(rng)
        coeffs.append(odd)
        coeffs.append(odd * odd / (ratio * coeffs[-2]))
    return Polynomial(coeffs)


def odd_certifiable(rng: np.random.Generator, n: int, fill: Fraction = Fraction(9, 10)) -> Polynomial:
    """Degree ``2n+1`` with ratio ``k`` uniform in ``(0, fill (4k^2-1)/(4k^2) threshold)``."""
    lower = threshold(n).value_bounds()[0]
    coeffs = [positive_fraction(rng), Fraction(1)]
    for k in range(1, n + 1):
        ratio = unit_fraction(rng) * fill * Fraction(4 * k * k - 1, 4 * k * k) * lower
        even = positive_fraction(rng)
        coeffs.append(even)
        coeffs.append(even * even / (ratio * coeffs[-2]))
    return Polynomial(coeffs)


def hutchinson_instance(rng: np.random.Generator, degree: int) -> Polynomial:
    """Degree ``m`` with every ratio ``a_k^2 / (a_{k-1} a_{k+1})`` in ``[4, 8)``."""
    coeffs = [Fraction(1), positive_fraction(rng)]
    for _ in range(1, degree):
        ratio = 4 + 4 * unit_fraction(rng) if rng.integers(0, 8) else Fraction(4)
        coeffs.append(coeffs[-1] ** 2 / (ratio * coeffs[-2]))
    return Polynomial(coeffs)


def positive_polynomial(rng: np.random.Generator, degree: int) -> Polynomial:
    """Arbitrary positive-coefficient polynomial (no ratio constraint)."""
    return Polynomial(positive_fraction(rng, Fraction(1, 16), Fraction(16)) for _ in range(degree + 1))


def random_polynomial(rng: np.random.Generator, degree: int, bound: int = 20) -> Polynomial:
    """Integer-over-small-denominator coefficients of either sign, exact degree."""
    coeffs = [Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, 6))) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = int(rng.integers(-bound, bound + 1))
    return Polynomial(coeffs + [Fraction(lead)])


def random_rational(rng: np.random.Generator, bound: int = 10) -> Fraction:
    return Fraction(int(rng.integers(-bound * 16, bound * 16 + 1)), int(rng.integers(1, 17)))
