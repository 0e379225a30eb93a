"""Polynomials that sit exactly on the boundary of the ratio conditions.

With ``a = pi / (n + 2)`` the even extremal polynomial of degree ``2n`` is

    Q(x) = sum_{k=1..n} sin(k a) sin((k+1) a) (1 + x)^2 x^{2k-2}

with closed-form coefficients ``a_{2k} = 2 sin^2((k+1)a) cos a`` and
``a_{2k-1} = 2 sin(k a) sin((k+1) a)``; every ratio equals ``1/cos^2 a`` and
``-1`` is a root of multiplicity at least 2.

The odd one, of degree ``2n+1``, is ``S(x) = H(x) - H(-1)`` where ``H`` is the
antiderivative of ``Q`` vanishing at 0; ``-1`` is a root of multiplicity at
least 3 and its ratios equal ``(4k^2-1)/(4k^2) / cos^2 a``.

Two representations are produced: exact elements of ``Q(2 cos a)`` and
``mpmath`` numbers at a requested precision.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath

from .numberfield import real_cyclotomic_field
from .poly import Polynomial

__all__ = [
    "DEFAULT_PRECISION",
    "ExtremalEven",
    "ExtremalOdd",
    "Mode",
    "perturb",
    "perturb_toward_interior",
    "rational_instance",
    "rationalize",
    "summed_form",
    "theorem2_polynomial",
    "theorem3_polynomial",
    "verify_extremal_ratios",
]

DEFAULT_PRECISION = 60
MIN_PRECISION = 30
RATIONALIZE_DENOMINATOR = 10**50


class Mode(str, enum.Enum):
    EXACT = "exact"
    NUMERIC = "numeric"


@dataclass(frozen=True)
class ExtremalEven:
    n: int
    mode: Mode
    coeffs_exact: Optional[tuple] = None
    coeffs_numeric: Optional[tuple] = None
    precision: Optional[int] = None

    @property
    def alpha(self) -> tuple:
        """``(1, n + 2)``, meaning ``pi * 1 / (n + 2)``."""
        return (1, self.n + 2)

    @property
    def degree(self) -> int:
        return 2 * self.n

    @property
    def coeffs(self) -> tuple:
        return self.coeffs_exact if self.mode is Mode.EXACT else self.coeffs_numeric

    def polynomial(self) -> Polynomial:
        """Exact coefficients as a :class:`Polynomial` over the field."""
        if self.mode is not Mode.EXACT:
            raise ValueError("polynomial() needs exact mode; use rationalize() for numeric")
        return Polynomial(self.coeffs_exact)


@dataclass(frozen=True)
class ExtremalOdd(ExtremalEven):
    @property
    def degree(self) -> int:
        return 2 * self.n + 1

    @property
    def b_coeffs(self) -> tuple:
        return self.coeffs


def _check(n: int, mode: Mode, precision: int) -> Mode:
    if n < 1:
        raise ValueError("n must be >= 1")
    mode = Mode(mode)
    if mode is Mode.NUMERIC and precision < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} digits")
    return mode


def _even_exact(n: int) -> list:
    field = real_cyclotomic_field(n)
    cos_a = field.cos(1)
    out = [None] * (2 * n + 1)
    for k in range(n + 1):
        out[2 * k] = field.two_sin_product(k + 1, k + 1) * cos_a
    for k in range(1, n + 1):
        out[2 * k - 1] = field.two_sin_product(k, k + 1)
    return out


def _even_numeric(n: int, dps: int) -> list:
    with mpmath.workdps(dps):
        a = mpmath.pi / (n + 2)
        out = [None] * (2 * n + 1)
        for k in range(n + 1):
            out[2 * k] = 2 * mpmath.sin((k + 1) * a) ** 2 * mpmath.cos(a)
        for k in range(1, n + 1):
            out[2 * k - 1] = 2 * mpmath.sin(k * a) * mpmath.sin((k + 1) * a)
        return out


def theorem2_polynomial(n: int, mode: Mode = Mode.EXACT, precision: int = DEFAULT_PRECISION) -> ExtremalEven:
    mode = _check(n, mode, precision)
    if mode is Mode.EXACT:
        return ExtremalEven(n, mode, coeffs_exact=tuple(_even_exact(n)))
    return ExtremalEven(n, mode, coeffs_numeric=tuple(_even_numeric(n, precision)), precision=precision)


def _h_weight(k: int) -> Fraction:
    # -1/(2k-1) + 1/k - 1/(2k+1) = -1 / (k (2k-1) (2k+1))
    return Fraction(-1, k * (2 * k - 1) * (2 * k + 1))


def theorem3_polynomial(n: int, mode: Mode = Mode.EXACT, precision: int = DEFAULT_PRECISION) -> ExtremalOdd:
    mode = _check(n, mode, precision)
    if mode is Mode.EXACT:
        field = real_cyclotomic_field(n)
        a = _even_exact(n)
        h_at_minus_one = sum(
            (field.two_sin_product(k, k + 1) / 2 * _h_weight(k) for k in range(1, n + 1)),
            field.from_rational(0),
        )
        b = _odd_from_even(a, -h_at_minus_one)
        return ExtremalOdd(n, mode, coeffs_exact=tuple(b))
    a = _even_numeric(n, precision)
    with mpmath.workdps(precision):
        alpha = mpmath.pi / (n + 2)
        h_at_minus_one = mpmath.fsum(
            mpmath.sin(k * alpha) * mpmath.sin((k + 1) * alpha) * _h_weight(k).numerator / _h_weight(k).denominator
            for k in range(1, n + 1)
        )
        b = _odd_from_even(a, -h_at_minus_one)
    return ExtremalOdd(n, mode, coeffs_numeric=tuple(b), precision=precision)


def _odd_from_even(a: list, b0) -> list:
    """Coefficients of ``b0 + integral_0^x Q``."""
    return [b0] + [c / (j + 1) for j, c in enumerate(a)]


def summed_form(n: int) -> Polynomial:
    """Exact expansion of ``sum sin(ka) sin((k+1)a) (1+x)^2 x^{2k-2}`` term by term."""
    field = real_cyclotomic_field(n)
    zero = field.from_rational(0)
    total = Polynomial([zero])
    square = Polynomial([1, 2, 1])
    for k in range(1, n + 1):
        weight = field.two_sin_product(k, k + 1) / 2
        total = total + square * Polynomial.monomial(2 * k - 2, weight)
    return total


def _ratio_targets(e: ExtremalEven):
    """Yield ``(numerator, denominator, factor)`` with ``num/den == factor / cos^2 a`` expected."""
    c = e.coeffs
    if isinstance(e, ExtremalOdd):
        for k in range(1, e.n + 1):
            yield c[2 * k] ** 2, c[2 * k - 1] * c[2 * k + 1], Fraction(4 * k * k - 1, 4 * k * k)
    else:
        for k in range(e.n):
            yield c[2 * k + 1] ** 2, c[2 * k] * c[2 * k + 2], Fraction(1)


def extremal_ratios(e: ExtremalEven) -> list:
    return [num / den for num, den, _ in _ratio_targets(e)]


def verify_extremal_ratios(e: ExtremalEven) -> bool:
    """Check every ratio against its boundary value.

    Exact mode: ``num * cos^2 a == factor * den`` in the field. Numeric mode:
    agreement within ``10^-(precision - 10)``.
    """
    if e.mode is Mode.EXACT:
        field = real_cyclotomic_field(e.n)
        cos_sq = field.cos(1) ** 2
        return all(num * cos_sq == den * factor for num, den, factor in _ratio_targets(e))
    with mpmath.workdps(e.precision):
        tol = mpmath.mpf(10) ** (-(e.precision - 10))
        bound = 1 / mpmath.cos(mpmath.pi / (e.n + 2)) ** 2
        return all(
            abs(num / den - bound * factor.numerator / factor.denominator) <= tol
            for num, den, factor in _ratio_targets(e)
        )


def perturb(e: ExtremalEven, epsilon: Fraction) -> Polynomial:
    """Scale odd-index coefficients: by ``1 - eps`` if ``eps >= 0``, else by ``1 / (1 - |eps|)``."""
    epsilon = Fraction(epsilon)
    if not -1 < epsilon < 1:
        raise ValueError("epsilon must lie in (-1, 1)")
    factor = 1 - epsilon if epsilon >= 0 else 1 / (1 + epsilon)
    p = e.polynomial()
    return Polynomial(c * factor if k % 2 else c for k, c in enumerate(p.coeffs))


def perturb_toward_interior(e: ExtremalEven, epsilon: Fraction) -> Polynomial:
    """Move every ratio to ``(1 - eps)^2 / cos^2 a``, strictly inside the condition."""
    epsilon = Fraction(epsilon)
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    return perturb(e, epsilon)


def rational_instance(e: ExtremalEven) -> Optional[Polynomial]:
    """A rational polynomial positively proportional to ``e``, if one exists.

    Returns the coefficients themselves when they are rational, otherwise
    the coefficients divided by the constant term when all quotients are
    rational (``n`` in {1, 2, 4}), else ``None``.
    """
    coeffs = e.polynomial().coeffs
    if all(c.is_rational() for c in coeffs):
        return Polynomial(c.as_fraction() for c in coeffs)
    scaled = [c / coeffs[0] for c in coeffs]
    if all(c.is_rational() for c in scaled):
        return Polynomial(c.as_fraction() for c in scaled)
    return None


def numeric_coefficients(e: ExtremalEven, precision: int = DEFAULT_PRECISION) -> list:
    if e.mode is Mode.NUMERIC:
        return list(e.coeffs_numeric)
    return [c.to_mpf(precision) for c in e.coeffs_exact]


def rationalize(e: ExtremalEven, denominator: int = RATIONALIZE_DENOMINATOR) -> Polynomial:
    """Round each coefficient to the nearest multiple of ``1/denominator``."""
    prec = e.precision or DEFAULT_PRECISION
    out = []
    with mpmath.workdps(prec + 20):
        for c in numeric_coefficients(e, prec):
            out.append(Fraction(int(mpmath.nint(c * denominator)), denominator))
    return Polynomial(out)


def exact_json(e: ExtremalEven) -> dict:
    if e.mode is not Mode.EXACT:
        raise ValueError("exact_json needs exact mode")
    return {
        "n": e.n,
        "odd": isinstance(e, ExtremalOdd),
        "basis": "cos(j*pi/(n+2))",
        "coeffs": [[[j, str(v)] for j, v in c.cos_combination().items()] for c in e.coeffs_exact],
    }


def numeric_text(e: ExtremalEven, precision: Optional[int] = None) -> str:
    """Decimal coefficient list in the comma-separated text format."""
    prec = precision or e.precision or DEFAULT_PRECISION
    return ", ".join(mpmath.nstr(c, prec, strip_zeros=False) for c in numeric_coefficients(e, prec))

