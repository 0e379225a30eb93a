"""The real cyclotomic field ``Q(c)``, ``c = 2 cos(pi / (n + 2))``.

Elements are polynomials in ``c`` with rational coefficients reduced modulo
the minimal polynomial of ``c``, so equality is coefficient equality. Signs
are decided by refining the isolating interval of ``c`` taken from
:func:`polycert.certify.threshold.threshold` until interval evaluation of
the element excludes zero.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath

from .certify.threshold import generator_minimal_polynomial, threshold
from .poly import Polynomial, evaluate

__all__ = ["FieldElement", "RealCyclotomicField", "real_cyclotomic_field"]


def _interval_eval(coeffs, lo: Fraction, hi: Fraction) -> tuple:
    """Enclosure of ``sum(coeffs[k] x^k)`` over ``x in [lo, hi]``."""
    acc_lo = acc_hi = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        prods = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
        acc_lo, acc_hi = min(prods) + c, max(prods) + c
    return acc_lo, acc_hi


class RealCyclotomicField:
    """``Q(2 cos(pi / (n + 2)))`` with exact arithmetic and exact signs."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.modulus = generator_minimal_polynomial(n)
        t = threshold(n)
        if not (t.chebyshev_poly % self.modulus).is_zero():
            raise RuntimeError("minimal polynomial does not divide S_{n+1}")
        self._interval = t.isolating_interval
        self._lock = threading.Lock()
        self.degree = self.modulus.deg
        self.generator = self.element([0, 1])

    def __repr__(self) -> str:
        return f"RealCyclotomicField(n={self.n})"

    def __reduce__(self):
        return (real_cyclotomic_field, (self.n,))

    @property
    def angle_denominator(self) -> int:
        return self.n + 2

    def element(self, coeffs) -> "FieldElement":
        p = Polynomial(coeffs)
        if p.deg >= self.degree:
            p = p % self.modulus
        return FieldElement(self, p.coeffs)

    def from_rational(self, value) -> "FieldElement":
        return FieldElement(self, (Fraction(value),))

    def two_cos(self, j: int) -> "FieldElement":
        """``2 cos(j pi / (n + 2))`` via ``V_0 = 2, V_1 = c, V_{k+1} = c V_k - V_{k-1}``."""
        return self.element(_two_cos_poly(abs(j)))

    def cos(self, j: int) -> "FieldElement":
        return self.two_cos(j) / 2

    def two_sin_product(self, j: int, k: int) -> "FieldElement":
        """``2 sin(j a) sin(k a)`` with ``a = pi / (n + 2)``."""
        return self.cos(j - k) - self.cos(j + k)

    # sign machinery

    def generator_interval(self) -> tuple:
        return self._interval

    def _refine(self) -> None:
        with self._lock:
            lo, hi = self._interval
            if lo == hi:
                return
            mid = (lo + hi) / 2
            s_mid = evaluate(self.modulus, mid)
            if s_mid == 0:
                self._interval = (mid, mid)
            elif (s_mid > 0) == (evaluate(self.modulus, hi) > 0):
                self._interval = (lo, mid)
            else:
                self._interval = (mid, hi)

    def enclose(self, coeffs, excluding_zero: bool = False, width: Fraction = None) -> tuple:
        while True:
            lo, hi = self._interval
            if lo == hi:
                v = evaluate(Polynomial(coeffs), lo)
                return v, v
            a, b = _interval_eval(coeffs, lo, hi)
            done = True
            if excluding_zero and a <= 0 <= b:
                done = False
            if width is not None and b - a > width:
                done = False
            if done:
                return a, b
            self._refine()

    def to_mpf(self, coeffs, dps: int):
        with mpmath.workdps(dps + 10):
            c = 2 * mpmath.cos(mpmath.pi / (self.n + 2))
            acc = mpmath.mpf(0)
            for k in reversed(coeffs):
                acc = acc * c + mpmath.mpf(k.numerator) / k.denominator
            return +acc


@lru_cache(maxsize=None)
def real_cyclotomic_field(n: int) -> RealCyclotomicField:
    return RealCyclotomicField(n)


@lru_cache(maxsize=None)
def _two_cos_poly(j: int) -> tuple:
    prev, cur = Polynomial([2]), Polynomial([0, 1])
    if j == 0:
        return prev.coeffs
    for _ in range(j - 1):
        prev, cur = cur, Polynomial([0, 1]) * cur - prev
    return cur.coeffs


class FieldElement:
    """Immutable element of a :class:`RealCyclotomicField`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: RealCyclotomicField, coeffs: tuple):
        cs = list(coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(cs) or (Fraction(0),))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self.field, self.coeffs))

    def _lift(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field.n != self.field.n:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, (Fraction(other),))
        return None

    def is_rational(self) -> bool:
        return len(self.coeffs) == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.coeffs[0]

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return FieldElement(self.field, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-x for x in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            k = o.coeffs[0]
            return FieldElement(self.field, tuple(x * k for x in self.coeffs))
        return self.field.element(Polynomial(self.coeffs) * Polynomial(o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return FieldElement(self.field, (1 / self.coeffs[0],))
        # extended Euclid on (modulus, self)
        r0, r1 = self.field.modulus, Polynomial(self.coeffs)
        t0, t1 = Polynomial([0]), Polynomial([1])
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, t0 - q * t1
        # r0 is a nonzero constant since the modulus is irreducible
        return self.field.element(t0 * (1 / r0[0]))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = FieldElement(self.field, (Fraction(1),))
        for _ in range(k):
            out = out * self
        return out

    def sign(self) -> int:
        if len(self.coeffs) == 1:
            c = self.coeffs[0]
            return (c > 0) - (c < 0)
        lo, hi = self.field.enclose(self.coeffs, excluding_zero=True)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        return 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash((self.field.n, self.coeffs))

    def _cmp(self, other):
        o = self._lift(other)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s >= 0

    def __bool__(self):
        return self.coeffs != (Fraction(0),)

    def enclosure(self, width: Fraction = Fraction(1, 2**20)) -> tuple:
        """Rational ``(lo, hi)`` containing the element."""
        if len(self.coeffs) == 1:
            return self.coeffs[0], self.coeffs[0]
        return self.field.enclose(self.coeffs, width=width)

    def to_mpf(self, dps: int = 60):
        return self.field.to_mpf(self.coeffs, dps)

    def __float__(self):
        return float(self.to_mpf(20))

    def cos_combination(self) -> dict:
        """Coefficients on the basis ``cos(j pi / (n + 2))``.

        Uses ``c^i = sum_t binom(i, t) cos((i - 2t) pi / (n + 2))``.
        """
        out: dict = {}
        for i, g in enumerate(self.coeffs):
            if g == 0:
                continue
            if i == 0:
                out[0] = out.get(0, Fraction(0)) + g
                continue
            for t in range(i + 1):
                j = abs(i - 2 * t)
                out[j] = out.get(j, Fraction(0)) + g * comb(i, t)
        return {j: v for j, v in sorted(out.items()) if v != 0}

    def to_json(self) -> dict:
        return {
            "basis": "cos(j*pi/(n+2))",
            "n": self.field.n,
            "coeffs": [[j, str(v)] for j, v in self.cos_combination().items()],
        }

    def __str__(self) -> str:
        if len(self.coeffs) == 1:
            return str(self.coeffs[0])
        out = ""
        for j, v in self.cos_combination().items():
            if v == 0:
                continue
            mag = abs(v)
            if j == 0:
                body = str(mag)
            else:
                angle = f"pi/{self.field.n + 2}" if j == 1 else f"{j}*pi/{self.field.n + 2}"
                body = f"cos({angle})" if mag == 1 else f"{mag}*cos({angle})"
            if not out:
                out = body if v > 0 else f"-{body}"
            else:
                out += f" + {body}" if v > 0 else f" - {body}"
        return out or "0"

    def __repr__(self) -> str:
        return f"FieldElement(n={self.field.n}, {self})"
