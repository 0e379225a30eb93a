"""Exact univariate polynomials.

Coefficients are stored constant term first. Rational input (``int``,
``Fraction`` or numeric strings) is normalized to ``Fraction``; any other
exact field scalar that supports ``+ - * /`` and comparison against ``0``
(for example :class:`polycert.numberfield.FieldElement`) is kept as is.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

__all__ = [
    "ParseError",
    "Polynomial",
    "derivative",
    "evaluate",
    "format_scalar",
    "gcd",
    "parse",
    "serialize",
    "square_free_part",
]


class ParseError(ValueError):
    """Malformed coefficient text; ``position`` is the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _coerce(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not polynomial coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError("float coefficients are not accepted; use Fraction or a string")
    if isinstance(value, str):
        return parse_scalar(value)
    return value


class Polynomial:
    """Immutable polynomial ``sum(coeffs[k] * x**k)``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = (0,)):
        cs = [_coerce(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "Polynomial":
        zero = coeff * 0
        return cls([zero] * degree + [coeff])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def deg(self) -> int:
        return len(self._coeffs) - 1

    @property
    def lc(self):
        return self._coeffs[-1]

    def is_zero(self) -> bool:
        return self.deg == 0 and self._coeffs[0] == 0

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return self._coeffs[0] * 0

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_scalar(c) for c in self._coeffs)}])"

    def __call__(self, x):
        return evaluate(self, x)

    # arithmetic

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self), len(other))
        return Polynomial(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self), len(other))
        return Polynomial(self[k] - other[k] for k in range(n))

    def __rsub__(self, other) -> "Polynomial":
        return -self + other

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = _coerce(other)
            return Polynomial(c * other for c in self._coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial([self._coeffs[0] * 0])
        out = [self._coeffs[0] * 0] * (self.deg + other.deg + 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    def __rmul__(self, other) -> "Polynomial":
        return self * other

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Polynomial([self._coeffs[0] * 0 + 1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, divisor: "Polynomial"):
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dd = divisor.deg
        lead = divisor.lc
        zero = self._coeffs[0] * 0
        if self.deg < dd:
            return Polynomial([zero]), self
        quot = [zero] * (self.deg - dd + 1)
        for shift in range(self.deg - dd, -1, -1):
            q = rem[shift + dd] / lead
            quot[shift] = q
            if q == 0:
                continue
            for j, b in enumerate(divisor._coeffs):
                rem[shift + j] = rem[shift + j] - q * b
        return Polynomial(quot), Polynomial(rem[:dd] or [zero])

    def __floordiv__(self, divisor: "Polynomial") -> "Polynomial":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "Polynomial") -> "Polynomial":
        return divmod(self, divisor)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ValueError("zero polynomial has no monic form")
        lead = self.lc
        return Polynomial(c / lead for c in self._coeffs)

    def derivative(self) -> "Polynomial":
        return derivative(self)

    def compose_scale(self, scale) -> "Polynomial":
        """Return ``p(scale * x)``."""
        out, power = [], _coerce(1)
        scale = _coerce(scale)
        for c in self._coeffs:
            out.append(c * power)
            power = power * scale
        return Polynomial(out)


def _as_poly(value):
    if isinstance(value, Polynomial):
        return value
    try:
        return Polynomial([value])
    except TypeError:
        return NotImplemented


def evaluate(p: Polynomial, x):
    """Horner evaluation, exact for exact inputs."""
    acc = p.coeffs[-1] * 1
    for c in reversed(p.coeffs[:-1]):
        acc = acc * x + c
    return acc


def derivative(p: Polynomial) -> Polynomial:
    if p.deg == 0:
        return Polynomial([p.coeffs[0] * 0])
    return Polynomial(k * c for k, c in enumerate(p.coeffs) if k > 0)


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean remainder sequence."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of zero polynomials undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, (a % b)
        if not b.is_zero():
            b = b.monic()
    return a.monic()


def square_free_part(p: Polynomial) -> Polynomial:
    """Monic ``p / gcd(p, p')``."""
    if p.is_zero():
        raise ValueError("square-free part of the zero polynomial is undefined")
    if p.deg == 0:
        return p.monic()
    return (p // gcd(p, derivative(p))).monic()


# text format

_SCALAR = re.compile(
    r"""\s*(
        [+-]?\d+\s*/\s*[+-]?\d+          # p/q
      | [+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?   # integer or decimal
    )\s*$""",
    re.VERBOSE,
)


def parse_scalar(token: str, position: int = 0) -> Fraction:
    m = _SCALAR.match(token)
    if not m:
        raise ParseError(f"malformed rational {token.strip()!r}", position)
    text = m.group(1).replace(" ", "")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in {text!r}", position)
        return Fraction(int(num), int(den))
    return Fraction(text)


def parse(text: str) -> Polynomial:
    """Parse ``"a0, a1, ..."`` (constant term first)."""
    if not text.strip():
        raise ParseError("empty coefficient list", 0)
    coeffs = []
    offset = 0
    for token in text.split(","):
        lead = len(token) - len(token.lstrip())
        coeffs.append(parse_scalar(token, offset + lead))
        offset += len(token) + 1
    return Polynomial(coeffs)


def format_scalar(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, int):
        return str(value)
    return str(value)


def serialize(p: Polynomial) -> str:
    if not p.is_rational():
        raise TypeError("only rational polynomials have a text form")
    return ", ".join(str(c) for c in p.coeffs)
