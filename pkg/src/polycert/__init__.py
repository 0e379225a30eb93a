"""Positivity certificates for polynomials with positive coefficients."""

from .poly import ParseError, Polynomial, derivative, evaluate, gcd, parse, serialize, square_free_part

__version__ = "0.1.0"

__all__ = [
    "ParseError",
    "Polynomial",
    "derivative",
    "evaluate",
    "gcd",
    "parse",
    "serialize",
    "square_free_part",
]
