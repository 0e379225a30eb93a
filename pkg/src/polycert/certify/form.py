"""The tridiagonal quadratic form of an even-degree polynomial.

For ``P(x) = sum a_k x^k`` of degree ``2n`` the form is

    Q_P(x_0..x_n) = sum a_{2k} x_k^2 + sum a_{2k+1} x_k x_{k+1}

and ``P(x) = Q_P(1, x, ..., x^n)``. Its symmetric matrix has diagonal
``a_0, a_2, ..., a_{2n}`` and off-diagonal ``a_1/2, ..., a_{2n-1}/2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

from ..poly import Polynomial

__all__ = [
    "TridiagonalForm",
    "all_minors_nonnegative",
    "build_form",
    "cofactor_determinant",
    "dense_matrix",
    "elimination_determinant",
    "is_positive_definite",
    "iter_minors",
    "leading_minors",
    "quadratic_form_value",
]

MINOR_ENUMERATION_CAP = 7


@dataclass(frozen=True)
class TridiagonalForm:
    diag: tuple
    offdiag: tuple

    def __post_init__(self):
        if len(self.diag) != len(self.offdiag) + 1:
            raise ValueError("diag must be one longer than offdiag")
        if not all(v > 0 for v in self.diag + self.offdiag):
            raise ValueError("form entries must be strictly positive")

    @property
    def size(self) -> int:
        return len(self.diag)


def check_positive_coefficients(p: Polynomial) -> None:
    for k, a in enumerate(p.coeffs):
        if not a > 0:
            raise ValueError(f"nonpositive coefficient at index {k}")


def build_form(p: Polynomial) -> TridiagonalForm:
    if p.deg % 2 or p.deg < 2:
        raise ValueError("even degree required (degree >= 2)")
    check_positive_coefficients(p)
    n = p.deg // 2
    return TridiagonalForm(
        diag=tuple(p[2 * k] for k in range(n + 1)),
        offdiag=tuple(p[2 * k + 1] / 2 for k in range(n)),
    )


def quadratic_form_value(f: TridiagonalForm, v: Sequence):
    if len(v) != f.size:
        raise ValueError(f"vector has length {len(v)}, form has size {f.size}")
    total = 0
    for k, d in enumerate(f.diag):
        total = total + d * v[k] * v[k]
    for k, e in enumerate(f.offdiag):
        total = total + 2 * e * v[k] * v[k + 1]
    return total


def leading_minors(f: TridiagonalForm) -> list:
    """Leading principal minors by the three-term recurrence."""
    minors = [f.diag[0]]
    prev = 1
    for j in range(1, f.size):
        cur = f.diag[j] * minors[-1] - f.offdiag[j - 1] * f.offdiag[j - 1] * prev
        prev = minors[-1]
        minors.append(cur)
    return minors


def is_positive_definite(f: TridiagonalForm) -> bool:
    """Sylvester: every leading principal minor strictly positive."""
    return all(m > 0 for m in leading_minors(f))


def dense_matrix(f: TridiagonalForm) -> list:
    zero = f.diag[0] * 0
    m = [[zero] * f.size for _ in range(f.size)]
    for i, d in enumerate(f.diag):
        m[i][i] = d
    for i, e in enumerate(f.offdiag):
        m[i][i + 1] = m[i + 1][i] = e
    return m


def _perm_sign(perm) -> int:
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def cofactor_determinant(m: Sequence[Sequence]):
    """Leibniz expansion; only for small matrices."""
    size = len(m)
    if size == 0:
        return 1
    total = 0
    for perm in permutations(range(size)):
        term = _perm_sign(perm)
        for i, j in enumerate(perm):
            term = term * m[i][j]
            if term == 0:
                break
        total = total + term
    return total


def elimination_determinant(m: Sequence[Sequence]):
    """Gaussian elimination over an exact field."""
    a = [list(row) for row in m]
    size = len(a)
    det = 1
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return a[0][0] * 0 if size else 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        for r in range(col + 1, size):
            if a[r][col] == 0:
                continue
            factor = a[r][col] / p
            for c in range(col, size):
                a[r][c] = a[r][c] - factor * a[col][c]
    return det


def iter_minors(f: TridiagonalForm) -> Iterator[tuple]:
    """Yield ``(rows, cols, det)`` for every square submatrix."""
    if f.size > MINOR_ENUMERATION_CAP:
        raise ValueError(f"exhaustive minor check capped at {MINOR_ENUMERATION_CAP}")
    m = dense_matrix(f)
    for k in range(1, f.size + 1):
        for rows in combinations(range(f.size), k):
            for cols in combinations(range(f.size), k):
                sub = [[m[i][j] for j in cols] for i in rows]
                yield rows, cols, elimination_determinant(sub)


def all_minors_nonnegative(f: TridiagonalForm) -> bool:
    return all(det >= 0 for _, _, det in iter_minors(f))
