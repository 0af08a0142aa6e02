"""Exact determinants by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from ._polycore import Rational

Matrix = tuple[tuple[Fraction, ...], ...]


def bareiss_det(matrix: Sequence[Sequence[Rational]]) -> Fraction:
    """Exact determinant by Bareiss' fraction-free elimination.

    Every division is exact (the previous pivot divides the 2x2 minor), so
    intermediate entries stay as small as the minors of the input. The
    empty matrix has determinant 1.
    """
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) / previous
            m[i][k] = Fraction(0)
        previous = pivot
    return sign * m[n - 1][n - 1]


def leading_minor(matrix: Sequence[Sequence[Rational]], order: int) -> Fraction:
    """Determinant of the top-left ``order x order`` block; order 0 gives 1."""
    return bareiss_det([row[:order] for row in matrix[:order]])

