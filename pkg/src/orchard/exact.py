"""Exact integer linear algebra for orientation predicates."""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def bareiss_det(matrix) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Every intermediate entry is a minor of the input, so bit growth stays
    polynomial and the exact divisions never leave the integers.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_sign(matrix) -> int:
    d = bareiss_det(matrix)
    return (d > 0) - (d < 0)


def integer_rank(rows) -> int:
    """Rank over the rationals of an integer matrix (fraction-free)."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, len(a)):
            f = a[i][col]
            a[i] = [(a[i][j] * p - f * a[rank][j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(a):
            break
    return rank


def clear_denominators(points) -> list[list[int]]:
    """Scale rational points by one positive integer so every coordinate is integral."""
    scale = 1
    for p in points:
        for c in p:
            scale = lcm(scale, Fraction(c).denominator)
    return [[int(Fraction(c) * scale) for c in p] for p in points]
