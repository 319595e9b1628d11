"""Linear algebra over the two-element field on int bitsets.

A vector is an int (bit ``j`` is coordinate ``j``); a matrix is a list of
row vectors.
"""

from __future__ import annotations


def rref(rows, ncols):
    """Reduced row echelon form. Returns ``(rows, pivot_columns)``."""
    work = [r for r in rows if r]
    pivots = []
    rank = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = next((i for i in range(rank, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and work[i] & bit:
                work[i] ^= work[rank]
        pivots.append(col)
        rank += 1
    return work[:rank], pivots


def rank(rows, ncols) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols) -> list[int]:
    """Basis of ``{x : row . x = 0 for every row}``."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, pc in zip(reduced, pivots):
            if (row >> free) & 1:
                v |= 1 << pc
        basis.append(v)
    return basis


def in_span(vec, basis, ncols) -> bool:
    return rank(list(basis) + [vec], ncols) == rank(list(basis), ncols)


def mat_vec(matrix, vec) -> int:
    out = 0
    for i, row in enumerate(matrix):
        out |= (bin(row & vec).count("1") & 1) << i
    return out


def from_columns(columns, nrows):
    rows = [0] * nrows
    for j, col in enumerate(columns):
        for i in range(nrows):
            if (col >> i) & 1:
                rows[i] |= 1 << j
    return rows


def mat_mul(a, b, inner):
    """Product ``a @ b`` where ``a`` has ``inner`` columns."""
    out = []
    for row in a:
        acc = 0
        for k in range(inner):
            if (row >> k) & 1:
                acc ^= b[k]
        out.append(acc)
    return out
