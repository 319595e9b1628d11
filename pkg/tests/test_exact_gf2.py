import random
from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, strategies as st

from orchard import gf2
from orchard.exact import bareiss_det, clear_denominators, det_sign, integer_rank
from orchard.signfn import sorting_parity


def leibniz_det(m):
    n = len(m)
    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction(-1 if sorting_parity(perm) else 1)
        for i, j in enumerate(perm):
            term *= m[i][j]
        total += term
    return total


def fraction_rank(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                f = a[i][col] / a[rank][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


matrices = st.integers(0, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-10**12, 10**12), min_size=n, max_size=n), min_size=n, max_size=n))
small_entries = st.integers(0, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=n, max_size=n))


@given(matrices)
def test_bareiss_matches_leibniz(m):
    assert bareiss_det(m) == leibniz_det(m)


@given(small_entries)
def test_bareiss_on_singular_prone_matrices(m):
    assert bareiss_det(m) == leibniz_det(m)


def test_det_sign_examples():
    assert det_sign([[1, 0], [-1, 1]]) == 1
    assert det_sign([[0, 1], [1, 0]]) == -1
    assert det_sign([[1, 2], [2, 4]]) == 0
    assert bareiss_det([]) == 1


@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r))))
def test_integer_rank_matches_fraction_rank(rows):
    assert integer_rank(rows) == fraction_rank(rows)


def test_clear_denominators_scales_uniformly():
    pts = [(Fraction(1, 2), Fraction(3)), (Fraction(-2, 3), Fraction(5, 4))]
    out = clear_denominators(pts)
    assert out == [[6, 36], [-8, 15]]


def brute_kernel(rows, ncols):
    return [v for v in range(1 << ncols) if all(bin(r & v).count("1") % 2 == 0 for r in rows)]


def span(basis):
    out = {0}
    for b in basis:
        out |= {x ^ b for x in out}
    return out


@given(st.integers(1, 9).flatmap(lambda c: st.tuples(st.just(c), st.lists(st.integers(0, (1 << c) - 1), max_size=8))))
def test_nullspace_against_enumeration(args):
    ncols, rows = args
    basis = gf2.nullspace(rows, ncols)
    assert span(basis) == set(brute_kernel(rows, ncols))
    assert len(span(basis)) == 2 ** len(basis)
    assert gf2.rank(rows, ncols) + len(basis) == ncols


def test_in_span_and_products():
    basis = [0b011, 0b110]
    assert gf2.in_span(0b101, basis, 3)
    assert not gf2.in_span(0b001, basis, 3)
    a = [0b01, 0b11]  # rows of a 2x2 matrix
    b = [0b10, 0b01]
    assert gf2.mat_mul(a, b, 2) == [0b10, 0b11]
    assert gf2.mat_vec(a, 0b01) == 0b11
    assert gf2.from_columns([0b01, 0b11], 2) == [0b11, 0b10]
