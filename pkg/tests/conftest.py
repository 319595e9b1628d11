import random
from math import comb

import pytest
from hypothesis import strategies as st

from orchard.signfn import ANTISYMMETRIC, SYMMETRIC, Permutation, SignFunction


def all_sign_functions(n, l):
    kinds = (SYMMETRIC,) if l == 1 else (SYMMETRIC, ANTISYMMETRIC)
    for kind in kinds:
        for bits in range(1 << comb(n, l)):
            yield SignFunction(n, l, kind, bits)


def random_sign_function(rng, n, l, kind=None):
    if kind is None:
        kind = rng.choice((SYMMETRIC, ANTISYMMETRIC))
    return SignFunction(n, l, kind, rng.getrandbits(comb(n, l)))


def random_permutation(rng, n):
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(tuple(images))


@st.composite
def shapes(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    l = draw(st.integers(1, n))
    return n, l


@st.composite
def sign_functions(draw, max_n=7, shape=None):
    n, l = shape if shape is not None else draw(shapes(max_n))
    kind = draw(st.sampled_from((SYMMETRIC, ANTISYMMETRIC)))
    bits = draw(st.integers(0, (1 << comb(n, l)) - 1))
    return SignFunction(n, l, kind, bits)


@st.composite
def permutations(draw, n):
    return Permutation(tuple(draw(st.permutations(range(n)))))


@pytest.fixture
def rng():
    return random.Random(20240601)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
