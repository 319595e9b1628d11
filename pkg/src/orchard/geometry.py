"""Generic point configurations in R^d and their orchard colorings.

All predicates are exact: rational coordinates are scaled to integers once
per configuration, then only signs of integer determinants are used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import NamedTuple, Optional

from orchard.cochain import TwoPartition, integrate, is_closed
from orchard.errors import BudgetError, NonGenericError
from orchard.exact import bareiss_det, clear_denominators, integer_rank
from orchard.morphism import OrchardReport, binom, orchard_partition
from orchard.signfn import (
    ANTISYMMETRIC,
    SYMMETRIC,
    Permutation,
    SignFunction,
    sorted_subsets,
)


def to_scalar(value) -> Fraction:
    """Exact rational from an int, Fraction, or a decimal / ``p/q`` string."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"coordinates must be exact (int, Fraction or str), got {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"unsupported coordinate type {type(value).__name__}")


class Genericity(NamedTuple):
    generic: bool
    witness: Optional[tuple[int, ...]]

    def __bool__(self):
        return self.generic


@dataclass(frozen=True)
class Configuration:
    """``n`` labeled points in R^d with exact rational coordinates."""

    dimension: int
    points: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        d = self.dimension
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"dimension must be a positive integer, got {d!r}")
        pts = []
        for k, p in enumerate(self.points):
            p = tuple(to_scalar(c) for c in p)
            if len(p) != d:
                raise ValueError(f"point {k} has {len(p)} coordinates, expected {d}")
            pts.append(p)
        if not pts:
            raise ValueError("a configuration needs at least one point")
        object.__setattr__(self, "points", tuple(pts))

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def int_points(self) -> list[list[int]]:
        return clear_denominators(self.points)

    @cached_property
    def _simplex_signs(self) -> list[int]:
        # orientation sign of each sorted (d+1)-subset, colex order; 0 if degenerate
        d = self.dimension
        if self.n < d + 1:
            return []
        return [_orientation_sign(self.int_points, s) for s in sorted_subsets(self.n, d + 1)]

    @cached_property
    def genericity(self) -> Genericity:
        return _genericity(self)

    def relabel(self, g: Permutation) -> Configuration:
        """The configuration whose point ``g(x)`` is this one's point ``x``."""
        if g.size != self.n:
            raise ValueError("permutation size does not match the configuration")
        pts = [None] * self.n
        for x, p in enumerate(self.points):
            pts[g(x)] = p
        return Configuration(self.dimension, tuple(pts))

    def map_points(self, f) -> Configuration:
        return Configuration(self.dimension, tuple(tuple(f(p)) for p in self.points))


def _orientation_sign(pts, tup) -> int:
    rows = []
    prev = pts[tup[0]]
    for idx in tup[1:]:
        cur = pts[idx]
        rows.append([c - b for c, b in zip(cur, prev)])
        prev = cur
    det = bareiss_det(rows)
    return (det > 0) - (det < 0)


def _affine_rank(pts, subset) -> int:
    base = pts[subset[0]]
    return integer_rank([[c - b for c, b in zip(pts[i], base)] for i in subset[1:]])


def _minimal_witness(config: Configuration) -> tuple[int, ...]:
    pts = config.int_points
    for k in range(1, min(config.dimension, config.n - 1) + 1):
        for subset in combinations(range(config.n), k + 1):
            if _affine_rank(pts, subset) < k:
                return subset
    raise AssertionError("no degenerate subset found")


def _genericity(config: Configuration) -> Genericity:
    n, d = config.n, config.dimension
    if n >= d + 1:
        ok = all(config._simplex_signs)
    else:
        ok = _affine_rank(config.int_points, tuple(range(n))) == n - 1
    if ok:
        return Genericity(True, None)
    return Genericity(False, _minimal_witness(config))


def is_generic(config: Configuration) -> Genericity:
    """Whether every k+1 <= d+1 points span a k-dimensional affine subspace.

    On failure the witness is a smallest affinely dependent subset.
    """
    return config.genericity


def require_generic(config: Configuration) -> None:
    g = config.genericity
    if not g.generic:
        raise NonGenericError(g.witness)


def orientation(config: Configuration, tup) -> int:
    """Sign of det(x_1 - x_0, x_2 - x_1, ..., x_d - x_{d-1})."""
    d = config.dimension
    tup = tuple(tup)
    if len(tup) != d + 1:
        raise ValueError(f"orientation needs {d + 1} indices, got {len(tup)}")
    if len(set(tup)) != len(tup) or not all(0 <= i < config.n for i in tup):
        raise ValueError(f"indices must be distinct and in range: {tup}")
    s = _orientation_sign(config.int_points, tup)
    if s == 0:
        raise NonGenericError(sorted(tup))
    return s


def orientation_function(config: Configuration) -> SignFunction:
    """The antisymmetric sign function of arity d+1 given by simplex orientations."""
    n, d = config.n, config.dimension
    if n < d + 1:
        raise ValueError(f"need at least {d + 1} points in dimension {d}, got {n}")
    bits = 0
    for r, s in enumerate(config._simplex_signs):
        if s == 0:
            raise NonGenericError(config.genericity.witness)
        if s < 0:
            bits |= 1 << r
    return SignFunction(n, d + 1, ANTISYMMETRIC, bits)


def _hyperplane(pts, q):
    """Integer normal ``c`` and offset ``h`` with ``c.x = h`` on aff(q)."""
    d = len(pts[0])
    base = pts[q[0]]
    a = [[c - b for c, b in zip(pts[i], base)] for i in q[1:]]
    normal = []
    for k in range(d):
        minor = [row[:k] + row[k + 1:] for row in a]
        cof = bareiss_det(minor)
        normal.append(-cof if (d - 1 + k) & 1 else cof)
    offset = sum(c * b for c, b in zip(normal, base))
    return normal, offset


def _side_signs(config: Configuration, q) -> list[int]:
    pts = config.int_points
    normal, offset = _hyperplane(pts, q)
    if not any(normal):
        raise NonGenericError(q)
    sides = []
    for p in pts:
        v = sum(c * x for c, x in zip(normal, p)) - offset
        sides.append((v > 0) - (v < 0))
    return sides


def separation_counts(config: Configuration) -> dict[tuple[int, int], int]:
    """``s(i, j)`` for all ``i < j``: hyperplanes through d other points separating i from j."""
    require_generic(config)
    n, d = config.n, config.dimension
    counts = {(i, j): 0 for i, j in combinations(range(n), 2)}
    if n < d + 2:
        return counts
    for q in combinations(range(n), d):
        sides = _side_signs(config, q)
        outside = [i for i in range(n) if i not in q]
        for a, i in enumerate(outside):
            if sides[i] == 0:
                raise NonGenericError(sorted(q + (i,)))
            for j in outside[a + 1:]:
                if sides[i] != sides[j]:
                    counts[(i, j)] += 1
    return counts


def separation_count(config: Configuration, i: int, j: int) -> int:
    if i == j:
        raise ValueError("separation needs two distinct points")
    if not (0 <= i < config.n and 0 <= j < config.n):
        raise ValueError(f"indices out of range for n={config.n}")
    require_generic(config)
    d = config.dimension
    rest = [k for k in range(config.n) if k not in (i, j)]
    count = 0
    for q in combinations(rest, d):
        sides = _side_signs(config, q)
        if sides[i] == 0 or sides[j] == 0:
            raise NonGenericError(sorted(q + (i if sides[i] == 0 else j,)))
        if sides[i] != sides[j]:
            count += 1
    return count


def separation_cocycle(config: Configuration) -> SignFunction:
    """``(-1)^(C(n-3, d-1) + s(i, j))`` as a symmetric pair function."""
    n, d = config.n, config.dimension
    if n < 2:
        raise ValueError("separation needs at least two points")
    parity = binom(n - 3, d - 1) & 1
    counts = separation_counts(config)
    bits = 0
    for r, pair in enumerate(sorted_subsets(n, 2)):
        bits |= ((counts[pair] + parity) & 1) << r
    return SignFunction(n, 2, SYMMETRIC, bits)


def partition_by_separation(config: Configuration) -> TwoPartition:
    """Points i, j share a class iff ``s(i, j) = C(n-3, d-1) mod 2``."""
    sigma = separation_cocycle(config)
    if not is_closed(sigma):
        raise AssertionError("separation parities do not form a cocycle")
    return integrate(sigma, 0)


def orchard_coloring(config: Configuration, check: bool = False) -> OrchardReport:
    """Orchard morphism applied to the orientation function of ``config``.

    With ``check=True`` the result is compared against
    :func:`partition_by_separation` and an ``AssertionError`` is raised on
    disagreement.
    """
    require_generic(config)
    report = orchard_partition(orientation_function(config))
    if check and config.n >= 2:
        other = partition_by_separation(config)
        if other != report.partition:
            raise AssertionError("orchard coloring disagrees with the separation count")
    return report


def random_configuration(rng, n: int, d: int, box: int) -> Configuration:
    """Integer coordinates drawn uniformly from ``[0, box]``."""
    return Configuration(d, tuple(tuple(rng.randint(0, box) for _ in range(d)) for _ in range(n)))


def random_generic_configuration(rng, n: int, d: int, box: int, max_tries: int = 10_000) -> Configuration:
    """Rejection-sample a generic configuration from the integer box."""
    for _ in range(max_tries):
        config = random_configuration(rng, n, d, box)
        if config.genericity.generic:
            return config
    raise BudgetError(f"no generic configuration of {n} points in [0, {box}]^{d} after {max_tries} tries")
