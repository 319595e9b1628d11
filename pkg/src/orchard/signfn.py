"""Symmetric and antisymmetric ±1-valued functions on injective l-tuples.

A :class:`SignFunction` stores one sign per sorted l-subset of
``{0, ..., n-1}``. Subsets are ranked in colexicographic order and the signs
are packed into a Python int (bit set means ``-1``), so the group law is a
single XOR.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb


class SymmetryKind(enum.Enum):
    SYMMETRIC = 1
    ANTISYMMETRIC = -1

    def sign(self) -> int:
        return self.value

    @property
    def bit(self) -> int:
        return 0 if self is SymmetryKind.SYMMETRIC else 1

    @classmethod
    def from_bit(cls, bit: int) -> SymmetryKind:
        return cls.ANTISYMMETRIC if bit & 1 else cls.SYMMETRIC

    def __mul__(self, other: SymmetryKind) -> SymmetryKind:
        return SymmetryKind(self.value * other.value)


SYMMETRIC = SymmetryKind.SYMMETRIC
ANTISYMMETRIC = SymmetryKind.ANTISYMMETRIC


# ---------------------------------------------------------------------------
# Subset ranking (combinatorial number system)
# ---------------------------------------------------------------------------


def colex_rank(subset: Sequence[int]) -> int:
    """Rank of a strictly increasing tuple among subsets of the same size."""
    return sum(comb(s, i + 1) for i, s in enumerate(subset))


@lru_cache(maxsize=None)
def sorted_subsets(n: int, l: int) -> tuple[tuple[int, ...], ...]:
    """All strictly increasing l-tuples from range(n), in colex rank order."""
    return tuple(sorted(combinations(range(n), l), key=lambda t: t[::-1]))


@lru_cache(maxsize=None)
def subset_index(n: int, l: int) -> dict[tuple[int, ...], int]:
    return {s: r for r, s in enumerate(sorted_subsets(n, l))}


def sorting_parity(seq: Sequence[int]) -> int:
    """Parity (0 or 1) of the permutation sorting ``seq``; entries must be distinct."""
    inversions = 0
    m = len(seq)
    for i in range(m):
        a = seq[i]
        for j in range(i + 1, m):
            if seq[j] < a:
                inversions += 1
    return inversions & 1


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., n-1}``; ``images[x]`` is the image of ``x``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        object.__setattr__(self, "images", images)

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        images = list(range(n))
        images[a], images[b] = b, a
        return cls(tuple(images))

    @classmethod
    def cycle(cls, n: int) -> Permutation:
        """The n-cycle ``x -> x + 1 mod n``."""
        return cls(tuple((x + 1) % n for x in range(n)))

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        if other.size != self.size:
            raise ValueError("permutation sizes differ")
        return Permutation(tuple(self.images[y] for y in other.images))

    __matmul__ = compose

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def parity(self) -> int:
        return sorting_parity(self.images)


# ---------------------------------------------------------------------------
# Sign functions
# ---------------------------------------------------------------------------


def _sign_to_bit(value) -> int:
    if value == 1 and value is not True:
        return 0
    if value == -1:
        return 1
    raise ValueError(f"sign values must be +1 or -1, got {value!r}")


@dataclass(frozen=True)
class SignFunction:
    """An element of the group of symmetric/antisymmetric functions E^(l) -> {±1}.

    ``bits`` has bit ``r`` set when the sorted subset of colex rank ``r``
    maps to ``-1``. Instances are immutable; use :func:`make_sign_function`
    to build one from a table of signs.
    """

    n: int
    l: int
    kind: SymmetryKind
    bits: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"ground set size must be positive, got {self.n}")
        if not 1 <= self.l <= self.n:
            raise ValueError(f"arity {self.l} out of range 1..{self.n}")
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError("bit table has entries beyond the C(n, l) subsets")
        if self.l == 1 and self.kind is not SYMMETRIC:
            object.__setattr__(self, "kind", SYMMETRIC)

    @property
    def size(self) -> int:
        return comb(self.n, self.l)

    @classmethod
    def identity(cls, n: int, l: int) -> SignFunction:
        return cls(n, l, SYMMETRIC, 0)

    @classmethod
    def constant(cls, n: int, l: int, kind: SymmetryKind, value: int) -> SignFunction:
        bits = (1 << comb(n, l)) - 1 if _sign_to_bit(value) else 0
        return cls(n, l, kind, bits)

    def stored(self, subset: Sequence[int]) -> int:
        """Sign stored on a sorted subset."""
        return -1 if (self.bits >> colex_rank(subset)) & 1 else 1

    def bit_of(self, tup: Sequence[int]) -> int:
        """Bit (0 for +1, 1 for -1) of the value at an injective tuple."""
        key = tuple(sorted(tup))
        bit = (self.bits >> colex_rank(key)) & 1
        if self.kind is ANTISYMMETRIC:
            bit ^= sorting_parity(tup)
        return bit

    def __call__(self, *tup: int) -> int:
        return eval_sign(self, tup)

    def values(self) -> dict[tuple[int, ...], int]:
        return {s: -1 if (self.bits >> r) & 1 else 1
                for r, s in enumerate(sorted_subsets(self.n, self.l))}

    def __mul__(self, other: SignFunction) -> SignFunction:
        return group_product(self, other)

    def dump(self) -> str:
        """One ``i j ... <sign>`` line per sorted subset, colex order."""
        lines = [f"# n={self.n} l={self.l} kind={self.kind.name.lower()}"]
        for r, s in enumerate(sorted_subsets(self.n, self.l)):
            sign = "-" if (self.bits >> r) & 1 else "+"
            lines.append(" ".join(map(str, s)) + " " + sign)
        return "\n".join(lines) + "\n"


def make_sign_function(n: int, l: int, kind: SymmetryKind, values) -> SignFunction:
    """Build a SignFunction from a table of signs.

    ``values`` is either a mapping from sorted l-tuples to ±1 covering every
    sorted subset exactly once, or a sequence of ±1 in colex rank order.
    """
    if not 1 <= l <= n:
        raise ValueError(f"arity {l} out of range 1..{n}")
    subsets = sorted_subsets(n, l)
    bits = 0
    if isinstance(values, Mapping):
        keys = {tuple(k) for k in values}
        expected = set(subsets)
        missing = expected - keys
        extra = keys - expected
        if missing:
            raise ValueError(f"missing table entries: {sorted(missing)[:5]}")
        if extra:
            raise ValueError(f"unexpected table entries: {sorted(extra)[:5]}")
        for r, s in enumerate(subsets):
            bits |= _sign_to_bit(values[s]) << r
    else:
        values = list(values)
        if len(values) != len(subsets):
            raise ValueError(f"expected {len(subsets)} values, got {len(values)}")
        for r, v in enumerate(values):
            bits |= _sign_to_bit(v) << r
    return SignFunction(n, l, kind, bits)


def _check_tuple(phi: SignFunction, tup: Sequence[int]) -> None:
    if len(tup) != phi.l:
        raise ValueError(f"expected a tuple of length {phi.l}, got {len(tup)}")
    for x in tup:
        if not 0 <= x < phi.n:
            raise ValueError(f"index {x} out of range for n={phi.n}")
    if len(set(tup)) != len(tup):
        raise ValueError(f"tuple has a repeated index: {tuple(tup)}")


def eval_sign(phi: SignFunction, tup: Sequence[int]) -> int:
    """Value of ``phi`` at an injective tuple, in {+1, -1}."""
    _check_tuple(phi, tup)
    return -1 if phi.bit_of(tup) else 1


def group_product(phi: SignFunction, psi: SignFunction) -> SignFunction:
    if (phi.n, phi.l) != (psi.n, psi.l):
        raise ValueError(f"shape mismatch: {(phi.n, phi.l)} vs {(psi.n, psi.l)}")
    return SignFunction(phi.n, phi.l, phi.kind * psi.kind, phi.bits ^ psi.bits)


def permute(g: Permutation, phi: SignFunction) -> SignFunction:
    """Left action ``(g.phi)(x_1, ..., x_l) = phi(g^-1 x_1, ..., g^-1 x_l)``."""
    if g.size != phi.n:
        raise ValueError(f"permutation of size {g.size} acting on n={phi.n}")
    inv = g.inverse().images
    bits = 0
    for r, s in enumerate(sorted_subsets(phi.n, phi.l)):
        bits |= phi.bit_of([inv[x] for x in s]) << r
    return SignFunction(phi.n, phi.l, phi.kind, bits)


def flip(phi: SignFunction, subset: Iterable[int]) -> SignFunction:
    """Negate ``phi`` on the single l-subset ``subset``."""
    key = tuple(sorted(subset))
    if len(key) != phi.l or len(set(key)) != phi.l:
        raise ValueError(f"flip needs {phi.l} distinct indices, got {key}")
    if key[0] < 0 or key[-1] >= phi.n:
        raise ValueError(f"flip subset {key} out of range for n={phi.n}")
    return SignFunction(phi.n, phi.l, phi.kind, phi.bits ^ (1 << colex_rank(key)))
