"""The orchard cocycle and the orchard morphism into two-partitions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from orchard.cochain import TwoPartition, integrate, is_closed
from orchard.signfn import (
    ANTISYMMETRIC,
    SYMMETRIC,
    SignFunction,
    SymmetryKind,
    colex_rank,
    eval_sign,
    sorted_subsets,
)


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero whenever ``a < 0``, ``b < 0`` or ``a < b``."""
    if a < 0 or b < 0 or a < b:
        return 0
    return comb(a, b)


def prefactor(n: int, l: int, kind: SymmetryKind) -> int:
    """``kind.sign() ** C(n-3, l-2)``."""
    if not 1 <= l <= n:
        raise ValueError(f"arity {l} out of range 1..{n}")
    if kind is SYMMETRIC or l == 1:
        return 1
    return -1 if binom(n - 3, l - 2) & 1 else 1


def orchard_cocycle(phi: SignFunction, order: Optional[Sequence[int]] = None) -> SignFunction:
    """The closed symmetric 1-cocycle attached to ``phi``.

    ``sigma(y, z)`` is the prefactor times the product, over (l-1)-tuples
    ``x`` increasing with respect to ``order`` and avoiding ``y`` and ``z``,
    of ``phi(x, y) * phi(x, z)``. The result does not depend on ``order``
    (index order by default).
    """
    n, l = phi.n, phi.l
    if n < 2:
        raise ValueError("the orchard cocycle needs at least two points")
    if order is not None:
        return _orchard_cocycle_ordered(phi, order)

    pref_bit = 1 if prefactor(n, l, phi.kind) == -1 else 0
    anti = phi.kind is ANTISYMMETRIC
    full = (1 << n) - 1
    # row[T] has bit y set when phi(T..., y) = -1, for y outside T
    rows = []
    for t in sorted_subsets(n, l - 1):
        tmask = 0
        for x in t:
            tmask |= 1 << x
        w = 0
        for y in range(n):
            if (tmask >> y) & 1:
                continue
            key = tuple(sorted(t + (y,)))
            b = (phi.bits >> colex_rank(key)) & 1
            if anti:
                b ^= sum(1 for x in t if x > y) & 1
            w |= b << y
        rows.append((full & ~tmask, w))

    bits = 0
    for r, (y, z) in enumerate(sorted_subsets(n, 2)):
        acc = pref_bit
        pair = (1 << y) | (1 << z)
        for free, w in rows:
            if free & pair == pair:
                acc ^= ((w >> y) ^ (w >> z)) & 1
        bits |= acc << r
    return SignFunction(n, 2, SYMMETRIC, bits)


def _orchard_cocycle_ordered(phi: SignFunction, order: Sequence[int]) -> SignFunction:
    n, l = phi.n, phi.l
    if sorted(order) != list(range(n)):
        raise ValueError("order must list every element exactly once")
    pref = prefactor(n, l, phi.kind)
    values = {}
    for y, z in combinations(range(n), 2):
        rest = [e for e in order if e != y and e != z]
        prod = pref
        for t in combinations(rest, l - 1):
            prod *= eval_sign(phi, t + (y,)) * eval_sign(phi, t + (z,))
        values[(y, z)] = prod
    bits = 0
    for r, s in enumerate(sorted_subsets(n, 2)):
        if values[s] == -1:
            bits |= 1 << r
    return SignFunction(n, 2, SYMMETRIC, bits)


@dataclass(frozen=True)
class OrchardReport:
    n: int
    l: int
    kind: SymmetryKind
    prefactor: int
    cocycle: Optional[SignFunction]
    partition: TwoPartition

    def to_json(self) -> dict:
        table = []
        if self.cocycle is not None:
            for (y, z), v in self.cocycle.values().items():
                table.append([y, z, v])
            table.sort()
        return {
            "n": self.n,
            "l": self.l,
            "kind": self.kind.name.lower(),
            "prefactor": self.prefactor,
            "cocycle": table,
            "partition": self.partition.to_json(),
        }


def orchard_partition(phi: SignFunction) -> OrchardReport:
    """Image of ``phi`` under the orchard morphism, with the intermediate cocycle."""
    pref = prefactor(phi.n, phi.l, phi.kind)
    if phi.n == 1:
        return OrchardReport(1, phi.l, phi.kind, pref, None, TwoPartition.trivial(1))
    sigma = orchard_cocycle(phi)
    if not is_closed(sigma):
        raise AssertionError("orchard cocycle is not closed")
    return OrchardReport(phi.n, phi.l, phi.kind, pref, sigma, integrate(sigma, 0))


def orchard_morphism(phi: SignFunction) -> TwoPartition:
    return orchard_partition(phi).partition


def beta(phi: SignFunction, variant: str = "beta") -> SignFunction:
    """Arity-1 lifts of the orchard cocycle for symmetric ``phi``.

    ``variant="beta"``: ``beta(y) = prod phi(x_1, ..., x_{l-1}, y)`` over
    (l-1)-subsets avoiding ``y``. ``variant="beta_tilde"``: product of ``phi``
    over the l-subsets avoiding ``y`` (empty, hence +1, when ``l = n``).
    Either one has coboundary equal to ``orchard_cocycle(phi)``.
    """
    if phi.kind is not SYMMETRIC:
        raise ValueError("beta is only defined on symmetric functions")
    n, l = phi.n, phi.l
    if variant not in ("beta", "beta_tilde"):
        raise ValueError(f"unknown variant {variant!r}")
    containing = variant == "beta"
    bits = 0
    for y in range(n):
        acc = 0
        for s in sorted_subsets(n, l):
            if (y in s) == containing:
                acc ^= (phi.bits >> colex_rank(s)) & 1
        bits |= acc << y
    return SignFunction(n, 1, SYMMETRIC, bits)


def exotic_partition(phi: SignFunction) -> TwoPartition:
    """The extra natural homomorphism on two points and arity two.

    Antisymmetric functions go to the nontrivial partition, symmetric ones to
    the trivial partition. The orchard morphism itself is trivial here.
    """
    if (phi.n, phi.l) != (2, 2):
        raise ValueError("the exotic homomorphism exists only for n = l = 2")
    return TwoPartition(2, 0b10 if phi.kind is ANTISYMMETRIC else 0)
