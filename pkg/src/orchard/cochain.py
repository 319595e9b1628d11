"""Mod-2 cochains on the full simplex, written multiplicatively.

A k-cochain is a symmetric :class:`~orchard.signfn.SignFunction` of arity
k+1. Closed 1-cochains integrate to two-partitions, elements of
``{±1}^E / ±1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from orchard.signfn import (
    SYMMETRIC,
    Permutation,
    SignFunction,
    colex_rank,
    sorted_subsets,
)


class NotClosedError(ValueError):
    """Raised when integration is asked of a cochain that is not a cocycle."""

    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"1-cochain is not closed: triple product at {triple} is -1")


@dataclass(frozen=True)
class TwoPartition:
    """A partition of ``{0, ..., n-1}`` into at most two classes.

    Stored as the canonical representative ``alpha`` with ``alpha(0) = +1``:
    bit ``x`` of ``bits`` is set when ``alpha(x) = -1``.
    """

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("two-partitions need a non-empty ground set")
        mask = (1 << self.n) - 1
        bits = self.bits & mask
        if bits != self.bits:
            raise ValueError("assignment has bits beyond the ground set")
        if bits & 1:
            bits ^= mask
        object.__setattr__(self, "bits", bits)

    @classmethod
    def trivial(cls, n: int) -> TwoPartition:
        return cls(n, 0)

    @classmethod
    def from_signs(cls, signs) -> TwoPartition:
        """From any representative, a sequence of ±1 indexed by element."""
        bits = 0
        for x, v in enumerate(signs):
            if v not in (1, -1):
                raise ValueError(f"assignment values must be ±1, got {v!r}")
            if v == -1:
                bits |= 1 << x
        return cls(len(signs), bits)

    @classmethod
    def from_classes(cls, n: int, other) -> TwoPartition:
        bits = 0
        for x in other:
            if not 0 <= x < n:
                raise ValueError(f"index {x} out of range for n={n}")
            bits |= 1 << x
        return cls(n, bits)

    def sign(self, x: int) -> int:
        return -1 if (self.bits >> x) & 1 else 1

    def representative(self) -> tuple[int, ...]:
        return tuple(self.sign(x) for x in range(self.n))

    def classes(self) -> tuple[list[int], list[int]]:
        """``(class_of_0, other)``, both sorted; ``other`` may be empty."""
        first = [x for x in range(self.n) if not (self.bits >> x) & 1]
        other = [x for x in range(self.n) if (self.bits >> x) & 1]
        return first, other

    def is_trivial(self) -> bool:
        return self.bits == 0

    def same_class(self, x: int, y: int) -> bool:
        return ((self.bits >> x) ^ (self.bits >> y)) & 1 == 0

    def __mul__(self, other: TwoPartition) -> TwoPartition:
        if self.n != other.n:
            raise ValueError("two-partitions on different ground sets")
        return TwoPartition(self.n, self.bits ^ other.bits)

    def permute(self, g: Permutation) -> TwoPartition:
        """``(g.alpha)(x) = alpha(g^-1 x)``."""
        if g.size != self.n:
            raise ValueError("permutation size does not match ground set")
        bits = 0
        for x in range(self.n):
            if (self.bits >> x) & 1:
                bits |= 1 << g(x)
        return TwoPartition(self.n, bits)

    def to_json(self) -> dict:
        first, other = self.classes()
        return {"class_of_0": first, "other": other}

    @classmethod
    def from_json(cls, obj: dict) -> TwoPartition:
        first = list(obj["class_of_0"])
        other = list(obj["other"])
        n = len(first) + len(other)
        if sorted(first + other) != list(range(n)):
            raise ValueError("classes must partition 0..n-1")
        if n and 0 not in first:
            raise ValueError("class_of_0 must contain index 0")
        return cls.from_classes(n, other)


def coboundary(c: SignFunction) -> SignFunction:
    """``(dc)(x_0, ..., x_k) = prod_j c(x_0, ..., ^x_j, ..., x_k)``."""
    if c.kind is not SYMMETRIC:
        raise ValueError("coboundary is defined on symmetric cochains only")
    n, k = c.n, c.l
    if k + 1 > n:
        raise ValueError(f"no cochains of arity {k + 1} on {n} points")
    bits = 0
    for r, s in enumerate(sorted_subsets(n, k + 1)):
        b = 0
        for face in combinations(s, k):
            b ^= (c.bits >> colex_rank(face)) & 1
        bits |= b << r
    return SignFunction(n, k + 1, SYMMETRIC, bits)


def _check_one_cochain(sigma: SignFunction) -> None:
    if sigma.l != 2 or sigma.kind is not SYMMETRIC:
        raise ValueError("expected a symmetric function of arity 2")


def first_unclosed_triple(sigma: SignFunction):
    _check_one_cochain(sigma)
    bits = sigma.bits
    for a, b, c in combinations(range(sigma.n), 3):
        t = (bits >> colex_rank((a, b))) ^ (bits >> colex_rank((a, c))) ^ (bits >> colex_rank((b, c)))
        if t & 1:
            return (a, b, c)
    return None


def is_closed(sigma: SignFunction) -> bool:
    """True iff ``sigma(a,b) sigma(a,c) sigma(b,c) = 1`` for all triples."""
    return first_unclosed_triple(sigma) is None


def _require_closed(sigma: SignFunction) -> None:
    triple = first_unclosed_triple(sigma)
    if triple is not None:
        raise NotClosedError(triple)


def integrate(sigma: SignFunction, basepoint: int = 0) -> TwoPartition:
    """Integrate a closed 1-cocycle by ``alpha(x0) = 1``, ``alpha(x) = sigma(x, x0)``."""
    _require_closed(sigma)
    n = sigma.n
    if not 0 <= basepoint < n:
        raise ValueError(f"basepoint {basepoint} out of range for n={n}")
    bits = 0
    for x in range(n):
        if x != basepoint:
            pair = (x, basepoint) if x < basepoint else (basepoint, x)
            bits |= ((sigma.bits >> colex_rank(pair)) & 1) << x
    return TwoPartition(n, bits)


def integrate_via_graph(sigma: SignFunction) -> TwoPartition:
    """Integrate via the components of the graph with edges where ``sigma = +1``.

    A closed cocycle yields at most two components, each a complete graph.
    """
    _require_closed(sigma)
    n = sigma.n
    adj = [set() for _ in range(n)]
    for a, b in combinations(range(n), 2):
        if not (sigma.bits >> colex_rank((a, b))) & 1:
            adj[a].add(b)
            adj[b].add(a)

    component = [-1] * n
    comps = []
    for start in range(n):
        if component[start] >= 0:
            continue
        cid = len(comps)
        members = [start]
        component[start] = cid
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if component[w] < 0:
                    component[w] = cid
                    members.append(w)
                    stack.append(w)
        comps.append(members)

    if len(comps) > 2:
        raise AssertionError(f"closed cocycle produced {len(comps)} components")
    for members in comps:
        for v in members:
            if len(adj[v]) != len(members) - 1:
                raise AssertionError("component of a closed cocycle is not complete")
    other = comps[1] if len(comps) == 2 else []
    return TwoPartition.from_classes(n, other)


def partition_cochain(p: TwoPartition) -> SignFunction:
    """The canonical representative of ``p`` as a 0-cochain."""
    return SignFunction(p.n, 1, SYMMETRIC, p.bits)
