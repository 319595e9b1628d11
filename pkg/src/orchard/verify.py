"""Exhaustive search for Sym(n)-equivariant homomorphisms into two-partitions.

Both the domain (symmetric/antisymmetric sign functions) and the codomain
(two-partitions) are elementary abelian 2-groups, so group homomorphisms
between them are exactly linear maps over the two-element field. A linear
map commutes with all of Sym(n) as soon as it commutes with a generating
set; we use the transposition (0 1) and the n-cycle x -> x+1.

Domain coordinates: the bit table over sorted l-subsets (colex order),
followed by one kind bit when l >= 2. Codomain coordinates: bits 1..n-1 of
the canonical representative (the bit of element 0 is normalized away).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from orchard import gf2
from orchard.cochain import TwoPartition
from orchard.errors import BudgetError
from orchard.morphism import orchard_morphism
from orchard.signfn import ANTISYMMETRIC, SYMMETRIC, Permutation, SignFunction, permute

MAX_N = 6


def domain_dim(n: int, l: int) -> int:
    return comb(n, l) + (1 if l >= 2 else 0)


def to_vector(phi: SignFunction) -> int:
    v = phi.bits
    if phi.l >= 2 and phi.kind is ANTISYMMETRIC:
        v |= 1 << comb(phi.n, phi.l)
    return v


def from_vector(n: int, l: int, v: int) -> SignFunction:
    size = comb(n, l)
    kind = ANTISYMMETRIC if l >= 2 and (v >> size) & 1 else SYMMETRIC
    return SignFunction(n, l, kind, v & ((1 << size) - 1))


def partition_vector(p: TwoPartition) -> int:
    return p.bits >> 1


def vector_partition(n: int, v: int) -> TwoPartition:
    return TwoPartition(n, v << 1)


def generators(n: int) -> list[Permutation]:
    if n < 2:
        return []
    if n == 2:
        return [Permutation.transposition(2, 0, 1)]
    return [Permutation.transposition(n, 0, 1), Permutation.cycle(n)]


@dataclass(frozen=True)
class DomainRep:
    """Sym(n) acting linearly on the coordinates of F_±(E^(l))."""

    n: int
    l: int
    dim: int

    def matrix(self, g: Permutation) -> list[int]:
        cols = [to_vector(permute(g, from_vector(self.n, self.l, 1 << j))) for j in range(self.dim)]
        return gf2.from_columns(cols, self.dim)


def encode_domain(n: int, l: int) -> DomainRep:
    if not 1 <= l <= n:
        raise ValueError(f"arity {l} out of range 1..{n}")
    return DomainRep(n, l, domain_dim(n, l))


def codomain_matrix(n: int, g: Permutation) -> list[int]:
    cols = [partition_vector(vector_partition(n, 1 << j).permute(g)) for j in range(n - 1)]
    return gf2.from_columns(cols, n - 1)


def orchard_matrix(n: int, l: int) -> list[int]:
    """The orchard morphism in the chosen coordinates, one row per codomain bit."""
    dim = domain_dim(n, l)
    cols = [partition_vector(orchard_morphism(from_vector(n, l, 1 << j))) for j in range(dim)]
    return gf2.from_columns(cols, n - 1)


def apply(matrix: list[int], phi: SignFunction) -> TwoPartition:
    return vector_partition(phi.n, gf2.mat_vec(matrix, to_vector(phi)))


def is_equivariant(matrix: list[int], n: int, l: int, perms) -> bool:
    dom = encode_domain(n, l)
    for g in perms:
        lhs = gf2.mat_mul(matrix, dom.matrix(g), dom.dim)
        rhs = gf2.mat_mul(codomain_matrix(n, g), matrix, n - 1)
        if lhs != rhs:
            return False
    return True


@dataclass(frozen=True)
class HomBasis:
    n: int
    l: int
    domain_dim: int
    codomain_dim: int
    basis: list[list[int]]
    orchard: list[int]
    contains_orchard: bool

    @property
    def solution_dimension(self) -> int:
        return len(self.basis)

    @property
    def orchard_is_trivial(self) -> bool:
        return not any(self.orchard)

    @property
    def exotic_detected(self) -> bool:
        """Some equivariant homomorphism lies outside the span of the orchard morphism."""
        orchard_rank = 0 if self.orchard_is_trivial else 1
        return self.solution_dimension > orchard_rank or not self.contains_orchard

    def verdict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "solution_dimension": self.solution_dimension,
            "orchard_in_span": self.contains_orchard,
            "exotic_detected": self.exotic_detected,
        }


def _flatten(matrix: list[int], cols: int) -> int:
    v = 0
    for r, row in enumerate(matrix):
        v |= row << (r * cols)
    return v


def _unflatten(v: int, rows: int, cols: int) -> list[int]:
    mask = (1 << cols) - 1
    return [(v >> (r * cols)) & mask for r in range(rows)]


def equivariant_homomorphisms(n: int, l: int, max_n: int = MAX_N) -> HomBasis:
    """Basis of all equivariant homomorphisms F_±(E^(l)) -> E(E).

    Unknown: the (n-1) x D matrix M, flattened row-major. For each generator
    g the equations are ``M A_g + B_g M = 0`` entrywise.
    """
    if n > max_n:
        raise BudgetError(f"n={n} exceeds the verification budget n <= {max_n}")
    dom = encode_domain(n, l)
    rows_m, cols_m = n - 1, dom.dim
    nvars = rows_m * cols_m
    equations = []
    for g in generators(n):
        a = dom.matrix(g)
        b = codomain_matrix(n, g)
        for r in range(rows_m):
            for c in range(cols_m):
                eq = 0
                # (M A)[r][c] = sum_k M[r][k] A[k][c]
                for k in range(cols_m):
                    if (a[k] >> c) & 1:
                        eq ^= 1 << (r * cols_m + k)
                # (B M)[r][c] = sum_k B[r][k] M[k][c]
                for k in range(rows_m):
                    if (b[r] >> k) & 1:
                        eq ^= 1 << (k * cols_m + c)
                if eq:
                    equations.append(eq)
    kernel = gf2.nullspace(equations, nvars)
    basis = [_unflatten(v, rows_m, cols_m) for v in kernel]
    orch = orchard_matrix(n, l)
    contains = gf2.in_span(_flatten(orch, cols_m), kernel, nvars)
    return HomBasis(n, l, dom.dim, rows_m, basis, orch, contains)


def uniqueness_table(n_max: int, max_n: int = MAX_N) -> list[dict]:
    if n_max > max_n:
        raise BudgetError(f"n_max={n_max} exceeds the verification budget n <= {max_n}")
    return [equivariant_homomorphisms(n, l, max_n).verdict()
            for n in range(2, n_max + 1) for l in range(1, n + 1)]
