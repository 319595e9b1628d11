"""Orchard morphism: two-partitions from symmetric and antisymmetric sign functions."""

from orchard.cochain import TwoPartition, coboundary, integrate, integrate_via_graph, is_closed
from orchard.geometry import (
    Configuration,
    is_generic,
    orchard_coloring,
    orientation,
    orientation_function,
    partition_by_separation,
    separation_count,
)
from orchard.morphism import (
    OrchardReport,
    beta,
    exotic_partition,
    orchard_cocycle,
    orchard_morphism,
    orchard_partition,
    prefactor,
)
from orchard.signfn import (
    ANTISYMMETRIC,
    SYMMETRIC,
    Permutation,
    SignFunction,
    SymmetryKind,
    eval_sign,
    flip,
    group_product,
    make_sign_function,
    permute,
)
from orchard.verify import equivariant_homomorphisms

__all__ = [
    "ANTISYMMETRIC", "SYMMETRIC", "Configuration", "OrchardReport", "Permutation",
    "SignFunction", "SymmetryKind", "TwoPartition", "beta", "coboundary",
    "equivariant_homomorphisms", "eval_sign", "exotic_partition", "flip",
    "group_product", "integrate", "integrate_via_graph", "is_closed", "is_generic",
    "make_sign_function", "orchard_cocycle", "orchard_coloring", "orchard_morphism",
    "orchard_partition", "orientation", "orientation_function",
    "partition_by_separation", "permute", "prefactor", "separation_count",
]
