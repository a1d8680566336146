"""Constructive transforms between realizations of related classes."""

from .growth import GrowthState, grow, grow_init, grow_step, split_vertices
from .regular import (
    bipartite_regular,
    padded_class,
    regularization_target,
    regularize,
    strip_special_edges,
    unpad_realization,
)
from .twins import (
    Decomposition,
    SigmaPartition,
    expand_class,
    expand_member,
    quotient,
    reduce_class,
    reduce_member,
    reduce_realization,
    sigma_classes,
)

__all__ = [
    "Decomposition",
    "GrowthState",
    "SigmaPartition",
    "bipartite_regular",
    "expand_class",
    "expand_member",
    "grow",
    "grow_init",
    "grow_step",
    "padded_class",
    "quotient",
    "reduce_class",
    "reduce_member",
    "reduce_realization",
    "regularization_target",
    "regularize",
    "sigma_classes",
    "split_vertices",
    "strip_special_edges",
    "unpad_realization",
]
