"""Parabolic subalgebras given by block vectors."""

from src.parabolic.shape import (
    BlockVector,
    ParabolicShape,
    antidiagonal,
    coarsenings,
    compositions,
    contains,
    dim_nilradical,
    dim_parabolic,
    dims_of,
    in_nilpotent_cone,
    leq_c,
    merge_cuts,
    transpose_element,
    transpose_shape,
)

__all__ = [
    "BlockVector",
    "ParabolicShape",
    "antidiagonal",
    "coarsenings",
    "compositions",
    "contains",
    "dim_nilradical",
    "dim_parabolic",
    "dims_of",
    "in_nilpotent_cone",
    "leq_c",
    "merge_cuts",
    "transpose_element",
    "transpose_shape",
]
