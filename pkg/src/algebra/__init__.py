"""Exact linear algebra over the rationals and prime fields."""

from src.algebra.field import FieldTag, QQ_FIELD, gf
from src.algebra.matrix import ExactMatrix, unit_vector, vector
from src.algebra.linalg import (
    Subspace,
    extend_to_basis,
    full_space,
    image,
    intersection,
    kernel,
    rank,
    rref,
    solve,
    span,
    zero_subspace,
)
from src.algebra.jordan import (
    conjugate_partition,
    is_nilpotent,
    jordan_block,
    jordan_chains,
    jordan_matrix,
    jordan_type,
    nilpotent_jordan_basis,
    partitions_of,
)
from src.algebra.nilpotency import is_nilpotent_subspace

__all__ = [
    "FieldTag",
    "QQ_FIELD",
    "gf",
    "ExactMatrix",
    "unit_vector",
    "vector",
    "Subspace",
    "extend_to_basis",
    "full_space",
    "image",
    "intersection",
    "kernel",
    "rank",
    "rref",
    "solve",
    "span",
    "zero_subspace",
    "conjugate_partition",
    "is_nilpotent",
    "jordan_block",
    "jordan_chains",
    "jordan_matrix",
    "jordan_type",
    "nilpotent_jordan_basis",
    "partitions_of",
    "is_nilpotent_subspace",
]
