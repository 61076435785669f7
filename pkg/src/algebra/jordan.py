"""
Nilpotent Jordan Bases

Chains are indexed (i, j) with f(v_{i,j}) = v_{i,j-1} and f(v_{i,1}) = 0.
Chain tops are chosen deterministically from echelon bases of the kernel
filtration, longest chains first.
"""

from typing import List, Sequence, Tuple

from src.algebra.field import FieldTag
from src.algebra.linalg import Subspace, kernel, rank, span
from src.algebra.matrix import ExactMatrix
from src.validation.errors import NotNilpotent, SizeMismatch

Partition = Tuple[int, ...]


def conjugate_partition(partition: Sequence[int]) -> Partition:
    parts = [p for p in partition if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > k) for k in range(max(parts)))


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def partitions_of(n: int, max_part: int = None) -> List[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    result = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            result.append((first,) + rest)
    return result


def jordan_block(field: FieldTag, size: int) -> ExactMatrix:
    """Upper shift J_size: J e_j = e_{j-1}."""
    m = ExactMatrix.zeros(field, size, size)
    for j in range(1, size):
        m = m.with_entry(j - 1, j, field.one)
    return m


def jordan_matrix(field: FieldTag, partition: Sequence[int]) -> ExactMatrix:
    return ExactMatrix.block_diagonal(field, [jordan_block(field, p) for p in partition])


def is_nilpotent(m: ExactMatrix) -> bool:
    if not m.is_square:
        raise SizeMismatch("nilpotency of a non-square matrix")
    return m.power(m.rows).is_zero() if m.rows else True


def nilpotency_index(m: ExactMatrix) -> int:
    """Smallest s with m^s = 0."""
    if not is_nilpotent(m):
        raise NotNilpotent("matrix is not nilpotent")
    s, power = 0, ExactMatrix.identity(m.field, m.rows)
    while not power.is_zero():
        power = power @ m
        s += 1
    return s


def jordan_type(m: ExactMatrix) -> Partition:
    """
    Jordan type of a nilpotent matrix from its rank sequence.

    The partition is the conjugate of (dim ker m^k - dim ker m^{k-1})_k.
    """
    if not is_nilpotent(m):
        raise NotNilpotent("matrix is not nilpotent")
    n = m.rows
    ranks = [n]
    power = ExactMatrix.identity(m.field, n)
    while ranks[-1] > 0:
        power = power @ m
        ranks.append(rank(power))
    increments = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    return conjugate_partition(increments)


def nilpotent_jordan_basis(m: ExactMatrix) -> Tuple[ExactMatrix, Partition]:
    """
    Jordan basis of a nilpotent matrix.

    Args:
        m: square nilpotent matrix

    Returns:
        (basis, partition): the columns of ``basis`` are
        v_{1,1}, ..., v_{1,lambda_1}, v_{2,1}, ... so that
        basis^-1 m basis = jordan_matrix(partition)

    Raises:
        NotNilpotent: if m^n != 0
    """
    chains = jordan_chains(m)
    field = m.field
    partition = tuple(len(chain) for chain in chains)
    columns = [v for chain in chains for v in chain]
    basis = ExactMatrix.from_columns(field, columns, rows=m.rows)
    return basis, partition


def jordan_chains(m: ExactMatrix) -> List[List[Tuple]]:
    """Chains [v_{i,1}, ..., v_{i,lambda_i}] sorted by length, longest first."""
    if not m.is_square:
        raise SizeMismatch("Jordan basis of a non-square matrix")
    if not is_nilpotent(m):
        raise NotNilpotent("matrix is not nilpotent", {"size": m.rows})
    field, n = m.field, m.rows
    if n == 0:
        return []
    s = nilpotency_index(m)
    kernels: List[Subspace] = [span(field, n, [])]
    power = ExactMatrix.identity(field, n)
    for _ in range(s):
        power = power @ m
        kernels.append(kernel(power))

    tops: List[Tuple[Tuple, int]] = []  # (top vector, chain length)
    for t in range(s, 0, -1):
        level = [_push(m, top, length - t) for top, length in tops if length > t]
        current = span(field, n, kernels[t - 1].vectors + level)
        for candidate in kernels[t].vectors:
            if not current.contains(candidate):
                tops.append((candidate, t))
                current = span(field, n, current.vectors + [candidate])

    chains = []
    for top, length in tops:
        chain = [_push(m, top, length - j) for j in range(1, length + 1)]
        chains.append(chain)
    return chains


def _push(m: ExactMatrix, v: Tuple, k: int) -> Tuple:
    for _ in range(k):
        v = m.apply(v)
    return v
