"""
Parabolic Data

Block vectors, their partial-sum dimension vectors, membership tests for
the upper-block parabolic p, its nilradical n_p and Levi factor, the
transposition anti-involution, and the <=_c order.
"""

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Iterator, List, Tuple

from src.algebra.matrix import ExactMatrix
from src.validation.errors import SizeMismatch


@dataclass(frozen=True)
class BlockVector:
    """Ordered positive block sizes (b_1, ..., b_p)."""

    blocks: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        if not self.blocks:
            raise ValueError("block vector needs at least one block")
        if any(b < 1 for b in self.blocks):
            raise ValueError(f"block sizes must be positive: {self.blocks}")

    @classmethod
    def parse(cls, text: str) -> "BlockVector":
        """Parse the CLI syntax ``1,2,1,4``."""
        try:
            return cls(tuple(int(part) for part in str(text).split(",") if part.strip()))
        except ValueError as exc:
            raise ValueError(f"Invalid block vector '{text}': {exc}") from exc

    @property
    def n(self) -> int:
        return sum(self.blocks)

    @property
    def p(self) -> int:
        return len(self.blocks)

    def reverse(self) -> "BlockVector":
        return BlockVector(tuple(reversed(self.blocks)))

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __getitem__(self, index):
        return self.blocks[index]

    def __str__(self):
        return "(" + ",".join(str(b) for b in self.blocks) + ")"


@dataclass(frozen=True)
class ParabolicShape:
    """
    Parabolic data derived from a block vector.

    Attributes:
        bv: block sizes
        n: matrix size
        dims: partial sums d_i = b_1 + ... + b_i
        block_index: block number (0-based) of each row/column index
    """

    bv: BlockVector
    n: int
    dims: Tuple[int, ...]
    block_index: Tuple[int, ...] = dc_field(repr=False, compare=False, default=())

    def validate(self) -> List[str]:
        errors = []
        if self.n != sum(self.bv.blocks):
            errors.append("n differs from the sum of the blocks")
        if not self.dims or self.dims[-1] != self.n:
            errors.append("last partial sum differs from n")
        return errors

    def block_range(self, i: int) -> range:
        start = self.dims[i - 1] if i > 0 else 0
        return range(start, self.dims[i])


def dims_of(bv: BlockVector) -> ParabolicShape:
    """Partial sums of the block vector, e.g. (1,2,1,2,1) -> (1,3,4,6,7)."""
    dims, total, owner = [], 0, []
    for index, b in enumerate(bv.blocks):
        total += b
        dims.append(total)
        owner.extend([index] * b)
    return ParabolicShape(bv, total, tuple(dims), tuple(owner))


def _check_size(shape: ParabolicShape, m: ExactMatrix):
    if m.rows != shape.n or m.cols != shape.n:
        raise SizeMismatch(
            f"matrix is {m.rows}x{m.cols} but the parabolic has n={shape.n}",
            {"rows": m.rows, "cols": m.cols, "n": shape.n},
        )


def contains(shape: ParabolicShape, m: ExactMatrix, which: str = "parabolic") -> bool:
    """
    Membership in p, n_p or the Levi factor.

    Args:
        shape: parabolic data
        m: n x n matrix
        which: "parabolic", "nilradical" or "levi"
    """
    if which not in ("parabolic", "nilradical", "levi"):
        raise ValueError(f"Unknown membership mode: {which}")
    _check_size(shape, m)
    owner = shape.block_index
    for i, j in m.nonzero_positions():
        if owner[i] > owner[j]:
            return False
        if which == "nilradical" and owner[i] == owner[j]:
            return False
        if which == "levi" and owner[i] != owner[j]:
            return False
    return True


def in_nilpotent_cone(shape: ParabolicShape, m: ExactMatrix, x: int = None) -> bool:
    """True iff m lies in p and m^x = 0 (x defaults to n)."""
    _check_size(shape, m)
    if x is None:
        x = shape.n
    return contains(shape, m, "parabolic") and m.power(x).is_zero()


def transpose_shape(bv: BlockVector) -> BlockVector:
    return bv.reverse()


def antidiagonal(field, n: int) -> ExactMatrix:
    m = ExactMatrix.zeros(field, n, n)
    for i in range(n):
        m = m.with_entry(i, n - 1 - i, field.one)
    return m


def transpose_element(shape: ParabolicShape, m: ExactMatrix) -> ExactMatrix:
    """
    The anti-involution m -> w m^T w, w the antidiagonal permutation.

    It maps p onto the parabolic of the reversed block vector and reverses
    products: t(ab) = t(b) t(a).
    """
    _check_size(shape, m)
    w = antidiagonal(m.field, shape.n)
    return w @ m.transpose() @ w


def leq_c(a: BlockVector, b: BlockVector) -> bool:
    """
    a <=_c b: an increasing index embedding i_1 < ... < i_p with a_j <= b_{i_j}.

    Greedy earliest matching is exact: if any embedding exists, moving each
    index to the earliest admissible position keeps all later choices open.
    """
    position = 0
    for value in a.blocks:
        while position < len(b.blocks) and b.blocks[position] < value:
            position += 1
        if position == len(b.blocks):
            return False
        position += 1
    return True


def coarsenings(bv: BlockVector) -> Iterator[BlockVector]:
    """All block vectors obtained by merging runs of adjacent blocks (bv included)."""
    p = bv.p
    for cut_count in range(p):
        for cuts in combinations(range(1, p), cut_count):
            bounds = (0,) + cuts + (p,)
            yield BlockVector(
                tuple(sum(bv.blocks[s:e]) for s, e in zip(bounds, bounds[1:]))
            )


def merge_cuts(fine: BlockVector, coarse: BlockVector) -> List[Tuple[int, int]]:
    """Index runs of ``fine`` merged into each block of ``coarse``, or [] if not a coarsening."""
    runs, start, acc = [], 0, 0
    for index, b in enumerate(fine.blocks):
        acc += b
        target = coarse.blocks[len(runs)] if len(runs) < coarse.p else None
        if target is None or acc > target:
            return []
        if acc == target:
            runs.append((start, index + 1))
            start, acc = index + 1, 0
    return runs if len(runs) == coarse.p and acc == 0 else []


def compositions(n: int) -> Iterator[BlockVector]:
    """All block vectors with total n, in lexicographic order of cut sets."""
    for cut_count in range(n):
        for cuts in combinations(range(1, n), cut_count):
            bounds = (0,) + cuts + (n,)
            yield BlockVector(tuple(e - s for s, e in zip(bounds, bounds[1:])))


def dim_parabolic(bv: BlockVector) -> int:
    """dim p = sum_{i <= j} b_i b_j."""
    blocks = bv.blocks
    return sum(blocks[i] * blocks[j] for i in range(len(blocks)) for j in range(i, len(blocks)))


def dim_nilradical(bv: BlockVector) -> int:
    blocks = bv.blocks
    return sum(blocks[i] * blocks[j] for i in range(len(blocks)) for j in range(i + 1, len(blocks)))
