"""
Echelon Forms, Kernels and Subspaces

Reduced row echelon form is the canonical representation of a subspace:
two Subspace objects over the same field are equal iff their echelon bases
are entry-wise equal.
"""

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from src.algebra.field import FieldTag
from src.algebra.matrix import ExactMatrix
from src.validation.errors import SizeMismatch

Vector = Tuple[Any, ...]


def rref(m: ExactMatrix) -> Tuple[ExactMatrix, int]:
    """
    Reduced row echelon form and rank.

    Args:
        m: any matrix

    Returns:
        (echelon form of the same shape, rank)
    """
    echelon, pivots = rref_with_pivots(m)
    return echelon, len(pivots)


def rref_with_pivots(m: ExactMatrix) -> Tuple[ExactMatrix, Tuple[int, ...]]:
    if m.rows == 0 or m.cols == 0:
        return m, ()
    echelon, pivots = m.to_domain().rref()
    return ExactMatrix.from_domain(m.field, echelon), tuple(pivots)


def rank(m: ExactMatrix) -> int:
    return rref(m)[1]


@dataclass(frozen=True)
class Subspace:
    """
    Subspace of F^ambient_dim.

    Attributes:
        ambient_dim: dimension of the ambient space
        basis: dim x ambient_dim matrix in reduced row echelon form
    """

    ambient_dim: int
    basis: ExactMatrix

    @property
    def field(self) -> FieldTag:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def vectors(self) -> List[Vector]:
        return [self.basis.row(i) for i in range(self.dim)]

    @property
    def pivots(self) -> Tuple[int, ...]:
        result = []
        for row in self.basis.entries:
            result.append(next(j for j, x in enumerate(row) if x))
        return tuple(result)

    def contains(self, v: Sequence[Any]) -> bool:
        if len(v) != self.ambient_dim:
            raise SizeMismatch("vector length does not match the ambient dimension")
        return self.coordinates(v) is not None

    def coordinates(self, v: Sequence[Any]) -> Optional[Vector]:
        """Coefficients of v in the echelon basis, or None if v is outside."""
        residual = list(v)
        coords = []
        for row, pivot in zip(self.basis.entries, self.pivots):
            c = residual[pivot]
            coords.append(c)
            if c:
                residual = [a - c * b for a, b in zip(residual, row)]
        if any(residual):
            return None
        return tuple(coords)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def __add__(self, other: "Subspace") -> "Subspace":
        return span(self.field, self.ambient_dim, self.vectors + other.vectors)

    def intersect(self, other: "Subspace") -> "Subspace":
        return intersection(self, other)

    def complement_basis(self) -> List[Vector]:
        """Standard unit vectors at the non-pivot positions (echelon complement)."""
        pivots = set(self.pivots)
        field = self.field
        return [
            tuple(field.one if k == j else field.zero for k in range(self.ambient_dim))
            for j in range(self.ambient_dim)
            if j not in pivots
        ]


def span(field: FieldTag, ambient_dim: int, vectors: Sequence[Sequence[Any]]) -> Subspace:
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return Subspace(ambient_dim, ExactMatrix.zeros(field, 0, ambient_dim))
    echelon, r = rref(ExactMatrix(field, len(vectors), ambient_dim, tuple(vectors)))
    return Subspace(ambient_dim, echelon.submatrix(range(r), range(ambient_dim)))


def zero_subspace(field: FieldTag, ambient_dim: int) -> Subspace:
    return span(field, ambient_dim, [])


def full_space(field: FieldTag, ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, ExactMatrix.identity(field, ambient_dim))


def kernel(m: ExactMatrix) -> Subspace:
    """
    Null space {v : m v = 0}.

    Returns:
        Subspace of dimension cols - rank(m)
    """
    field = m.field
    if m.cols == 0:
        return zero_subspace(field, 0)
    if m.rows == 0:
        return full_space(field, m.cols)
    echelon, pivots = rref_with_pivots(m)
    pivot_set = set(pivots)
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [field.zero] * m.cols
        v[free] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -echelon[r, free]
        vectors.append(v)
    return span(field, m.cols, vectors)


def image(m: ExactMatrix) -> Subspace:
    """Column space of m as a subspace of F^rows."""
    return span(m.field, m.rows, m.columns())


def intersection(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise SizeMismatch("intersection of subspaces in different ambient spaces")
    field = a.field
    if a.dim == 0 or b.dim == 0:
        return zero_subspace(field, a.ambient_dim)
    # Solve sum x_i a_i - sum y_j b_j = 0 and map back through the a-basis
    columns = a.vectors + [tuple(-x for x in v) for v in b.vectors]
    system = ExactMatrix.from_columns(field, columns)
    null = kernel(system)
    result = []
    for coeffs in null.vectors:
        x = coeffs[: a.dim]
        result.append(
            tuple(
                sum((c * v[k] for c, v in zip(x, a.vectors)), field.zero)
                for k in range(a.ambient_dim)
            )
        )
    return span(field, a.ambient_dim, result)


def solve(m: ExactMatrix, b: Sequence[Any]) -> Optional[Vector]:
    """One solution of m x = b, or None if the system is inconsistent."""
    field = m.field
    if len(b) != m.rows:
        raise SizeMismatch("right-hand side length does not match row count")
    augmented = ExactMatrix.hstack(field, [m, ExactMatrix.from_columns(field, [tuple(b)], rows=m.rows)])
    echelon, pivots = rref_with_pivots(augmented)
    if m.cols in pivots:
        return None
    x = [field.zero] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = echelon[r, m.cols]
    return tuple(x)


def extend_to_basis(field: FieldTag, n: int, vectors: Sequence[Sequence[Any]]) -> List[Vector]:
    """Independent vectors followed by unit vectors completing them to a basis."""
    chosen = [tuple(v) for v in vectors]
    current = span(field, n, chosen)
    if current.dim != len(chosen):
        raise SizeMismatch("vectors to extend are linearly dependent")
    for u in full_space(field, n).vectors:
        if not current.contains(u):
            chosen.append(u)
            current = span(field, n, chosen)
    return chosen
