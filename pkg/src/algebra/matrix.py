"""
Exact Matrices

Immutable dense matrices over a FieldTag. Entries are stored as tuples of
domain scalars; the heavy operations (products, echelon forms,
determinants, inverses, characteristic polynomials) are delegated to
sympy's DomainMatrix over QQ or GF(q).
"""

from dataclasses import dataclass
from typing import Any, Iterable, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from src.algebra.field import FieldTag
from src.validation.errors import SizeMismatch


@dataclass(frozen=True)
class ExactMatrix:
    """
    Dense matrix over an exact field.

    Attributes:
        field: base field
        rows: number of rows
        cols: number of columns
        entries: row-major tuple of tuples of domain scalars
    """

    field: FieldTag
    rows: int
    cols: int
    entries: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise SizeMismatch(
                f"entry grid does not match declared shape {self.rows}x{self.cols}"
            )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def from_rows(
        cls, field: FieldTag, rows: Sequence[Sequence[Any]], cols: int = None
    ) -> "ExactMatrix":
        """Build from nested sequences of ints, Fractions, strings or scalars."""
        converted = tuple(tuple(field(value) for value in row) for row in rows)
        if cols is None:
            cols = len(converted[0]) if converted else 0
        return cls(field, len(converted), cols, converted)

    @classmethod
    def zeros(cls, field: FieldTag, rows: int, cols: int) -> "ExactMatrix":
        zero = field.zero
        return cls(field, rows, cols, tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: FieldTag, n: int) -> "ExactMatrix":
        zero, one = field.zero, field.one
        return cls(
            field,
            n,
            n,
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)),
        )

    @classmethod
    def unit(cls, field: FieldTag, rows: int, cols: int, i: int, j: int) -> "ExactMatrix":
        """Elementary matrix E_ij (0-based indices)."""
        return cls.zeros(field, rows, cols).with_entry(i, j, field.one)

    @classmethod
    def from_columns(
        cls, field: FieldTag, columns: Sequence[Sequence[Any]], rows: int = None
    ) -> "ExactMatrix":
        if not columns:
            return cls.zeros(field, rows or 0, 0)
        return cls.from_rows(field, columns).transpose()

    @classmethod
    def from_domain(cls, field: FieldTag, dm: DomainMatrix) -> "ExactMatrix":
        rows, cols = dm.shape
        if rows == 0 or cols == 0:
            return cls.zeros(field, rows, cols)
        return cls(field, rows, cols, tuple(tuple(row) for row in dm.to_list()))

    @classmethod
    def block_diagonal(cls, field: FieldTag, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        grid = [[field.zero] * cols for _ in range(rows)]
        r0 = c0 = 0
        for block in blocks:
            for i in range(block.rows):
                for j in range(block.cols):
                    grid[r0 + i][c0 + j] = block.entries[i][j]
            r0 += block.rows
            c0 += block.cols
        return cls(field, rows, cols, tuple(tuple(row) for row in grid))

    @classmethod
    def hstack(cls, field: FieldTag, parts: Sequence["ExactMatrix"], rows: int = None) -> "ExactMatrix":
        parts = list(parts)
        if not parts:
            return cls.zeros(field, rows or 0, 0)
        height = parts[0].rows
        if any(p.rows != height for p in parts):
            raise SizeMismatch("hstack: row counts differ")
        entries = tuple(
            tuple(x for p in parts for x in p.entries[i]) for i in range(height)
        )
        return cls(field, height, sum(p.cols for p in parts), entries)

    @classmethod
    def vstack(cls, field: FieldTag, parts: Sequence["ExactMatrix"], cols: int = None) -> "ExactMatrix":
        parts = list(parts)
        if not parts:
            return cls.zeros(field, 0, cols or 0)
        width = parts[0].cols
        if any(p.cols != width for p in parts):
            raise SizeMismatch("vstack: column counts differ")
        entries = tuple(row for p in parts for row in p.entries)
        return cls(field, len(entries), width, entries)

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Any, ...]:
        return self.entries[i]

    def column(self, j: int) -> Tuple[Any, ...]:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> List[Tuple[Any, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "ExactMatrix":
        rows, cols = list(rows), list(cols)
        entries = tuple(tuple(self.entries[i][j] for j in cols) for i in rows)
        return ExactMatrix(self.field, len(rows), len(cols), entries)

    def leading(self, d: int) -> "ExactMatrix":
        """Leading d x d submatrix (first d rows and columns)."""
        return self.submatrix(range(d), range(d))

    def with_entry(self, i: int, j: int, value) -> "ExactMatrix":
        grid = [list(row) for row in self.entries]
        grid[i][j] = self.field(value) if not _is_scalar(value, self.field) else value
        return ExactMatrix(self.field, self.rows, self.cols, tuple(tuple(r) for r in grid))

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def nonzero_positions(self) -> List[Tuple[int, int]]:
        return [
            (i, j)
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
            if x
        ]

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self.entries], self.shape, self.field.domain)

    def to_plain(self) -> List[List[Any]]:
        return [[self.field.to_plain(x) for x in row] for row in self.entries]

    def sort_key(self) -> Tuple:
        return tuple(self.field.sort_key(x) for row in self.entries for x in row)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _check_same(self, other: "ExactMatrix", op: str):
        if self.field != other.field:
            raise SizeMismatch(f"{op}: fields differ ({self.field} vs {other.field})")
        if self.shape != other.shape:
            raise SizeMismatch(f"{op}: shapes differ ({self.shape} vs {other.shape})")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other, "add")
        entries = tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)
        )
        return ExactMatrix(self.field, self.rows, self.cols, entries)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other, "sub")
        entries = tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)
        )
        return ExactMatrix(self.field, self.rows, self.cols, entries)

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-self.field.one)

    def scale(self, c) -> "ExactMatrix":
        c = c if _is_scalar(c, self.field) else self.field(c)
        entries = tuple(tuple(c * x for x in row) for row in self.entries)
        return ExactMatrix(self.field, self.rows, self.cols, entries)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise SizeMismatch("matmul: fields differ")
        if self.cols != other.rows:
            raise SizeMismatch(
                f"matmul: {self.rows}x{self.cols} times {other.rows}x{other.cols}"
            )
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return ExactMatrix.zeros(self.field, self.rows, other.cols)
        product = self.to_domain().matmul(other.to_domain())
        return ExactMatrix.from_domain(self.field, product)

    def apply(self, vector: Sequence[Any]) -> Tuple[Any, ...]:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise SizeMismatch("apply: vector length does not match column count")
        zero = self.field.zero
        return tuple(
            sum((a * b for a, b in zip(row, vector)), zero) for row in self.entries
        )

    def transpose(self) -> "ExactMatrix":
        entries = tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols))
        return ExactMatrix(self.field, self.cols, self.rows, entries)

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def power(self, k: int) -> "ExactMatrix":
        if not self.is_square:
            raise SizeMismatch("power of a non-square matrix")
        result = ExactMatrix.identity(self.field, self.rows)
        base = self
        while k > 0:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def commutator(self, other: "ExactMatrix") -> "ExactMatrix":
        return self @ other - other @ self

    def trace(self):
        if not self.is_square:
            raise SizeMismatch("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), self.field.zero)

    def det(self):
        if not self.is_square:
            raise SizeMismatch("determinant of a non-square matrix")
        if self.rows == 0:
            return self.field.one
        return self.to_domain().det()

    def is_invertible(self) -> bool:
        return self.is_square and bool(self.det())

    def inverse(self) -> "ExactMatrix":
        if not self.is_invertible():
            raise SizeMismatch("matrix is not invertible")
        if self.rows == 0:
            return self
        return ExactMatrix.from_domain(self.field, self.to_domain().inv())

    def charpoly(self) -> List[Any]:
        """Coefficients of det(tI - m), leading coefficient first."""
        if not self.is_square:
            raise SizeMismatch("characteristic polynomial of a non-square matrix")
        if self.rows == 0:
            return [self.field.one]
        return list(self.to_domain().charpoly())

    def conjugate_by(self, g: "ExactMatrix") -> "ExactMatrix":
        """g * self * g^-1."""
        return g @ self @ g.inverse()

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.to_plain())
        return f"ExactMatrix({self.field.label}, {self.rows}x{self.cols}, [{body}])"


def _is_scalar(value, field: FieldTag) -> bool:
    return isinstance(value, field.domain.dtype)


def vector(field: FieldTag, values: Iterable[Any]) -> Tuple[Any, ...]:
    return tuple(field(v) for v in values)


def unit_vector(field: FieldTag, n: int, i: int) -> Tuple[Any, ...]:
    return tuple(field.one if k == i else field.zero for k in range(n))
