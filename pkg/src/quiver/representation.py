"""
Bound Quiver Representations

A QuiverRep attaches F^{d_v} to every vertex and a d_target x d_source
matrix to every arrow. The relations of the preset are checked exactly on
construction. Sub-representations are given vertex-wise as Subspaces;
quotients use echelon complements so that representatives are
deterministic.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

from src.algebra.field import FieldTag
from src.algebra.linalg import Subspace, span
from src.algebra.matrix import ExactMatrix
from src.quiver.presets import Path, QuiverPreset, Vertex
from src.validation.errors import PresetMismatch, RelationViolation, SizeMismatch


@dataclass(frozen=True, eq=False)
class QuiverRep:
    """
    A representation of a preset's bound quiver.

    Attributes:
        preset: the bound quiver
        field: base field
        dims: vertex dimensions in ``preset.vertices`` order
        maps: arrow id -> matrix (target dim x source dim)
    """

    preset: QuiverPreset
    field: FieldTag
    dims: Tuple[int, ...]
    maps: Dict[str, ExactMatrix]

    def __post_init__(self):
        preset = self.preset
        if len(self.dims) != len(preset.vertices):
            raise SizeMismatch(
                f"{preset.label} has {len(preset.vertices)} vertices, got {len(self.dims)} dimensions"
            )
        if any(d < 0 for d in self.dims):
            raise SizeMismatch("vertex dimensions must be non-negative")
        missing = set(preset.arrows) - set(self.maps)
        extra = set(self.maps) - set(preset.arrows)
        if missing or extra:
            raise SizeMismatch(
                "arrow maps do not match the preset",
                {"missing": sorted(missing), "unexpected": sorted(extra)},
            )
        for arrow, (source, target) in preset.arrows.items():
            m = self.maps[arrow]
            if m.field != self.field:
                raise SizeMismatch(f"map of {arrow} lives over {m.field}, expected {self.field}")
            expected = (self.dim(target), self.dim(source))
            if m.shape != expected:
                raise SizeMismatch(
                    f"map of {arrow} has shape {m.shape}, expected {expected}",
                    {"arrow": arrow, "shape": m.shape, "expected": expected},
                )
        for relation in preset.relations:
            if not self.evaluate_relation(relation).is_zero():
                raise RelationViolation(
                    f"relation {relation.name} does not hold",
                    {"relation": relation.name},
                )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def build(
        cls,
        preset: QuiverPreset,
        field: FieldTag,
        dims: Mapping[Vertex, int],
        maps: Mapping[str, ExactMatrix] = None,
    ) -> "QuiverRep":
        """Build from a vertex -> dim mapping; arrows left out get zero maps."""
        maps = dict(maps or {})
        dim_tuple = tuple(int(dims.get(v, 0)) for v in preset.vertices)
        position = preset.vertex_position
        for arrow, (source, target) in preset.arrows.items():
            if arrow not in maps:
                maps[arrow] = ExactMatrix.zeros(
                    field, dim_tuple[position[target]], dim_tuple[position[source]]
                )
        return cls(preset, field, dim_tuple, maps)

    @classmethod
    def zero(cls, preset: QuiverPreset, field: FieldTag) -> "QuiverRep":
        return cls.build(preset, field, {})

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------
    def dim(self, v: Vertex) -> int:
        return self.dims[self.preset.vertex_position[v]]

    def dim_vector(self) -> Dict[Vertex, int]:
        return dict(zip(self.preset.vertices, self.dims))

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_matrix(self, path: Path, start: Vertex) -> ExactMatrix:
        """Composite of the arrows along ``path`` (applied in order) starting at ``start``."""
        current = ExactMatrix.identity(self.field, self.dim(start))
        for arrow in path:
            current = self.maps[arrow] @ current
        return current

    def evaluate_relation(self, relation) -> ExactMatrix:
        total = ExactMatrix.zeros(self.field, self.dim(relation.target), self.dim(relation.source))
        for coefficient, path in relation.terms:
            total = total + self.path_matrix(path, relation.source).scale(coefficient)
        return total

    def describe(self) -> str:
        dims = ", ".join(f"{v}:{d}" for v, d in zip(self.preset.vertices, self.dims) if d)
        return f"{self.preset.label} over {self.field.label} [{dims}]"

    def __eq__(self, other):
        if not isinstance(other, QuiverRep):
            return NotImplemented
        return (
            self.preset == other.preset
            and self.field == other.field
            and self.dims == other.dims
            and all(self.maps[a] == other.maps[a] for a in self.preset.arrows)
        )

    __hash__ = None


def _check_compatible(a: QuiverRep, b: QuiverRep):
    if a.preset != b.preset:
        raise PresetMismatch(f"{a.preset.label} vs {b.preset.label}")
    if a.field != b.field:
        raise PresetMismatch(f"representations live over {a.field} and {b.field}")


def direct_sum(a: QuiverRep, b: QuiverRep) -> QuiverRep:
    _check_compatible(a, b)
    maps = {
        arrow: ExactMatrix.block_diagonal(a.field, [a.maps[arrow], b.maps[arrow]])
        for arrow in a.preset.arrows
    }
    dims = tuple(x + y for x, y in zip(a.dims, b.dims))
    return QuiverRep(a.preset, a.field, dims, maps)


def transform(r: QuiverRep, changes: Mapping[Vertex, ExactMatrix]) -> QuiverRep:
    """Isomorphic copy with M_alpha replaced by g_target M_alpha g_source^-1."""
    field = r.field
    g = {v: changes.get(v, ExactMatrix.identity(field, r.dim(v))) for v in r.preset.vertices}
    inverses = {v: m.inverse() for v, m in g.items()}
    maps = {
        arrow: g[target] @ r.maps[arrow] @ inverses[source]
        for arrow, (source, target) in r.preset.arrows.items()
    }
    return QuiverRep(r.preset, field, r.dims, maps)


# ----------------------------------------------------------------------
# Sub-representations and quotients
# ----------------------------------------------------------------------
SubData = Mapping[Vertex, Subspace]


def _full_sub(r: QuiverRep, sub: SubData) -> Dict[Vertex, Subspace]:
    result = {}
    for v in r.preset.vertices:
        s = sub.get(v)
        if s is None:
            s = span(r.field, r.dim(v), [])
        if s.ambient_dim != r.dim(v):
            raise SizeMismatch(f"subspace at {v} lives in dimension {s.ambient_dim}, expected {r.dim(v)}")
        result[v] = s
    return result


def is_subrep(r: QuiverRep, sub: SubData) -> bool:
    """True iff every arrow maps sub_source into sub_target."""
    spaces = _full_sub(r, sub)
    for arrow, (source, target) in r.preset.arrows.items():
        m = r.maps[arrow]
        if any(not spaces[target].contains(m.apply(v)) for v in spaces[source].vectors):
            return False
    return True


def _adapted_basis(r: QuiverRep, space: Subspace, v: Vertex) -> Tuple[ExactMatrix, ExactMatrix]:
    """(B, B^-1) where the columns of B are the sub basis followed by the echelon complement."""
    columns = space.vectors + space.complement_basis()
    basis = ExactMatrix.from_columns(r.field, columns, rows=r.dim(v))
    return basis, basis.inverse()


def restrict(r: QuiverRep, sub: SubData) -> QuiverRep:
    """The sub-representation in the echelon bases of the subspaces."""
    spaces = _full_sub(r, sub)
    if not is_subrep(r, spaces):
        raise RelationViolation("subspaces are not stable under the arrows")
    field = r.field
    maps = {}
    for arrow, (source, target) in r.preset.arrows.items():
        m = r.maps[arrow]
        columns = []
        for vector in spaces[source].vectors:
            columns.append(spaces[target].coordinates(m.apply(vector)))
        maps[arrow] = ExactMatrix.from_columns(field, columns, rows=spaces[target].dim)
    dims = tuple(spaces[v].dim for v in r.preset.vertices)
    return QuiverRep(r.preset, field, dims, maps)


def quotient(r: QuiverRep, sub: SubData) -> QuiverRep:
    """
    r / sub with the echelon complement of sub_v as basis of the quotient at v.

    Raises:
        RelationViolation: if ``sub`` is not a sub-representation
    """
    spaces = _full_sub(r, sub)
    if not is_subrep(r, spaces):
        raise RelationViolation("subspaces are not stable under the arrows")
    field = r.field
    adapted = {v: _adapted_basis(r, spaces[v], v) for v in r.preset.vertices}
    maps = {}
    for arrow, (source, target) in r.preset.arrows.items():
        basis_s, _ = adapted[source]
        _, inverse_t = adapted[target]
        k_s, k_t = spaces[source].dim, spaces[target].dim
        full = inverse_t @ r.maps[arrow] @ basis_s
        maps[arrow] = full.submatrix(range(k_t, r.dim(target)), range(k_s, r.dim(source)))
    dims = tuple(r.dim(v) - spaces[v].dim for v in r.preset.vertices)
    return QuiverRep(r.preset, field, dims, maps)


def generated_subrep(r: QuiverRep, generators: Mapping[Vertex, List[Tuple]]) -> Dict[Vertex, Subspace]:
    """Smallest sub-representation containing the given vectors."""
    spaces = _full_sub(r, {v: span(r.field, r.dim(v), vecs) for v, vecs in generators.items()})
    changed = True
    while changed:
        changed = False
        for arrow, (source, target) in r.preset.arrows.items():
            m = r.maps[arrow]
            images = [m.apply(v) for v in spaces[source].vectors]
            if all(spaces[target].contains(w) for w in images):
                continue
            spaces[target] = span(r.field, r.dim(target), spaces[target].vectors + images)
            changed = True
    return spaces
