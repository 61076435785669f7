"""
Covering Grids

Representations of the truncated covering quiver: an n_rows x p grid of
commutative squares with horizontal arrows to the right and vertical
arrows downwards, row 1 at the top. This module builds the standard
modules P, D, nabla and T, pushes grid representations down to Q_p, peels
Delta-filtrations off representations with injective horizontal maps and
computes the quotient by the trace of T.
"""

from typing import Dict, List, Mapping, Sequence, Tuple

from src.algebra.field import FieldTag
from src.algebra.linalg import full_space, kernel, rank, span
from src.algebra.matrix import ExactMatrix
from src.quiver.homs import hom_space, is_isomorphic
from src.quiver.presets import QuiverPreset, covering_preset, qp_preset
from src.quiver.representation import QuiverRep, quotient, restrict
from src.validation.errors import IndexOutOfGrid, NotDeltaFiltered, PresetMismatch

Label = Tuple[int, int]

STANDARD_KINDS = ("P", "D", "nabla", "T")


def _require_covering(r: QuiverRep):
    if not r.preset.is_covering:
        raise PresetMismatch(f"expected a covering grid representation, got {r.preset.label}")


def thin_rep(preset: QuiverPreset, field: FieldTag, support) -> QuiverRep:
    """One-dimensional spaces on ``support``; identity between supported vertices, zero elsewhere."""
    support = set(support)
    dims = {v: 1 for v in support}
    one = ExactMatrix.identity(field, 1)
    maps = {
        arrow: one
        for arrow, (source, target) in preset.arrows.items()
        if source in support and target in support
    }
    return QuiverRep.build(preset, field, dims, maps)


def rep_from_grid(
    field: FieldTag,
    grid: Sequence[Sequence[int]],
    x: int = None,
    maps: Mapping[str, Sequence[Sequence]] = None,
) -> QuiverRep:
    """
    A grid representation from a dimension grid (row 1 first).

    Arrows between one-dimensional spaces default to the identity; every
    other map defaults to zero unless given in ``maps`` as nested rows.
    """
    n_rows, p = len(grid), len(grid[0])
    preset = covering_preset(p, n_rows, x)
    dims = {(k + 1, l + 1): int(grid[k][l]) for k in range(n_rows) for l in range(p)}
    explicit = {arrow: ExactMatrix.from_rows(field, rows, cols=None) for arrow, rows in (maps or {}).items()}
    built = {}
    for arrow, (source, target) in preset.arrows.items():
        if arrow in explicit:
            m = explicit[arrow]
            if m.rows == 0 and dims[target] == 0:
                m = ExactMatrix.zeros(field, 0, dims[source])
            built[arrow] = m
        elif dims[source] == 1 and dims[target] == 1:
            built[arrow] = ExactMatrix.identity(field, 1)
    return QuiverRep.build(preset, field, dims, built)


def dimension_grid(r: QuiverRep) -> List[List[int]]:
    _require_covering(r)
    preset = r.preset
    return [[r.dim((k, l)) for l in range(1, preset.p + 1)] for k in range(1, preset.n_rows + 1)]


class StandardModules:
    """
    Standard, costandard, projective and tilting modules of a grid.

    P(i,j) is supported on k >= i, l >= j; D(i,j) on row i from column j;
    nabla(i,j) on column j down to row i; T(i,j) on k <= i, l >= j. All
    arrows between supported vertices are identities.
    """

    def __init__(self, preset: QuiverPreset, field: FieldTag):
        if not preset.is_covering:
            raise PresetMismatch(f"standard modules live on covering grids, not {preset.label}")
        self.preset = preset
        self.field = field

    def _check(self, i: int, j: int):
        if not (1 <= i <= self.preset.n_rows and 1 <= j <= self.preset.p):
            raise IndexOutOfGrid(
                f"({i},{j}) is outside the {self.preset.n_rows}x{self.preset.p} grid",
                {"row": i, "col": j},
            )

    def _support(self, kind: str, i: int, j: int):
        self._check(i, j)
        rows, cols = self.preset.n_rows, self.preset.p
        if kind == "P":
            return [(k, l) for k in range(i, rows + 1) for l in range(j, cols + 1)]
        if kind == "D":
            return [(i, l) for l in range(j, cols + 1)]
        if kind == "nabla":
            return [(k, j) for k in range(1, i + 1)]
        if kind == "T":
            return [(k, l) for k in range(1, i + 1) for l in range(j, cols + 1)]
        raise ValueError(f"Unknown standard module kind '{kind}' (expected one of {STANDARD_KINDS})")

    def build(self, kind: str, i: int, j: int) -> QuiverRep:
        return thin_rep(self.preset, self.field, self._support(kind, i, j))

    def P(self, i: int, j: int) -> QuiverRep:
        return self.build("P", i, j)

    def D(self, i: int, j: int) -> QuiverRep:
        return self.build("D", i, j)

    def nabla(self, i: int, j: int) -> QuiverRep:
        return self.build("nabla", i, j)

    def T(self, i: int, j: int) -> QuiverRep:
        return self.build("T", i, j)

    def labels(self) -> List[Label]:
        return [(i, j) for i in range(1, self.preset.n_rows + 1) for j in range(1, self.preset.p + 1)]


def standard_modules(preset: QuiverPreset, field: FieldTag) -> StandardModules:
    return StandardModules(preset, field)


# ----------------------------------------------------------------------
# Push-down and translation
# ----------------------------------------------------------------------
def push_down(r: QuiverRep, x: int = None) -> QuiverRep:
    """
    Column sums: V_j = V_{1,j} + ... + V_{n,j} stacked top to bottom.

    The loop at j sends the row-k summand to the row-(k+1) summand by the
    vertical map; alpha_j is the block diagonal of the horizontal maps.

    Args:
        r: grid representation
        x: nilpotency bound of the target Q_p, defaults to the largest column dimension
    """
    _require_covering(r)
    preset, field = r.preset, r.field
    rows, p = preset.n_rows, preset.p
    column_dims = [[r.dim((k, l)) for k in range(1, rows + 1)] for l in range(1, p + 1)]
    totals = [sum(c) for c in column_dims]
    if x is None:
        x = max(1, max(totals))
    maps = {}
    for l in range(1, p + 1):
        sizes = column_dims[l - 1]
        offsets = [sum(sizes[:k]) for k in range(rows)]
        loop = [[field.zero] * totals[l - 1] for _ in range(totals[l - 1])]
        for k in range(1, rows):
            block = r.maps[f"beta_{k}_{l}"]
            for a in range(block.rows):
                for b in range(block.cols):
                    loop[offsets[k] + a][offsets[k - 1] + b] = block.entries[a][b]
        maps[f"beta_{l}"] = ExactMatrix(
            field, totals[l - 1], totals[l - 1], tuple(tuple(row) for row in loop)
        )
        if l < p:
            maps[f"alpha_{l}"] = ExactMatrix.block_diagonal(
                field, [r.maps[f"alpha_{k}_{l}"] for k in range(1, rows + 1)]
            )
    return QuiverRep(qp_preset(p, x), field, tuple(totals), maps)


def _grid_preset(p: int, n_rows: int, x: int, old: QuiverPreset) -> QuiverPreset:
    vacuous = old.x >= old.n_rows
    return covering_preset(p, n_rows, None if vacuous else min(x, n_rows))


def shift(r: QuiverRep, k: int) -> QuiverRep:
    """Move every space k rows down, adding k empty rows at the top."""
    _require_covering(r)
    if k < 0:
        raise IndexOutOfGrid("shift amount must be non-negative", {"k": k})
    old = r.preset
    preset = _grid_preset(old.p, old.n_rows + k, old.x, old)
    dims = {(row + k, col): r.dim((row, col)) for row, col in old.vertices}
    maps = {}
    for arrow, ((s_row, s_col), _) in old.arrows.items():
        kind = arrow.split("_")[0]
        maps[f"{kind}_{s_row + k}_{s_col}"] = r.maps[arrow]
    return QuiverRep.build(preset, r.field, dims, maps)


def drop_top_row(r: QuiverRep) -> QuiverRep:
    """The same representation on the grid without its (empty) first row."""
    _require_covering(r)
    old = r.preset
    if old.n_rows < 2:
        raise IndexOutOfGrid("cannot drop the only row of a grid", {"n_rows": old.n_rows})
    if any(r.dim((1, l)) for l in range(1, old.p + 1)):
        raise IndexOutOfGrid(
            "first row is not empty", {"row_1": [r.dim((1, l)) for l in range(1, old.p + 1)]}
        )
    preset = _grid_preset(old.p, old.n_rows - 1, old.x, old)
    dims = {(row - 1, col): r.dim((row, col)) for row, col in old.vertices if row > 1}
    maps = {}
    for arrow, ((s_row, s_col), _) in old.arrows.items():
        if s_row == 1:
            continue
        kind = arrow.split("_")[0]
        maps[f"{kind}_{s_row - 1}_{s_col}"] = r.maps[arrow]
    return QuiverRep.build(preset, r.field, dims, maps)


def horizontal_injective(r: QuiverRep) -> bool:
    return all(rank(r.maps[a]) == r.maps[a].cols for a in r.preset.horizontal_arrows())


def small_to_big_injective(r: QuiverRep) -> bool:
    """Every arrow from a vertex of dimension a to one of dimension b > a is injective."""
    for arrow, (source, target) in r.preset.arrows.items():
        if r.dim(source) < r.dim(target) and rank(r.maps[arrow]) != r.dim(source):
            return False
    return True


# ----------------------------------------------------------------------
# Delta-filtrations
# ----------------------------------------------------------------------
def _peel(r: QuiverRep) -> Tuple[Label, Dict]:
    """
    One step: the sub-representation whose quotient is D(x, y).

    x is the first row with a nonzero last column, y the first nonzero
    column of that row. Along row x the sub is the kernel of a coordinate
    functional of V_{x,p} pulled back to each V_{x,l}, l >= y.
    """
    preset = r.preset
    p = preset.p
    x_row = next(k for k in range(1, preset.n_rows + 1) if r.dim((k, p)))
    y_col = next(l for l in range(1, p + 1) if r.dim((x_row, l)))

    composites = {p: ExactMatrix.identity(r.field, r.dim((x_row, p)))}
    for l in range(p - 1, y_col - 1, -1):
        composites[l] = composites[l + 1] @ r.maps[f"alpha_{x_row}_{l}"]
    first_image = composites[y_col].column(0)
    pivot = next(index for index, value in enumerate(first_image) if value)

    sub: Dict = {v: full_space(r.field, r.dim(v)) for v in preset.vertices}
    for l in range(y_col, p + 1):
        functional = composites[l].submatrix([pivot], range(composites[l].cols))
        sub[(x_row, l)] = kernel(functional)
    return (x_row, y_col), sub


def delta_filtration(r: QuiverRep, verify: bool = True) -> List[Label]:
    """
    Labels (x, y) of a Delta-filtration of r, peeled greedily.

    Args:
        r: grid representation with injective horizontal maps
        verify: check every successive quotient against D(x, y)

    Returns:
        labels in peeling order; sum of (p - y + 1) equals dim r

    Raises:
        NotDeltaFiltered: if some horizontal map is not injective
    """
    _require_covering(r)
    if not horizontal_injective(r):
        raise NotDeltaFiltered("a horizontal map is not injective")
    modules = StandardModules(r.preset, r.field)
    labels: List[Label] = []
    current = r
    while current.total_dim:
        label, sub = _peel(current)
        if verify:
            layer = quotient(current, sub)
            if not is_isomorphic(layer, modules.D(*label)):
                raise NotDeltaFiltered(
                    f"quotient at step {len(labels) + 1} is not D{label}",
                    {"label": label, "dims": layer.dims},
                )
        labels.append(label)
        current = restrict(current, sub)
    return labels


# ----------------------------------------------------------------------
# Trace of T
# ----------------------------------------------------------------------
def trace_of_tilting(r: QuiverRep) -> Dict:
    """Vertex-wise sum of the images of all morphisms T(i,j) -> r."""
    _require_covering(r)
    modules = StandardModules(r.preset, r.field)
    images: Dict = {v: [] for v in r.preset.vertices}
    for i, j in modules.labels():
        homs = hom_space(modules.T(i, j), r)
        for morphism in homs.basis:
            for v, m in morphism.items():
                images[v].extend(m.columns())
    return {v: span(r.field, r.dim(v), vectors) for v, vectors in images.items()}


def phi_quotient(r: QuiverRep) -> QuiverRep:
    """
    r divided by the trace of T.

    For Delta-filtered r (injective horizontal maps) the quotient has an
    empty first row and is returned on the grid with one row fewer, where it
    satisfies the smaller grid's relations. Other input, and one-row grids,
    keep their grid.
    """
    _require_covering(r)
    phi = quotient(r, trace_of_tilting(r))
    if r.preset.n_rows > 1 and horizontal_injective(r):
        return drop_top_row(phi)
    return phi
