"""
Matrices to Representations and Back

P-conjugacy classes in N_p^(x) correspond to isomorphism classes of Q_p
representations with injective arrows and dimension vector (d_1, ..., d_p):
the loop at vertex i is the leading d_i x d_i block of N and the arrows are
the canonical embeddings. Levi conjugacy corresponds to isomorphism of the
Levi quiver representation carrying the blocks N_ij.
"""

from typing import List, Tuple

from src.algebra.linalg import rank, solve, span
from src.algebra.matrix import ExactMatrix
from src.parabolic.shape import BlockVector, ParabolicShape, contains, dims_of, in_nilpotent_cone
from src.quiver.presets import levi_preset, qp_preset
from src.quiver.representation import QuiverRep
from src.validation.errors import NotInCone, NotInjectiveArrows, PresetMismatch

LEVI_ACTING_TARGETS = ("nilradical", "cone")


def canonical_embedding(field, rows: int, cols: int) -> ExactMatrix:
    """F^cols -> F^rows onto the first cols coordinates."""
    m = ExactMatrix.zeros(field, rows, cols)
    for i in range(cols):
        m = m.with_entry(i, i, field.one)
    return m


def matrix_to_rep(shape: ParabolicShape, n_matrix: ExactMatrix, x: int = None) -> QuiverRep:
    """
    The Q_p representation of an element of N_p^(x).

    Args:
        shape: parabolic data
        n_matrix: element of N_p^(x)
        x: nilpotency bound, defaults to n

    Raises:
        NotInCone: if the matrix is outside p or not x-nilpotent
    """
    x = shape.n if x is None else x
    if not in_nilpotent_cone(shape, n_matrix, x):
        raise NotInCone(f"matrix is not an x-nilpotent element of p for bv={shape.bv} (x={x})")
    field = n_matrix.field
    preset = qp_preset(shape.bv.p, x)
    maps = {}
    for i, d in enumerate(shape.dims, start=1):
        maps[f"beta_{i}"] = n_matrix.leading(d)
    for i in range(1, shape.bv.p):
        maps[f"alpha_{i}"] = canonical_embedding(field, shape.dims[i], shape.dims[i - 1])
    return QuiverRep(preset, field, tuple(shape.dims), maps)


def arrows_injective(r: QuiverRep, arrows: List[str] = None) -> bool:
    arrows = r.preset.horizontal_arrows() if arrows is None else arrows
    return all(rank(r.maps[a]) == r.maps[a].cols for a in arrows)


def rep_to_matrix(r: QuiverRep, close_top_chain: bool = False) -> Tuple[ParabolicShape, ExactMatrix]:
    """
    An element of N_p whose representation is isomorphic to r.

    Bases are chosen so that every arrow becomes the canonical embedding:
    a basis of the last vertex adapted to the flag of images of the earlier
    vertices, pulled back along the composite arrows.

    With close_top_chain the last adapted vector is replaced by the image of
    the one before it under the loop, when that image is independent of the
    others. The change of basis is upper triangular, so the result stays
    P-conjugate.

    Raises:
        NotInjectiveArrows: if some alpha_i is not injective
    """
    if r.preset.kind != "Qp":
        raise PresetMismatch(f"rep_to_matrix needs a Q_p representation, got {r.preset.label}")
    if not arrows_injective(r):
        raise NotInjectiveArrows("some arrow alpha_i is not injective")
    field = r.field
    p = r.preset.p
    dims = [r.dim(i) for i in range(1, p + 1)]
    blocks = tuple(b - a for a, b in zip([0] + dims, dims))
    if any(b <= 0 for b in blocks):
        raise NotInjectiveArrows(
            f"dimension vector {tuple(dims)} is not strictly increasing; no block vector matches",
            {"dims": dims},
        )
    shape = dims_of(BlockVector(blocks))
    loop = r.maps[f"beta_{p}"]
    _, adapted = _adapted_flag(r)
    if close_top_chain and len(adapted) >= 2:
        image = loop.apply(adapted[-2])
        if not span(field, shape.n, adapted[:-1]).contains(image):
            adapted[-1] = image
    basis = ExactMatrix.from_columns(field, adapted, rows=shape.n)
    n_matrix = basis.inverse() @ loop @ basis
    return shape, n_matrix


def _adapted_flag(r: QuiverRep):
    """Composites A_i: V_i -> V_p and a basis of V_p adapted to im A_1 <= im A_2 <= ..."""
    field, p = r.field, r.preset.p
    n = r.dim(p)
    composites = [None] * (p + 1)
    composites[p] = ExactMatrix.identity(field, n)
    for i in range(p - 1, 0, -1):
        composites[i] = composites[i + 1] @ r.maps[f"alpha_{i}"]
    adapted: List[Tuple] = []
    for i in range(1, p + 1):
        current = span(field, n, adapted)
        for column in composites[i].columns():
            if not current.contains(column):
                adapted.append(column)
                current = span(field, n, adapted)
    return composites, adapted


def rep_vertex_bases(r: QuiverRep) -> List[ExactMatrix]:
    """
    Bases of every vertex in which the arrows are canonical embeddings.

    The basis of V_i consists of the preimages under A_i of the first d_i
    adapted vectors of V_p.
    """
    shape, _ = rep_to_matrix(r)
    field, p = r.field, r.preset.p
    composites, adapted = _adapted_flag(r)
    bases = []
    for i in range(1, p + 1):
        d = shape.dims[i - 1]
        columns = [solve(composites[i], adapted[k]) for k in range(d)]
        bases.append(ExactMatrix.from_columns(field, columns, rows=d))
    return bases


def levi_rep(shape: ParabolicShape, n_matrix: ExactMatrix, acting: str, x: int = None) -> QuiverRep:
    """
    The Levi quiver representation of N.

    Args:
        shape: parabolic data
        n_matrix: element of n_p ("nilradical") or of N_p ("cone")
        acting: "nilradical" or "cone"
        x: loop nilpotency bound for "cone", defaults to n

    Returns:
        representation with V_i = F^{b_i}, the block N_ij on the arrow
        n_i_j (vertex j to vertex i) and, for "cone", the diagonal blocks on
        the loops
    """
    if acting not in LEVI_ACTING_TARGETS:
        raise ValueError(f"Unknown Levi target '{acting}' (expected one of {LEVI_ACTING_TARGETS})")
    x = shape.n if x is None else x
    if acting == "nilradical":
        if not contains(shape, n_matrix, "nilradical"):
            raise NotInCone(f"matrix is not in the nilradical of bv={shape.bv}")
    elif not in_nilpotent_cone(shape, n_matrix, x):
        raise NotInCone(f"matrix is not in N_p for bv={shape.bv} (x={x})")
    p = shape.bv.p
    if acting == "cone":
        preset = levi_preset(p, x, with_loops=True)
    else:
        preset = levi_preset(p)
    maps = {}
    for i in range(1, p + 1):
        rows = shape.block_range(i - 1)
        if acting == "cone":
            maps[f"beta_{i}"] = n_matrix.submatrix(rows, rows)
        for j in range(i + 1, p + 1):
            maps[f"n_{i}_{j}"] = n_matrix.submatrix(rows, shape.block_range(j - 1))
    return QuiverRep(preset, n_matrix.field, tuple(shape.bv.blocks), maps)
