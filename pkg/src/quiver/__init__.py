"""Bound quiver representations, morphisms and covering grids."""

from src.quiver.presets import (
    PRESET_KINDS,
    QuiverPreset,
    Relation,
    covering_preset,
    levi_preset,
    qp_preset,
)
from src.quiver.representation import (
    QuiverRep,
    direct_sum,
    generated_subrep,
    is_subrep,
    quotient,
    restrict,
    transform,
)
from src.quiver.homs import (
    HomSpace,
    end_space,
    endomorphism_local,
    find_isomorphism,
    has_nontrivial_idempotent,
    hom_space,
    is_indecomposable,
    is_isomorphic,
)
from src.quiver.translation import (
    arrows_injective,
    canonical_embedding,
    levi_rep,
    matrix_to_rep,
    rep_to_matrix,
    rep_vertex_bases,
)
from src.quiver.covering import (
    StandardModules,
    delta_filtration,
    dimension_grid,
    drop_top_row,
    horizontal_injective,
    phi_quotient,
    push_down,
    rep_from_grid,
    shift,
    small_to_big_injective,
    standard_modules,
    thin_rep,
    trace_of_tilting,
)

__all__ = [
    "PRESET_KINDS",
    "QuiverPreset",
    "Relation",
    "covering_preset",
    "levi_preset",
    "qp_preset",
    "QuiverRep",
    "direct_sum",
    "generated_subrep",
    "is_subrep",
    "quotient",
    "restrict",
    "transform",
    "HomSpace",
    "end_space",
    "endomorphism_local",
    "find_isomorphism",
    "has_nontrivial_idempotent",
    "hom_space",
    "is_indecomposable",
    "is_isomorphic",
    "arrows_injective",
    "canonical_embedding",
    "levi_rep",
    "matrix_to_rep",
    "rep_to_matrix",
    "rep_vertex_bases",
    "StandardModules",
    "delta_filtration",
    "dimension_grid",
    "drop_top_row",
    "horizontal_injective",
    "phi_quotient",
    "push_down",
    "rep_from_grid",
    "shift",
    "small_to_big_injective",
    "standard_modules",
    "thin_rep",
    "trace_of_tilting",
]
