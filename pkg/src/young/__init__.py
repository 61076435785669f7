"""Labeled Young diagrams of f-stable pairs and their reduction by base changes."""

from src.young.diagram import (
    LabeledYoungDiagram,
    box_index,
    chain_vectors,
    diagram_from_pair,
    diagram_rep,
    diagram_subspace,
    is_injective_diagram,
    pair_rep,
    random_stable_pair,
)
from src.young.moves import (
    MOVE_KINDS,
    BaseChange,
    anchored_matrix,
    apply_move,
    move_B,
    move_C,
    move_D,
    move_E,
    move_M,
    replay,
    stab_violations,
)
from src.young.reduction import check_reduced, reduce, reduce_first_column, reduction_case
from src.young.enumeration import enumerate_reduced, reduced_census
from src.young.extension import EXTENSION_KINDS, ExtensionReport, extend_check

__all__ = [
    "LabeledYoungDiagram",
    "box_index",
    "chain_vectors",
    "diagram_from_pair",
    "diagram_rep",
    "diagram_subspace",
    "is_injective_diagram",
    "pair_rep",
    "random_stable_pair",
    "MOVE_KINDS",
    "BaseChange",
    "anchored_matrix",
    "apply_move",
    "move_B",
    "move_C",
    "move_D",
    "move_E",
    "move_M",
    "replay",
    "stab_violations",
    "check_reduced",
    "reduce",
    "reduce_first_column",
    "reduction_case",
    "enumerate_reduced",
    "reduced_census",
    "EXTENSION_KINDS",
    "ExtensionReport",
    "extend_check",
]
