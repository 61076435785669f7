"""
Family Builders

Constructs the members of the named one-parameter families:

    levi_nilr_111, levi_cone_22   explicit matrices (Levi factor orbits)
    d4_222, e6_*, ext_kk          covering-grid representations pushed down
                                  to Q_p and translated to N_p
    commuting_pair                the pair (x_t, y_t), see commuting.py
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, Tuple, Union

from config.family_registry import FAMILY_REGISTRY
from src.algebra.field import FieldTag
from src.algebra.matrix import ExactMatrix
from src.families.commuting import commuting_pair
from src.families.layouts import GRID_LAYOUTS, extended_layout
from src.parabolic.shape import BlockVector, ParabolicShape, dims_of
from src.quiver.covering import push_down
from src.quiver.presets import covering_preset
from src.quiver.representation import QuiverRep
from src.quiver.translation import rep_to_matrix
from src.validation.errors import ParamOutOfRange

FAMILY_NAMES = tuple(FAMILY_REGISTRY)
PARAMETRIC_FAMILIES = ("ext_kk", "commuting_pair")


@dataclass(frozen=True)
class FamilySpec:
    """
    A named family with its block vector.

    Attributes:
        name: registry key
        bv: block vector of the members
        field: field the members are built over
        acting: "P" or "Levi"
        target: "cone" or "nilradical"
        params: extra sizes (k, n) for ext_kk and commuting_pair
    """

    name: str
    bv: BlockVector
    field: FieldTag
    acting: str
    target: str
    params: Dict[str, int] = dataclass_field(default_factory=dict, compare=False)

    @property
    def shape(self) -> ParabolicShape:
        return dims_of(self.bv)

    @property
    def is_covering_built(self) -> bool:
        return self.name in GRID_LAYOUTS or self.name == "ext_kk"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "bv": list(self.bv.blocks),
            "field": self.field.label,
            "acting": self.acting,
            "target": self.target,
            "params": dict(self.params),
        }


def family_spec(name: str, field: Union[str, FieldTag] = None, k: int = None, n: int = None) -> FamilySpec:
    """
    Look up a family in the registry.

    Args:
        name: registry key
        field: overrides the registry's sample field
        k, n: sizes for ext_kk and commuting_pair (d = (k, n))

    Raises:
        ParamOutOfRange: if k < 6 or n - k < 6 for the parametric families
    """
    if name not in FAMILY_REGISTRY:
        raise ValueError(f"Unknown family '{name}' (expected one of {FAMILY_NAMES})")
    entry = FAMILY_REGISTRY[name]
    field = FieldTag.parse(field if field is not None else entry["field"])
    params: Dict[str, int] = {}
    if name in PARAMETRIC_FAMILIES:
        k = 6 if k is None else int(k)
        n = 12 if n is None else int(n)
        if k < 6 or n - k < 6:
            raise ParamOutOfRange(
                f"{name} needs k >= 6 and n - k >= 6, got k={k}, n={n}", {"k": k, "n": n}
            )
        params = {"k": k, "n": n}
        bv = BlockVector((k, n - k))
    else:
        bv = BlockVector(entry["bv"])
    return FamilySpec(name, bv, field, entry["acting"], entry["target"], params)


# ----------------------------------------------------------------------
# Explicit matrices
# ----------------------------------------------------------------------
def levi_nilr_member(field: FieldTag, t) -> ExactMatrix:
    """[[0,1,t],[0,0,1],[0,0,0]]; x13/(x12 x23) is a Levi invariant."""
    return ExactMatrix.from_rows(field, [[0, 1, t], [0, 0, 1], [0, 0, 0]])


def levi_cone_member(field: FieldTag, t) -> ExactMatrix:
    """
    bv = (2,2): J_2 on both diagonal blocks and diag(1, t) as N_12.

    Viewed on the basis e1..e4 this is the square e4 -> e3 -> e1, e4 -> e2 -> e1
    whose two paths differ by the factor t.
    """
    return ExactMatrix.from_rows(
        field,
        [[0, 1, 1, 0], [0, 0, 0, t], [0, 0, 0, 1], [0, 0, 0, 0]],
    )


# ----------------------------------------------------------------------
# Covering-grid families
# ----------------------------------------------------------------------
def _d4_letters(field: FieldTag, t) -> Dict[str, ExactMatrix]:
    return {
        "A": ExactMatrix.from_rows(field, [[0], [1]]),
        "B": ExactMatrix.from_rows(field, [[1], [1]]),
        "C": ExactMatrix.from_rows(field, [[0, 1]]),
        "D": ExactMatrix.from_rows(field, [[1], [t]]),
    }


def _e6_letters(field: FieldTag, t) -> Dict[str, ExactMatrix]:
    return {
        "A": ExactMatrix.from_rows(field, [[1], [0]]),
        "B": ExactMatrix.from_rows(field, [[1, 0], [0, 1], [0, 0]]),
        "C": ExactMatrix.from_rows(field, [[1], [0]]),
        "D": ExactMatrix.from_rows(field, [[1, 0], [1, 1], [1, t]]),
        "E": ExactMatrix.from_rows(field, [[1, 0]]),
        "F": ExactMatrix.from_rows(field, [[1, 0, 0], [0, 1, 0]]),
        "H": ExactMatrix.from_rows(field, [[0], [1]]),
    }


def _word(letters: Dict[str, ExactMatrix], label: str, field: FieldTag, size: int) -> ExactMatrix:
    """Evaluate a letter word: "FBA" is F.B.A, "I" the identity on the source."""
    if label == "I":
        return ExactMatrix.identity(field, size)
    result = letters[label[-1]]
    for letter in reversed(label[:-1]):
        result = letters[letter] @ result
    return result


def grid_rep(layout: Dict, field: FieldTag, t) -> QuiverRep:
    """The covering representation of a layout at parameter t."""
    letters = _d4_letters(field, t) if layout["kind"] == "d4" else _e6_letters(field, t)
    preset = covering_preset(layout["cols"], layout["rows"])
    dims = layout["dims"]
    maps = {}
    for arrow, label in layout["arrows"].items():
        source, _ = preset.arrows[arrow]
        maps[arrow] = _word(letters, label, field, dims.get(source, 0))
    return QuiverRep.build(preset, field, dims, maps)


def family_layout(spec: FamilySpec) -> Dict:
    if spec.name == "ext_kk":
        return extended_layout(spec.params["k"], spec.params["n"])
    if spec.name not in GRID_LAYOUTS:
        raise ValueError(f"family {spec.name} is not built on the covering grid")
    return GRID_LAYOUTS[spec.name]


def family_grid_rep(spec: FamilySpec, t) -> QuiverRep:
    return grid_rep(family_layout(spec), spec.field, spec.field(t))


# ----------------------------------------------------------------------
# Dispatcher
# ----------------------------------------------------------------------
def build_family_member(spec: FamilySpec, t) -> Union[ExactMatrix, Tuple[ExactMatrix, ExactMatrix]]:
    """
    The member at parameter t.

    Returns:
        an element of N_p (or n_p) of the family's block vector, or the
        pair (x_t, y_t) for commuting_pair
    """
    value = spec.field(t)
    if spec.name == "levi_nilr_111":
        return levi_nilr_member(spec.field, value)
    if spec.name == "levi_cone_22":
        return levi_cone_member(spec.field, value)
    if spec.name == "commuting_pair":
        return commuting_pair(spec.field, spec.params["n"], spec.params["k"], value)
    layout = family_layout(spec)
    pushed = push_down(grid_rep(layout, spec.field, value))
    shape, n_matrix = rep_to_matrix(pushed, close_top_chain=layout.get("close_top_chain", False))
    if shape.bv != spec.bv:
        raise RuntimeError(f"layout of {spec.name} pushes down to bv={shape.bv}, expected {spec.bv}")
    return n_matrix


def member_matrix(spec: FamilySpec, t) -> ExactMatrix:
    """The N_p element of a member (x_t for commuting_pair)."""
    member = build_family_member(spec, t)
    return member[0] if isinstance(member, tuple) else member


def entries_in_01t(m: ExactMatrix, t) -> bool:
    allowed = {m.field.zero, m.field.one, m.field(t)}
    return all(x in allowed for row in m.entries for x in row)
