"""
JSON Codecs

File formats shared by the CLI, the fixtures and the exported results:

    matrix   {"field": "Q" | "GF(q)", "rows": r, "cols": c, "entries": [[...], ...]}
             rationals as "a/b" strings (integers plain), GF(q) entries in [0, q)
    rep      {"preset": {...}, "field": ..., "dims": [...], "maps": {arrow: matrix}}
    pair     {"field": ..., "f": matrix, "U": [[...], ...]}  (U spanned by the rows)
    diagram  {"lambda": [...], "mu": [...], "field": ..., "gamma": {"i,j": [...]}}

Everything else (verdicts, tables, certificates) is written through its own
to_dict(). dumps() sorts keys so identical results give identical bytes.
"""

import json
from pathlib import Path
from typing import Any, Dict, Tuple, Union

from config.algebra_params import DEFAULT_FIELD
from src.algebra.field import FieldTag
from src.algebra.linalg import Subspace, span
from src.algebra.matrix import ExactMatrix
from src.quiver.presets import QuiverPreset
from src.quiver.representation import QuiverRep
from src.validation.errors import SizeMismatch
from src.young.diagram import LabeledYoungDiagram


# ----------------------------------------------------------------------
# Matrices
# ----------------------------------------------------------------------
def matrix_to_json(m: ExactMatrix) -> Dict[str, Any]:
    return {"field": m.field.label, "rows": m.rows, "cols": m.cols, "entries": m.to_plain()}


def matrix_from_json(data: Dict[str, Any], field: Union[str, FieldTag] = None) -> ExactMatrix:
    """
    Parse a matrix literal.

    Args:
        data: matrix literal
        field: field to use when the literal has no "field" key

    Raises:
        SizeMismatch: if the entry grid does not match rows/cols
    """
    tag = FieldTag.parse(data.get("field", field or DEFAULT_FIELD))
    rows = int(data.get("rows", len(data["entries"])))
    cols = int(data.get("cols", len(data["entries"][0]) if data["entries"] else 0))
    entries = data["entries"]
    if len(entries) != rows or any(len(row) != cols for row in entries):
        raise SizeMismatch(f"matrix literal declares {rows}x{cols} but its entries do not match")
    return ExactMatrix.from_rows(tag, entries, cols=cols)


# ----------------------------------------------------------------------
# Representations
# ----------------------------------------------------------------------
def rep_to_json(r: QuiverRep) -> Dict[str, Any]:
    return {
        "preset": r.preset.to_dict(),
        "field": r.field.label,
        "dims": list(r.dims),
        "maps": {arrow: matrix_to_json(r.maps[arrow]) for arrow in sorted(r.maps)},
    }


def rep_from_json(data: Dict[str, Any]) -> QuiverRep:
    """
    Raises:
        SizeMismatch, RelationViolation: from the QuiverRep constructor
    """
    field = FieldTag.parse(data["field"])
    preset = QuiverPreset.from_dict(data["preset"])
    if len(data["dims"]) != len(preset.vertices):
        raise SizeMismatch(f"{preset.label} has {len(preset.vertices)} vertices, got {len(data['dims'])} dimensions")
    dims = dict(zip(preset.vertices, (int(d) for d in data["dims"])))
    maps = {arrow: matrix_from_json(m, field) for arrow, m in data.get("maps", {}).items()}
    return QuiverRep.build(preset, field, dims, maps)


# ----------------------------------------------------------------------
# Pairs and diagrams
# ----------------------------------------------------------------------
def pair_from_json(data: Dict[str, Any]) -> Tuple[Subspace, ExactMatrix]:
    """(U, f) from a pair literal; U is the row span of "U"."""
    field = FieldTag.parse(data.get("field", data["f"].get("field", DEFAULT_FIELD)))
    f = matrix_from_json(data["f"], field)
    if f.rows != f.cols:
        raise SizeMismatch(f"f must be square, got {f.rows}x{f.cols}")
    vectors = [tuple(field(x) for x in v) for v in data.get("U", [])]
    if any(len(v) != f.rows for v in vectors):
        raise SizeMismatch(f"vectors of U must have length {f.rows}")
    return span(field, f.rows, vectors), f


def pair_to_json(u: Subspace, f: ExactMatrix) -> Dict[str, Any]:
    field = f.field
    return {
        "field": field.label,
        "f": matrix_to_json(f),
        "U": [[field.to_plain(x) for x in v] for v in u.vectors],
    }


def diagram_to_json(d: LabeledYoungDiagram) -> Dict[str, Any]:
    return d.to_dict()


def diagram_from_json(data: Dict[str, Any]) -> LabeledYoungDiagram:
    return LabeledYoungDiagram.from_dict(data)


# ----------------------------------------------------------------------
# Files
# ----------------------------------------------------------------------
def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True, default=str)


def read_json(path: Union[str, Path]) -> Any:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def write_json(data: Any, path: Union[str, Path]) -> str:
    """Write data as sorted, indented JSON; creates parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps(data))
        handle.write("\n")
    return str(path)
