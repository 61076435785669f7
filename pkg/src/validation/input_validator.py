"""
Input Validation Module

Checks user-supplied JSON (matrix literals, rep files, pair files and
diagrams) before it reaches the constructors, so that a malformed file
fails fast with every problem listed instead of the first exception.
"""

from fractions import Fraction
from typing import Any, List, Optional

from rich.console import Console
from rich.panel import Panel

from config.algebra_params import DEFAULT_FIELD
from src.algebra.field import FieldTag
from src.quiver.presets import QuiverPreset

console = Console(stderr=True)

INPUT_KINDS = ("matrix", "rep", "pair", "diagram")


class ValidationIssue:
    """A single problem found in an input file."""

    def __init__(self, category: str, message: str, severity: str = "ERROR"):
        """
        Args:
            category: where the problem is (e.g. "MATRIX", "REP", "PAIR")
            message: detailed message
            severity: "ERROR" or "WARNING"
        """
        self.category = category
        self.message = message
        self.severity = severity

    def __str__(self):
        return f"[{self.severity}] {self.category}: {self.message}"

    def __repr__(self):
        return self.__str__()


class InputValidator:
    """
    Validates one JSON document of a given kind.

    Checks:
    - required keys are present
    - the field label parses
    - entry grids match the declared sizes
    - scalars are integers in [0, q) over GF(q), integers or "a/b" over Q
    """

    def __init__(self, data: Any, kind: str):
        if kind not in INPUT_KINDS:
            raise ValueError(f"Unknown input kind '{kind}' (expected one of {INPUT_KINDS})")
        self.data = data
        self.kind = kind
        self.errors: List[ValidationIssue] = []
        self.warnings: List[ValidationIssue] = []

    def validate(self) -> List[ValidationIssue]:
        self.errors = []
        self.warnings = []
        if not isinstance(self.data, dict):
            self._error(self.kind.upper(), "document must be a JSON object")
            return self.errors
        {
            "matrix": lambda: self._validate_matrix(self.data, "MATRIX"),
            "rep": self._validate_rep,
            "pair": self._validate_pair,
            "diagram": self._validate_diagram,
        }[self.kind]()
        return self.errors + self.warnings

    def _error(self, category: str, message: str):
        self.errors.append(ValidationIssue(category, message))

    def _warn(self, category: str, message: str):
        self.warnings.append(ValidationIssue(category, message, "WARNING"))

    # ------------------------------------------------------------------
    # Pieces
    # ------------------------------------------------------------------
    def _field(self, label: Any, category: str) -> Optional[FieldTag]:
        try:
            return FieldTag.parse(label)
        except (ValueError, TypeError) as err:
            self._error(category, f"bad field {label!r}: {err}")
            return None

    def _validate_scalar(self, value: Any, field: FieldTag, category: str, where: str):
        if field.is_finite:
            if isinstance(value, bool) or not isinstance(value, int):
                self._error(category, f"{where}: {value!r} is not an integer")
            elif not 0 <= value < field.order:
                self._error(category, f"{where}: {value} is outside [0, {field.order})")
            return
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            self._error(category, f"{where}: {value!r} is neither an integer nor an 'a/b' string")
            return
        if isinstance(value, str):
            try:
                Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                self._error(category, f"{where}: {value!r} is not a rational")

    def _validate_matrix(self, data: Any, category: str, field: FieldTag = None, shape=None):
        if not isinstance(data, dict) or "entries" not in data:
            self._error(category, "matrix literal needs an 'entries' grid")
            return
        if "field" in data:
            field = self._field(data["field"], category)
        elif field is None:
            self._warn(category, f"no field given; reading entries over {DEFAULT_FIELD}")
            field = FieldTag.parse(DEFAULT_FIELD)
        if field is None:
            return
        entries = data["entries"]
        if not isinstance(entries, list) or any(not isinstance(row, list) for row in entries):
            self._error(category, "'entries' must be a list of rows")
            return
        rows = data.get("rows", len(entries))
        cols = data.get("cols", len(entries[0]) if entries else 0)
        if len(entries) != rows:
            self._error(category, f"declared {rows} rows, found {len(entries)}")
        for i, row in enumerate(entries):
            if len(row) != cols:
                self._error(category, f"row {i} has {len(row)} entries, expected {cols}")
            for j, value in enumerate(row):
                self._validate_scalar(value, field, category, f"entry ({i},{j})")
        if shape is not None and (rows, cols) != shape:
            self._error(category, f"matrix is {rows}x{cols}, expected {shape[0]}x{shape[1]}")

    def _validate_rep(self):
        data = self.data
        for key in ("preset", "field", "dims"):
            if key not in data:
                self._error("REP", f"missing key '{key}'")
        if self.errors:
            return
        field = self._field(data["field"], "REP")
        try:
            preset = QuiverPreset.from_dict(data["preset"])
        except (KeyError, ValueError, TypeError) as err:
            self._error("REP", f"bad preset {data['preset']!r}: {err}")
            return
        dims = data["dims"]
        if len(dims) != len(preset.vertices) or any(not isinstance(d, int) or d < 0 for d in dims):
            self._error("REP", f"{preset.label} needs {len(preset.vertices)} non-negative dimensions")
            return
        if field is None:
            return
        dim_of = dict(zip(preset.vertices, dims))
        maps = data.get("maps", {})
        for arrow in maps:
            if arrow not in preset.arrows:
                self._error("REP", f"unknown arrow '{arrow}' for {preset.label}")
        for arrow, (source, target) in preset.arrows.items():
            if arrow in maps:
                self._validate_matrix(maps[arrow], f"REP:{arrow}", field, (dim_of[target], dim_of[source]))
            elif dim_of[source] and dim_of[target]:
                self._warn("REP", f"arrow '{arrow}' missing; it is read as zero")

    def _validate_pair(self):
        data = self.data
        if "f" not in data:
            self._error("PAIR", "missing key 'f'")
            return
        field = self._field(data.get("field", data["f"].get("field", DEFAULT_FIELD) if isinstance(data["f"], dict) else DEFAULT_FIELD), "PAIR")
        if field is None:
            return
        self._validate_matrix(data["f"], "PAIR:f", field)
        entries = data["f"].get("entries", []) if isinstance(data["f"], dict) else []
        n = len(entries)
        if any(len(row) != n for row in entries):
            self._error("PAIR", "f must be square")
        for index, vector in enumerate(data.get("U", [])):
            if not isinstance(vector, list) or len(vector) != n:
                self._error("PAIR", f"vector {index} of U must have length {n}")
                continue
            for j, value in enumerate(vector):
                self._validate_scalar(value, field, "PAIR", f"U[{index}][{j}]")

    def _validate_diagram(self):
        data = self.data
        for key in ("lambda", "mu"):
            parts = data.get(key)
            if not isinstance(parts, list) or any(not isinstance(p, int) or p <= 0 for p in parts):
                self._error("DIAGRAM", f"'{key}' must be a list of positive integers")
            elif any(a < b for a, b in zip(parts, parts[1:])):
                self._error("DIAGRAM", f"'{key}' must be non-increasing")
        if self.errors:
            return
        field = self._field(data.get("field", DEFAULT_FIELD), "DIAGRAM")
        if field is None:
            return
        lam, h = data["lambda"], len(data["mu"])
        for key, values in data.get("gamma", {}).items():
            try:
                i, j = (int(part) for part in key.split(","))
            except ValueError:
                self._error("DIAGRAM", f"box key {key!r} is not 'i,j'")
                continue
            if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
                self._error("DIAGRAM", f"box ({i},{j}) is outside lambda")
            if len(values) != h:
                self._error("DIAGRAM", f"box {key} carries {len(values)} entries, expected {h}")
            for value in values:
                self._validate_scalar(value, field, "DIAGRAM", f"box {key}")

    # ------------------------------------------------------------------
    # Report
    # ------------------------------------------------------------------
    def has_errors(self) -> bool:
        return len(self.errors) > 0

    def has_warnings(self) -> bool:
        return len(self.warnings) > 0

    def print_report(self, out: Console = None):
        out = out or console
        if self.errors:
            lines = "\n".join(f"[red]{issue}[/red]" for issue in self.errors + self.warnings)
            out.print(Panel(lines, title=f"Invalid {self.kind} input", border_style="red"))
        elif self.warnings:
            lines = "\n".join(f"[yellow]{issue}[/yellow]" for issue in self.warnings)
            out.print(Panel(lines, title=f"{self.kind} input warnings", border_style="yellow"))


def validate_input(data: Any, kind: str, strict: bool = False, out: Console = None) -> bool:
    """
    Validate a JSON document and print the issues.

    Args:
        data: parsed JSON
        kind: one of INPUT_KINDS
        strict: treat warnings as errors

    Returns:
        True if validation passed (or only warnings in non-strict mode)

    Raises:
        ValueError: if validation fails
    """
    validator = InputValidator(data, kind)
    validator.validate()
    validator.print_report(out)
    if validator.has_errors():
        raise ValueError(f"{kind} input failed validation with {len(validator.errors)} error(s)")
    if strict and validator.has_warnings():
        raise ValueError(f"{kind} input has warnings and strict validation is on")
    return True
