"""Input validation of JSON documents and the shared result containers."""

import pytest

from src.algebra.field import QQ_FIELD
from src.core.types import Certificate, CommandResult
from src.exporter.serialization import rep_to_json
from src.quiver import covering_preset, standard_modules
from src.validation.input_validator import InputValidator, validate_input


def messages(data, kind):
    return [str(issue) for issue in InputValidator(data, kind).validate()]


def t21_document():
    return rep_to_json(standard_modules(covering_preset(2, 2), QQ_FIELD).T(2, 1))


# ----------------------------------------------------------------------
# Matrices
# ----------------------------------------------------------------------
def test_valid_matrix_passes():
    assert messages({"field": "GF(5)", "rows": 2, "cols": 2, "entries": [[0, 4], [0, 0]]}, "matrix") == []
    assert messages({"field": "Q", "entries": [["1/2", -3]]}, "matrix") == []


@pytest.mark.parametrize(
    "data,fragment",
    [
        ({"field": "GF(5)", "entries": [[7]]}, "outside [0, 5)"),
        ({"field": "GF(5)", "entries": [[True]]}, "not an integer"),
        ({"field": "Q", "entries": [["1/0"]]}, "not a rational"),
        ({"field": "Q", "entries": [[1.5]]}, "neither an integer"),
        ({"field": "Q", "entries": [[1, 2], [3]]}, "row 1 has 1 entries"),
        ({"field": "Q", "rows": 3, "entries": [[1]]}, "declared 3 rows"),
        ({"field": "GF(4)", "entries": [[1]]}, "bad field"),
        ({"field": "Q"}, "needs an 'entries' grid"),
    ],
)
def test_bad_matrices(data, fragment):
    found = messages(data, "matrix")
    assert any(fragment in m for m in found), found


def test_missing_field_is_a_warning():
    data = {"entries": [[0, 1], [0, 0]]}
    validator = InputValidator(data, "matrix")
    validator.validate()
    assert not validator.has_errors()
    assert validator.has_warnings()
    assert validate_input(data, "matrix")
    with pytest.raises(ValueError):
        validate_input(data, "matrix", strict=True)


def test_validate_input_raises_on_errors():
    with pytest.raises(ValueError, match="1 error"):
        validate_input({"field": "GF(3)", "entries": [[3]]}, "matrix")


def test_unknown_kind_and_non_object():
    with pytest.raises(ValueError):
        InputValidator({}, "tensor")
    assert messages([1, 2], "rep") == ["[ERROR] REP: document must be a JSON object"]


# ----------------------------------------------------------------------
# Representations, pairs and diagrams
# ----------------------------------------------------------------------
def test_serialized_rep_passes():
    assert messages(t21_document(), "rep") == []


def test_rep_problems_are_listed():
    data = t21_document()
    data["maps"]["gamma_9"] = {"field": "Q", "entries": [[1]]}
    assert any("unknown arrow 'gamma_9'" in m for m in messages(data, "rep"))

    data = t21_document()
    data["dims"] = data["dims"][:-1]
    assert any("non-negative dimensions" in m for m in messages(data, "rep"))

    data = t21_document()
    del data["preset"]
    assert any("missing key 'preset'" in m for m in messages(data, "rep"))

    data = t21_document()
    data["preset"] = {"kind": "tree"}
    assert any("bad preset" in m for m in messages(data, "rep"))


def test_missing_arrow_is_a_warning():
    data = t21_document()
    arrow = next(iter(data["maps"]))
    del data["maps"][arrow]
    validator = InputValidator(data, "rep")
    validator.validate()
    assert not validator.has_errors()


def test_pair_vectors_must_match_f():
    data = {"field": "Q", "f": {"entries": [[0, 1], [0, 0]]}, "U": [[1, 0, 0]]}
    assert any("length 2" in m for m in messages(data, "pair"))
    assert messages({"field": "Q", "f": {"entries": [[0, 1], [0, 0]]}, "U": [[1, 0]]}, "pair") == []


def test_diagram_checks():
    good = {"lambda": [2, 1], "mu": [1], "field": "Q", "gamma": {"1,1": ["1/2"], "2,1": [3]}}
    assert messages(good, "diagram") == []
    assert any("non-increasing" in m for m in messages({"lambda": [1, 2], "mu": []}, "diagram"))
    outside = dict(good, gamma={"3,1": [1]})
    assert any("outside lambda" in m for m in messages(outside, "diagram"))
    wrong_height = dict(good, gamma={"1,1": [1, 2]})
    assert any("expected 1" in m for m in messages(wrong_height, "diagram"))


# ----------------------------------------------------------------------
# Result containers
# ----------------------------------------------------------------------
def test_certificate_collects_checks():
    certificate = Certificate("sample", "Q")
    assert certificate.validate() == ["certificate carries no checks"]
    certificate.add("membership", True)
    certificate.add("pairwise_non_isomorphic", False, "1 conjugate pair", {"pairs": [[1, 2]]})
    assert not certificate.passed
    assert [c.name for c in certificate.failures()] == ["pairwise_non_isomorphic"]
    certificate.add("membership", True)
    assert certificate.validate() == ["duplicate check names"]


def test_command_result_json_has_no_timing():
    result = CommandResult({"name": "classify"}, elapsed=1.5)
    assert result.ok and result.exit_code == 0
    assert set(result.to_dict()) == {"command", "status", "payload"}
    assert CommandResult({}, status="broken").validate() == ["unknown status 'broken'", "command echo has no name"]
