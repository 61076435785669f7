"""
Tests for the finiteness classifier.

The truth table fixture lists every finite block vector with n <= 8; the
classifier must agree with it on all 255 compositions and every witness it
produces must replay.
"""

import json

import pytest

from config.io_paths import CLASSIFIER_TABLE_PATH
from src.classifier import (
    FINITE,
    INFINITE,
    UNKNOWN,
    classify_algebra_type,
    classify_bounded,
    classify_delta_type,
    classify_levi,
    classify_P_on_Np,
    commuting_dichotomy,
    hilbert_dim_report,
    hilbert_dim_report_general,
    verify_witness,
)
from src.classifier.tables import (
    get_all_finite_families,
    get_all_minimal_infinite_cases,
    get_enabled_minimal_infinite_cases,
    instantiate,
)
from src.classifier.verdict import ReductionStep, Witness, FinitenessVerdict
from src.parabolic.shape import BlockVector, compositions

TRUTH_TABLE = json.loads(CLASSIFIER_TABLE_PATH.read_text())


def bv(*blocks):
    return BlockVector(tuple(blocks))


def expected_finite(blocks):
    n = sum(blocks)
    if n <= TRUTH_TABLE["all_finite_up_to"]:
        return True
    return list(blocks) in TRUTH_TABLE["finite"][str(n)]


# ----------------------------------------------------------------------
# Truth table
# ----------------------------------------------------------------------
@pytest.mark.parametrize("n", range(1, 9))
def test_matches_truth_table(n):
    for blocks in compositions(n):
        verdict = classify_P_on_Np(blocks)
        expected = FINITE if expected_finite(blocks.blocks) else INFINITE
        assert verdict.verdict == expected, f"{blocks}: got {verdict.verdict}"


@pytest.mark.parametrize("n", [6, 7, 8])
def test_truth_table_counts(n):
    verdicts = [classify_P_on_Np(blocks).verdict for blocks in compositions(n)]
    assert verdicts.count(FINITE) == TRUTH_TABLE["counts"][str(n)]["finite"]
    assert verdicts.count(INFINITE) == TRUTH_TABLE["counts"][str(n)]["infinite"]


@pytest.mark.parametrize("n", range(1, 9))
def test_verdict_is_reversal_symmetric(n):
    for blocks in compositions(n):
        assert classify_P_on_Np(blocks).verdict == classify_P_on_Np(blocks.reverse()).verdict


@pytest.mark.parametrize("n", range(1, 9))
def test_every_witness_replays(n):
    for blocks in compositions(n):
        verdict = classify_P_on_Np(blocks)
        assert verdict.validate() == []
        assert verify_witness(blocks, verdict), f"witness for {blocks} does not replay"


def test_never_unknown_on_large_samples():
    for blocks in [bv(5, 40), bv(1, 3, 17, 1), bv(3, 1, 9, 1), bv(1, 1, 1, 12, 1)]:
        assert classify_P_on_Np(blocks).verdict == FINITE
    for blocks in [bv(6, 6), bv(2, 9, 2), bv(1, 4, 6), bv(4, 1, 4), bv(1, 1, 1, 1, 1, 1, 1)]:
        assert classify_P_on_Np(blocks).verdict == INFINITE


# ----------------------------------------------------------------------
# Witness content
# ----------------------------------------------------------------------
def test_two_two_two_is_its_own_witness():
    verdict = classify_P_on_Np(bv(2, 2, 2))
    assert verdict.is_infinite
    assert verdict.witness.kind == "minimal_infinite"
    assert verdict.witness.case == "d4_222"
    assert [step.rule for step in verdict.witness.chain] == ["start"]


def test_five_k_family_witness():
    verdict = classify_P_on_Np(bv(5, 4))
    assert verdict.is_finite
    assert verdict.witness.case == "five_k"
    assert verdict.witness.family_k == 4
    assert verdict.to_dict()["witness"]["k"] == 4


def test_single_block_uses_jordan_forms():
    verdict = classify_P_on_Np(bv(7))
    assert verdict.is_finite
    assert verdict.witness.kind == "jordan_forms"
    assert verify_witness(bv(7), verdict)


def test_reversed_witness_uses_symmetry():
    verdict = classify_P_on_Np(bv(4, 1, 2, 1))
    assert verdict.is_infinite
    assert "symmetry" in [step.rule for step in verdict.witness.chain]
    assert verify_witness(bv(4, 1, 2, 1), verdict)


def test_tampered_witness_is_rejected():
    verdict = classify_P_on_Np(bv(2, 3, 2))
    assert verify_witness(bv(2, 3, 2), verdict)
    assert not verify_witness(bv(2, 2, 3), verdict)
    forged = FinitenessVerdict(
        INFINITE,
        Witness("minimal_infinite", "d4_222", [ReductionStep("start", (2, 2, 2)), ReductionStep("induction", (1, 1, 1))]),
    )
    assert not verify_witness(bv(1, 1, 1), forged)


def test_validate_flags_unknown_rule():
    bad = FinitenessVerdict(FINITE, Witness("finite_family", "five_k", [ReductionStep("teleport", (5, 1))], 1))
    assert bad.validate() == ["unknown reduction rule 'teleport'"]


# ----------------------------------------------------------------------
# Registries
# ----------------------------------------------------------------------
def test_registry_sorted_by_priority():
    priorities = [info["priority"] for info in get_all_minimal_infinite_cases().values()]
    assert priorities == sorted(priorities)
    assert set(get_enabled_minimal_infinite_cases()) <= set(get_all_minimal_infinite_cases())


def test_instantiate_template():
    assert instantiate(get_all_finite_families()["one_three_k_one"]["template"], 7) == (1, 3, 7, 1)


# ----------------------------------------------------------------------
# Bounded cones, Levi actions, algebra types
# ----------------------------------------------------------------------
def test_bounded_cone():
    assert classify_bounded(bv(2, 2, 2), 1).verdict == FINITE
    assert classify_bounded(bv(2, 2, 2), 2).verdict == FINITE
    assert classify_bounded(bv(2, 2, 2), 3).verdict == UNKNOWN
    assert classify_bounded(bv(2, 2, 2), 6).verdict == INFINITE
    assert classify_bounded(bv(5, 3), 2).verdict == FINITE
    with pytest.raises(ValueError):
        classify_bounded(bv(1, 1), 0)


def test_levi_on_nilradical():
    assert classify_levi(bv(3, 4), "nilradical").is_finite
    verdict = classify_levi(bv(1, 2, 1), "nilradical")
    assert verdict.is_infinite
    assert verdict.witness.case == "levi_nilr_111"


def test_levi_on_cone():
    assert classify_levi(bv(1, 3), "nilpotent_cone").is_finite
    assert classify_levi(bv(5,), "nilpotent_cone").is_finite
    verdict = classify_levi(bv(2, 2), "nilpotent_cone")
    assert verdict.is_infinite
    assert verdict.witness.case == "levi_cone_22"
    with pytest.raises(ValueError):
        classify_levi(bv(2, 2), "everything")


@pytest.mark.parametrize(
    "p,x,expected",
    [(1, 9, FINITE), (9, 1, FINITE), (2, 2, FINITE), (2, 3, FINITE), (3, 2, FINITE), (3, 3, INFINITE), (2, 4, INFINITE)],
)
def test_algebra_type(p, x, expected):
    assert classify_algebra_type(p, x) == expected


@pytest.mark.parametrize(
    "p,n,expected",
    [(1, 8, FINITE), (7, 2, FINITE), (4, 3, FINITE), (2, 5, FINITE), (5, 3, INFINITE), (3, 4, INFINITE), (2, 6, INFINITE)],
)
def test_delta_type(p, n, expected):
    assert classify_delta_type(p, n) == expected


# ----------------------------------------------------------------------
# Dichotomies
# ----------------------------------------------------------------------
def test_commuting_dichotomy():
    assert commuting_dichotomy(bv(1, 2)) == "dim_p_minus_1"
    assert commuting_dichotomy(bv(5, 9)) == "dim_p_minus_1"
    assert commuting_dichotomy(bv(6, 6)) == "at_least_dim_p"
    assert commuting_dichotomy(bv(2, 3, 2)) == "at_least_dim_p"
    assert commuting_dichotomy(bv(1, 1, 1, 1, 1, 1)) == "unknown"


def test_hilbert_reports():
    assert hilbert_dim_report(3, 20) == "equals_n_minus_1"
    assert hilbert_dim_report(6, 12) == "at_least_n"
    with pytest.raises(ValueError):
        hilbert_dim_report(4, 4)
    assert hilbert_dim_report_general([2, 4, 6]) == "at_least_n"
    assert hilbert_dim_report_general([1, 3]) == "finite_case_n_minus_1"
    with pytest.raises(ValueError):
        hilbert_dim_report_general([3, 2])
