"""Finiteness decisions for parabolic actions on nilpotent matrices."""

from src.classifier.verdict import (
    FINITE,
    INFINITE,
    UNKNOWN,
    FinitenessVerdict,
    ReductionStep,
    Witness,
)
from src.classifier.algebra_type import classify_algebra_type, classify_delta_type
from src.classifier.block_vectors import classify_bounded, classify_P_on_Np, verify_witness
from src.classifier.levi import classify_levi
from src.classifier.dichotomy import (
    commuting_dichotomy,
    hilbert_dim_report,
    hilbert_dim_report_general,
)

__all__ = [
    "FINITE",
    "INFINITE",
    "UNKNOWN",
    "FinitenessVerdict",
    "ReductionStep",
    "Witness",
    "classify_algebra_type",
    "classify_delta_type",
    "classify_bounded",
    "classify_P_on_Np",
    "verify_witness",
    "classify_levi",
    "commuting_dichotomy",
    "hilbert_dim_report",
    "hilbert_dim_report_general",
]
