"""Representation type of the bounded algebra A(p, x) and of Delta-filtered covering reps."""

from config.classifier_tables import ALGEBRA_TYPE_FINITE_PAIRS, DELTA_TYPE_FINITE_PAIRS
from src.classifier.verdict import FINITE, INFINITE


def classify_algebra_type(p: int, x: int) -> str:
    """A(p, x) is representation-finite iff p = 1 or x = 1 or (p, x) in {(2,2), (2,3), (3,2)}."""
    if p < 1 or x < 1:
        raise ValueError("p and x must be positive")
    if p == 1 or x == 1 or (p, x) in ALGEBRA_TYPE_FINITE_PAIRS:
        return FINITE
    return INFINITE


def classify_delta_type(p: int, n: int) -> str:
    """Delta-filtered reps of the p-column, n-row grid have finite type iff p = 1, n <= 2 or a listed pair."""
    if p < 1 or n < 1:
        raise ValueError("p and n must be positive")
    if p == 1 or n <= 2 or (p, n) in DELTA_TYPE_FINITE_PAIRS:
        return FINITE
    return INFINITE
