"""
Dimension Dichotomies

Decisions about the nilpotent commuting variety C(N_p) and the nested
punctual Hilbert schemes, derived from the finiteness verdicts.
"""

from typing import Sequence

from config.classifier_tables import DISTINGUISHED_FAMILY_CASES, MAXIMAL_PARABOLIC_SMALL_BLOCK
from src.classifier.block_vectors import classify_P_on_Np
from src.parabolic.shape import BlockVector, leq_c

DIM_P_MINUS_1 = "dim_p_minus_1"
AT_LEAST_DIM_P = "at_least_dim_p"
UNKNOWN = "unknown"

EQUALS_N_MINUS_1 = "equals_n_minus_1"
AT_LEAST_N = "at_least_n"
FINITE_CASE_N_MINUS_1 = "finite_case_n_minus_1"


def dominates_distinguished_family(bv: BlockVector) -> bool:
    """True iff bv or its reversal dominates a case with a distinguished one-parameter family."""
    for blocks in DISTINGUISHED_FAMILY_CASES:
        case = BlockVector(blocks)
        if leq_c(case, bv) or leq_c(case.reverse(), bv):
            return True
    return False


def commuting_dichotomy(bv: BlockVector) -> str:
    """
    dim C(N_p) versus dim p.

    Returns:
        "dim_p_minus_1" in the finite cases and for maximal parabolics with a
        block of size <= 5, "at_least_dim_p" when a distinguished family is
        available, "unknown" otherwise (e.g. the Borel of GL_6)
    """
    if classify_P_on_Np(bv).is_finite:
        return DIM_P_MINUS_1
    if bv.p == 2:
        if min(bv.blocks) <= MAXIMAL_PARABOLIC_SMALL_BLOCK:
            return DIM_P_MINUS_1
        return AT_LEAST_DIM_P
    if dominates_distinguished_family(bv):
        return AT_LEAST_DIM_P
    return UNKNOWN


def hilbert_dim_report(k: int, n: int) -> str:
    """
    Dimension of the nested Hilbert scheme Hilb(k, n).

    Args:
        k: length of the smaller subscheme, 1 <= k < n
        n: length of the larger subscheme

    Returns:
        "equals_n_minus_1" when k <= 5 or n - k <= 5, else "at_least_n"
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    if min(k, n - k) <= MAXIMAL_PARABOLIC_SMALL_BLOCK:
        return EQUALS_N_MINUS_1
    return AT_LEAST_N


def hilbert_dim_report_general(dims: Sequence[int]) -> str:
    """
    Dimension of Hilb(d_1 < ... < d_p) via the transposed block vector.

    Returns:
        "finite_case_n_minus_1" if the transposed parabolic is
        representation-finite, "at_least_n" if it carries a distinguished
        family, "unknown" otherwise
    """
    dims = list(dims)
    if not dims or any(b <= a for a, b in zip([0] + dims, dims)):
        raise ValueError(f"dimension vector must be strictly increasing and positive: {dims}")
    blocks = tuple(b - a for a, b in zip([0] + dims, dims))
    transposed = BlockVector(blocks).reverse()
    if classify_P_on_Np(transposed).is_finite:
        return FINITE_CASE_N_MINUS_1
    if transposed.p == 2 or dominates_distinguished_family(transposed):
        return AT_LEAST_N
    return UNKNOWN
