"""
Levi Actions

L_P acting on the nilradical n_p is finite iff p <= 2. L_P acting on N_p
is finite iff p = 1 or bv is (1, n-1) or (n-1, 1).
"""

from src.classifier.verdict import FINITE, INFINITE, FinitenessVerdict, ReductionStep, Witness
from src.parabolic.shape import BlockVector, leq_c

LEVI_TARGETS = ("nilradical", "nilpotent_cone")

_NILRADICAL_FAMILY = BlockVector((1, 1, 1))
_CONE_FAMILY = BlockVector((2, 2))


def classify_levi(bv: BlockVector, target: str) -> FinitenessVerdict:
    """
    Args:
        bv: block sizes
        target: "nilradical" or "nilpotent_cone"

    Returns:
        FinitenessVerdict; infinite witnesses name the family that is
        induced up to ``bv`` by <=_c
    """
    if target not in LEVI_TARGETS:
        raise ValueError(f"Unknown Levi target '{target}' (expected one of {LEVI_TARGETS})")

    if target == "nilradical":
        if bv.p <= 2:
            return _finite(bv, "A2 quiver" if bv.p == 2 else "zero nilradical")
        return _infinite(bv, "levi_nilr_111", _NILRADICAL_FAMILY)

    n = bv.n
    if bv.p == 1 or bv.blocks in ((1, n - 1), (n - 1, 1)):
        return _finite(bv, "jordan_forms" if bv.p == 1 else "enhanced nilpotent cone")
    if bv.p >= 3:
        return _infinite(bv, "levi_nilr_111", _NILRADICAL_FAMILY)
    return _infinite(bv, "levi_cone_22", _CONE_FAMILY)


def _finite(bv: BlockVector, case: str) -> FinitenessVerdict:
    return FinitenessVerdict(FINITE, Witness("levi_rule", case, [ReductionStep("start", bv.blocks)]))


def _infinite(bv: BlockVector, case: str, family: BlockVector) -> FinitenessVerdict:
    assert leq_c(family, bv)
    chain = [ReductionStep("start", family.blocks)]
    if family != bv:
        chain.append(ReductionStep("induction", bv.blocks))
    return FinitenessVerdict(INFINITE, Witness("levi_rule", case, chain))
