"""
Finiteness of P on its Nilpotent Cone

A block vector is representation-infinite iff some coarsening of it
dominates (<=_c) a minimal infinite case or the reversal of one; otherwise
it is dominated by a coarsening of a member of a maximal finite family.
Both directions produce a replayable witness chain.
"""

from functools import lru_cache
from typing import Optional, Tuple

from src.classifier.algebra_type import classify_algebra_type
from src.classifier.tables import (
    get_enabled_finite_families,
    get_enabled_minimal_infinite_cases,
    instantiate,
)
from src.classifier.verdict import (
    FINITE,
    INFINITE,
    UNKNOWN,
    FinitenessVerdict,
    ReductionStep,
    Witness,
)
from src.parabolic.shape import BlockVector, coarsenings, leq_c, merge_cuts


def classify_P_on_Np(bv: BlockVector) -> FinitenessVerdict:
    """
    Decide whether P has finitely many orbits on N_p.

    Args:
        bv: block sizes of the parabolic

    Returns:
        FinitenessVerdict with a witness chain ending at ``bv``
    """
    return _classify_cached(tuple(bv.blocks))


@lru_cache(maxsize=4096)
def _classify_cached(blocks: Tuple[int, ...]) -> FinitenessVerdict:
    bv = BlockVector(blocks)
    infinite = _infinite_witness(bv)
    if infinite is not None:
        return FinitenessVerdict(INFINITE, infinite)
    if bv.p == 1:
        chain = [ReductionStep("start", bv.blocks)]
        return FinitenessVerdict(FINITE, Witness("jordan_forms", "jordan_forms", chain))
    finite = _finite_witness(bv)
    if finite is None:
        # Unreachable while the tables are complete; kept as an explicit state
        return FinitenessVerdict(UNKNOWN, Witness("unresolved", "no table row", []))
    return FinitenessVerdict(FINITE, finite)


def _infinite_witness(bv: BlockVector) -> Optional[Witness]:
    for name, info in get_enabled_minimal_infinite_cases().items():
        minimal = BlockVector(info["blocks"])
        for coarse in coarsenings(bv):
            for oriented, reversed_ in ((minimal, False), (minimal.reverse(), True)):
                if not leq_c(oriented, coarse):
                    continue
                chain = [ReductionStep("start", minimal.blocks)]
                if reversed_ and oriented != minimal:
                    chain.append(ReductionStep("symmetry", oriented.blocks))
                if coarse != oriented:
                    chain.append(ReductionStep("induction", coarse.blocks))
                if coarse != bv:
                    chain.append(ReductionStep("subgroup", bv.blocks))
                return Witness("minimal_infinite", name, chain)
    return None


def _finite_witness(bv: BlockVector) -> Optional[Witness]:
    for name, info in get_enabled_finite_families().items():
        for k in range(info.get("k_min", 1), bv.n + 1):
            member = BlockVector(instantiate(info["template"], k))
            for oriented, reversed_ in ((member, False), (member.reverse(), True)):
                for coarse in coarsenings(oriented):
                    if not leq_c(bv, coarse):
                        continue
                    chain = [ReductionStep("start", member.blocks)]
                    if reversed_ and oriented != member:
                        chain.append(ReductionStep("symmetry", oriented.blocks))
                    if coarse != oriented:
                        chain.append(ReductionStep("subgroup", coarse.blocks))
                    if coarse != bv:
                        chain.append(ReductionStep("induction", bv.blocks))
                    return Witness("finite_family", name, chain, family_k=k)
    return None


def classify_bounded(bv: BlockVector, x: int) -> FinitenessVerdict:
    """
    Finiteness of P on the x-nilpotent part N_p^(x).

    Finite when the bounded algebra A(p, x) is representation-finite or when
    P is already finite on N_p; equal to the N_p verdict when x >= n;
    unknown otherwise.
    """
    if x < 1:
        raise ValueError("nilpotency bound x must be positive")
    full = classify_P_on_Np(bv)
    if x >= bv.n or full.is_finite:
        return full
    if classify_algebra_type(bv.p, x) == FINITE:
        chain = [ReductionStep("start", bv.blocks)]
        return FinitenessVerdict(FINITE, Witness("algebra_type", f"A({bv.p},{x})", chain))
    return FinitenessVerdict(UNKNOWN, Witness("unresolved", f"A({bv.p},{x}) infinite", []))


def verify_witness(bv: BlockVector, verdict: FinitenessVerdict) -> bool:
    """
    Replay a witness chain step by step.

    Checks that the chain starts at a table row, that every step is a legal
    application of its rule in the direction the verdict requires, and that
    it ends at ``bv``.
    """
    witness = verdict.witness
    if witness.kind == "jordan_forms":
        return verdict.is_finite and bv.p == 1
    chain = witness.chain
    if not chain or chain[0].rule != "start":
        return False

    start = BlockVector(chain[0].blocks)
    if witness.kind == "minimal_infinite":
        infinite_rows = get_enabled_minimal_infinite_cases()
        if witness.case not in infinite_rows:
            return False
        if tuple(infinite_rows[witness.case]["blocks"]) != start.blocks:
            return False
        upward = True
    elif witness.kind == "finite_family":
        families = get_enabled_finite_families()
        if witness.case not in families or witness.family_k is None:
            return False
        expected = instantiate(families[witness.case]["template"], witness.family_k)
        if tuple(expected) != start.blocks:
            return False
        upward = False
    else:
        return False

    current = start
    for step in chain[1:]:
        nxt = BlockVector(step.blocks)
        if step.rule == "symmetry":
            ok = nxt == current.reverse()
        elif step.rule == "induction":
            ok = leq_c(current, nxt) if upward else leq_c(nxt, current)
        elif step.rule == "subgroup":
            ok = bool(merge_cuts(nxt, current)) if upward else bool(merge_cuts(current, nxt))
        else:
            ok = False
        if not ok:
            return False
        current = nxt
    return current == bv
