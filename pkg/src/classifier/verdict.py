"""
Finiteness Verdicts

A verdict carries a replayable witness: a chain of block vectors linked by
the three reduction rules.

    symmetry   - reversal of the block vector (transposed parabolic)
    induction  - <=_c comparison (finite goes down, infinite goes up)
    subgroup   - merging adjacent blocks (finite goes to the coarser vector,
                 infinite goes to the finer one)
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

FINITE = "finite"
INFINITE = "infinite"
UNKNOWN = "unknown"

REDUCTION_RULES = ("start", "symmetry", "induction", "subgroup")


@dataclass(frozen=True)
class ReductionStep:
    """One link of a witness chain: the rule applied and the resulting blocks."""

    rule: str
    blocks: Tuple[int, ...]

    def to_dict(self) -> Dict:
        return {"rule": self.rule, "blocks": list(self.blocks)}


@dataclass
class Witness:
    """
    Certificate behind a verdict.

    Attributes:
        kind: "minimal_infinite", "finite_family", "jordan_forms",
            "levi_rule", "algebra_type", "unresolved"
        case: registry name of the table row used (or a rule label)
        chain: replayable reduction chain ending at the queried blocks
        family_k: value of the free block k for finite-family witnesses
    """

    kind: str
    case: str
    chain: List[ReductionStep] = field(default_factory=list)
    family_k: Optional[int] = None

    def to_dict(self) -> Dict:
        payload = {
            "kind": self.kind,
            "case": self.case,
            "chain": [step.to_dict() for step in self.chain],
        }
        if self.family_k is not None:
            payload["k"] = self.family_k
        return payload


@dataclass
class FinitenessVerdict:
    verdict: str
    witness: Witness

    @property
    def is_finite(self) -> bool:
        return self.verdict == FINITE

    @property
    def is_infinite(self) -> bool:
        return self.verdict == INFINITE

    def validate(self) -> List[str]:
        errors = []
        if self.verdict not in (FINITE, INFINITE, UNKNOWN):
            errors.append(f"unknown verdict value '{self.verdict}'")
        for step in self.witness.chain:
            if step.rule not in REDUCTION_RULES:
                errors.append(f"unknown reduction rule '{step.rule}'")
        return errors

    def to_dict(self) -> Dict:
        return {"verdict": self.verdict, "witness": self.witness.to_dict()}
