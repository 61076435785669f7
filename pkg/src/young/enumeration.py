"""
Enumeration of Reduced Diagrams

Lists every {0,1}-diagram of shape (lambda, mu) that passes check_reduced.
Each P-orbit of block size (|mu|, |lambda| - |mu|) meets at least one of
them, so the count bounds the number of orbits from above.
"""

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from config.algebra_params import REDUCTION_MAX_MU
from src.algebra.field import FieldTag, QQ_FIELD
from src.algebra.jordan import is_partition, partitions_of
from src.validation.errors import MuTooLarge
from src.young.diagram import LabeledYoungDiagram

# a row choice: {column: tuple of 0/1 entries}
RowChoice = Dict[int, Tuple[int, ...]]


def _unit(h: int, s: int) -> Tuple[int, ...]:
    return tuple(1 if t == s else 0 for t in range(1, h + 1))


def _row_options(length: int, mu: Sequence[int]) -> List[Tuple[str, RowChoice]]:
    """All choices for one row: zero, a single unit tuple, or a special row."""
    h = len(mu)
    options: List[Tuple[str, RowChoice]] = [("zero", {})]
    for j in range(1, length + 1):
        for s in range(1, h + 1):
            if mu[s - 1] >= j:
                options.append(("plain", {j: _unit(h, s)}))
    for s in range(1, h + 1):
        for j in range(2, length + 1):
            for s2 in range(1, h + 1):
                if mu[s2 - 1] >= j:
                    options.append(("star", {1: _unit(h, s), j: _unit(h, s2)}))
    if tuple(mu) == (3, 2):
        options.append(("pair", {1: (1, 1)}))
    return options


def enumerate_reduced(
    lam: Sequence[int], mu: Sequence[int], field: FieldTag = QQ_FIELD
) -> List[LabeledYoungDiagram]:
    """
    All diagrams of shape (lam, mu) with entries in {0,1} passing check_reduced.

    Raises:
        MuTooLarge: if |mu| exceeds the reduction range
    """
    lam, mu = tuple(lam), tuple(mu)
    if sum(mu) > REDUCTION_MAX_MU:
        raise MuTooLarge(f"|mu| = {sum(mu)} exceeds {REDUCTION_MAX_MU}", {"mu": list(mu)})
    if not is_partition(lam) or (mu and not is_partition(mu)):
        raise ValueError(f"lambda={lam} and mu={mu} must be partitions")
    if not mu:
        return [LabeledYoungDiagram.zero(lam, mu, field)]

    options = [_row_options(length, mu) for length in lam]
    results: List[LabeledYoungDiagram] = []

    def place(row: int, chosen: List[RowChoice], used: Dict[int, set], special: bool):
        if row == len(lam):
            tops = [dict() for _ in mu]
            for i, choice in enumerate(chosen, start=1):
                for j, values in choice.items():
                    for m, value in enumerate(values):
                        if value:
                            tops[m][(i, j)] = value
            results.append(LabeledYoungDiagram.from_tops(lam, mu, field, tops))
            return
        for kind, choice in options[row]:
            if kind in ("star", "pair") and special:
                continue
            keys = []
            for j, values in choice.items():
                if kind == "pair" or (kind == "star" and j == 1):
                    continue
                keys.append((j, values.index(1) + 1))
            if any(s in used.setdefault(j, set()) for j, s in keys):
                continue
            for j, s in keys:
                used[j].add(s)
            place(row + 1, chosen + [choice], used, special or kind in ("star", "pair"))
            for j, s in keys:
                used[j].discard(s)

    place(0, [], {}, False)
    return results


def reduced_census(k: int, l: int, field: FieldTag = QQ_FIELD) -> Dict[str, int]:
    """Number of reduced diagrams for every shape with |lambda| = k and |mu| = l."""
    census: Dict[str, int] = {}
    for lam in partitions_of(k):
        for mu in partitions_of(l) if l else [()]:
            if len(mu) > len(lam) or any(m > p for m, p in zip(mu, lam)):
                continue
            census[f"{list(lam)}|{list(mu)}"] = len(enumerate_reduced(lam, mu, field))
    return census
