"""
Representation-Side Orbit Counts

Counts isomorphism classes of the quiver representations attached to the
points of a target set, without ever conjugating a matrix. Agreement with
enumerate_orbits (count and partition) checks the matrix/representation
dictionary independently of the oracle.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional

import numpy as np
from rich.console import Console
from rich.progress import Progress

from src.algebra.matrix import ExactMatrix
from src.parabolic.shape import ParabolicShape
from src.oracle.encoding import enumerate_members, target_codec
from src.quiver.homs import is_isomorphic
from src.quiver.representation import QuiverRep
from src.quiver.translation import levi_rep, matrix_to_rep


@dataclass
class RepClassCount:
    """
    Attributes:
        class_count: number of isomorphism classes
        labels: class index of every member, aligned with ``members``
        members: sorted codes of the target set
        representatives: first matrix met in every class
    """

    class_count: int
    labels: np.ndarray
    members: np.ndarray
    representatives: List[ExactMatrix]

    def same_partition(self, roots: np.ndarray) -> bool:
        """Whether the classes coincide with a partition given by per-member roots."""
        if len(roots) != len(self.labels):
            return False
        pairs = set(zip(self.labels.tolist(), np.asarray(roots).tolist()))
        return len(pairs) == self.class_count == len(set(np.asarray(roots).tolist()))

    def to_dict(self) -> Dict[str, Any]:
        return {"class_count": self.class_count, "target_size": int(len(self.members))}


def rep_of(shape: ParabolicShape, m: ExactMatrix, target: str, acting: str, x: int = None) -> QuiverRep:
    """The representation whose isomorphism class is the orbit of m."""
    if acting == "P":
        if target == "nilradical":
            raise ValueError("P-orbits on the nilradical have no quiver model here; use acting='Levi'")
        return matrix_to_rep(shape, m, x)
    if acting == "Levi":
        return levi_rep(shape, m, "nilradical" if target == "nilradical" else "cone", x)
    raise ValueError(f"Unknown acting group '{acting}'")


def count_rep_classes(
    shape: ParabolicShape,
    q: int,
    target: str = "cone",
    acting: str = "P",
    x: int = None,
    budget: int = None,
    console: Optional[Console] = None,
) -> RepClassCount:
    """
    Sort every point of the target set into isomorphism classes of reps.

    Intended for tiny cases (n <= 3, q = 2): the work is quadratic in the
    number of classes times the target size.

    Raises:
        BudgetExceeded: if the target set is too large to enumerate
    """
    codec = target_codec(shape, q, target, x, budget)
    members = enumerate_members(codec)
    labels = np.empty(len(members), dtype=np.int64)
    class_reps: List[QuiverRep] = []
    representatives: List[ExactMatrix] = []

    progress = Progress(console=console, transient=True) if console is not None else None
    if progress is not None:
        progress.start()
        task = progress.add_task("Sorting representations", total=len(members))
    try:
        for index, code in enumerate(members.tolist()):
            m = codec.to_matrix(code)
            r = rep_of(shape, m, target, acting, codec.nilpotency)
            for label, known in enumerate(class_reps):
                if is_isomorphic(r, known):
                    labels[index] = label
                    break
            else:
                labels[index] = len(class_reps)
                class_reps.append(r)
                representatives.append(m)
            if progress is not None:
                progress.advance(task)
    finally:
        if progress is not None:
            progress.stop()
    return RepClassCount(len(class_reps), labels, members, representatives)
