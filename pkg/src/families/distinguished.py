"""
Centralizers and Distinguished Elements

x in N_p is distinguished when p^x ∩ sl_n consists of nilpotent matrices,
equivalently when its Q_p representation is indecomposable. Three routes
decide it:

    centralizer            generic characteristic polynomial of p^x ∩ sl_n
    quiver                 End(matrix_to_rep(x)) local, over Q only
    centralizer_algebra    p^x ∩ sl_n closed under products with a basis of
                           nilpotents (a nilpotent associative algebra)

The third route has no symbolic expansion, so it covers the sizes where the
first one refuses.
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, List, Optional, Tuple

from rich.console import Console
from rich.progress import Progress

from src.algebra.field import QQ_FIELD
from src.algebra.jordan import is_nilpotent
from src.algebra.linalg import Subspace, kernel, span
from src.algebra.matrix import ExactMatrix
from src.algebra.nilpotency import is_nilpotent_subspace
from src.classifier import classify_P_on_Np
from src.oracle.orbits import enumerate_orbits
from src.parabolic.shape import ParabolicShape, contains, in_nilpotent_cone
from src.quiver.homs import endomorphism_local
from src.quiver.translation import matrix_to_rep
from src.validation.errors import (
    DimensionTooLarge,
    InfiniteType,
    MethodsDisagree,
    NotInCone,
    NotInParabolic,
)

METHODS = ("auto", "centralizer", "quiver", "centralizer_algebra")


# ----------------------------------------------------------------------
# Centralizer
# ----------------------------------------------------------------------
def _p_positions(shape: ParabolicShape) -> List[Tuple[int, int]]:
    owner = shape.block_index
    return [(i, j) for i in range(shape.n) for j in range(shape.n) if owner[i] <= owner[j]]


def centralizer_in_p(shape: ParabolicShape, x: ExactMatrix) -> Subspace:
    """
    p^x as a subspace of F^(n*n), matrices flattened row by row.

    Raises:
        NotInParabolic: if x is not in p
    """
    if not contains(shape, x, "parabolic"):
        raise NotInParabolic(f"matrix is not in the parabolic of bv={shape.bv}")
    n, field = shape.n, x.field
    positions = _p_positions(shape)
    # ([x, y])_ij = sum_k x_ik y_kj - y_ik x_kj, linear in the free entries of y
    rows = []
    for i in range(n):
        for j in range(n):
            row = [field.zero] * len(positions)
            for col, (a, b) in enumerate(positions):
                if b == j and x[i, a]:
                    row[col] += x[i, a]
                if a == i and x[b, j]:
                    row[col] -= x[b, j]
            rows.append(tuple(row))
    system = ExactMatrix(field, n * n, len(positions), tuple(rows))
    solutions = kernel(system)
    flat = []
    for v in solutions.vectors:
        full = [field.zero] * (n * n)
        for value, (a, b) in zip(v, positions):
            full[a * n + b] = value
        flat.append(full)
    return span(field, n * n, flat)


def _unflatten(field, n: int, v) -> ExactMatrix:
    return ExactMatrix(field, n, n, tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)))


def centralizer_basis(shape: ParabolicShape, x: ExactMatrix) -> List[ExactMatrix]:
    return [_unflatten(x.field, shape.n, v) for v in centralizer_in_p(shape, x).vectors]


def traceless_part(basis: List[ExactMatrix]) -> List[ExactMatrix]:
    """A basis of span(basis) ∩ sl_n."""
    if not basis:
        return []
    pivot = next((b for b in basis if b.trace()), None)
    if pivot is None:
        return list(basis)
    t0 = pivot.trace()
    return [b - pivot.scale(b.trace() / t0) for b in basis if b is not pivot]


# ----------------------------------------------------------------------
# Routes
# ----------------------------------------------------------------------
def distinguished_by_centralizer(shape: ParabolicShape, x: ExactMatrix) -> bool:
    """
    Raises:
        DimensionTooLarge: above the symbolic budget
    """
    return is_nilpotent_subspace(traceless_part(centralizer_basis(shape, x)), shape.n)


def distinguished_by_quiver(shape: ParabolicShape, x: ExactMatrix) -> bool:
    """
    Raises:
        FieldNotSupported: over GF(q)
    """
    return endomorphism_local(matrix_to_rep(shape, x))


def distinguished_by_algebra(shape: ParabolicShape, x: ExactMatrix) -> bool:
    """
    p^x ∩ sl_n is nilpotent iff its basis is nilpotent and it is closed
    under products. If char | n the identity is traceless and the answer
    is False, matching the definition.
    """
    basis = traceless_part(centralizer_basis(shape, x))
    if not basis:
        return True
    if not all(is_nilpotent(b) for b in basis):
        return False
    n, field = shape.n, x.field
    flat = span(field, n * n, [sum(b.entries, ()) for b in basis])
    for a in basis:
        for b in basis:
            if not flat.contains(sum((a @ b).entries, ())):
                return False
    return True


_ROUTES = {
    "centralizer": distinguished_by_centralizer,
    "quiver": distinguished_by_quiver,
    "centralizer_algebra": distinguished_by_algebra,
}


def is_distinguished(shape: ParabolicShape, x: ExactMatrix, method: str = "auto") -> Tuple[bool, str]:
    """
    Decide whether x is distinguished.

    With method="auto" every available route runs and the verdicts must
    agree: the centralizer route (falling back to the algebra route above
    the symbolic budget) and, over Q, the quiver route.

    Returns:
        (verdict, tag) where tag joins the routes that produced the verdict

    Raises:
        NotInCone: if x is not in N_p
        MethodsDisagree: if two routes differ
        DimensionTooLarge: only for method="centralizer"
        FieldNotSupported: only for method="quiver" over GF(q)
    """
    if method not in METHODS:
        raise ValueError(f"Unknown method '{method}' (expected one of {METHODS})")
    if not in_nilpotent_cone(shape, x):
        raise NotInCone(f"matrix is not in N_p for bv={shape.bv}")
    if method != "auto":
        return _ROUTES[method](shape, x), method

    verdicts: Dict[str, bool] = {}
    try:
        verdicts["centralizer"] = distinguished_by_centralizer(shape, x)
    except DimensionTooLarge:
        verdicts["centralizer_algebra"] = distinguished_by_algebra(shape, x)
    if not x.field.is_finite:
        verdicts["quiver"] = distinguished_by_quiver(shape, x)
    if len(set(verdicts.values())) > 1:
        raise MethodsDisagree(
            f"distinguishedness routes disagree for bv={shape.bv}",
            {"verdicts": verdicts, "matrix": x.to_plain(), "field": x.field.label},
        )
    verdict = next(iter(verdicts.values()))
    return verdict, "+".join(verdicts)


# ----------------------------------------------------------------------
# Census
# ----------------------------------------------------------------------
@dataclass
class DistinguishedCensus:
    """
    Distinguished orbits among the P(F_q)-orbits of N_p.

    Attributes:
        count: number of distinguished orbits (top components of C(N_p))
        representatives: their representatives over GF(q)
        verdicts: one entry per orbit with the lifted verdict and route tag
        discrepant: orbits whose integer lift is unusable or disagrees with
            the finite-field verdict
        flags: notes on skipped checks
    """

    shape: ParabolicShape
    q: int
    orbit_count: int
    count: int
    representatives: List[ExactMatrix]
    verdicts: List[Dict[str, Any]] = dataclass_field(default_factory=list)
    discrepant: List[Dict[str, Any]] = dataclass_field(default_factory=list)
    flags: List[str] = dataclass_field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bv": list(self.shape.bv.blocks),
            "q": self.q,
            "orbit_count": self.orbit_count,
            "count": self.count,
            "representatives": [r.to_plain() for r in self.representatives],
            "verdicts": self.verdicts,
            "discrepant": self.discrepant,
            "flags": list(self.flags),
        }


def lift_to_rationals(m: ExactMatrix) -> ExactMatrix:
    """Entries of a GF(q) matrix read as integers in [0, q)."""
    field = m.field
    return ExactMatrix.from_rows(QQ_FIELD, [[field.to_int(a) for a in row] for row in m.entries])


def distinguished_census(
    shape: ParabolicShape,
    q: int,
    budget: int = None,
    pool=None,
    console: Optional[Console] = None,
) -> DistinguishedCensus:
    """
    Count the distinguished P(F_q)-orbits in N_p.

    Each oracle representative is lifted to Q, re-checked for membership in
    N_p and tested with both routes there. When q does not divide n the
    finite-field verdict is recomputed and compared with the lifted one.

    Raises:
        InfiniteType: if P has infinitely many orbits on N_p
        BudgetExceeded: if the oracle refuses the enumeration
    """
    verdict = classify_P_on_Np(shape.bv)
    if verdict.is_infinite:
        raise InfiniteType(
            f"bv={shape.bv} has infinitely many P-orbits; no finite census",
            {"bv": list(shape.bv.blocks)},
        )
    table = enumerate_orbits(shape, q, "cone", "P", budget=budget, pool=pool, console=console)
    census = DistinguishedCensus(shape, q, table.orbit_count, 0, [])
    recheck = shape.n % q != 0
    if not recheck:
        census.flags.append(f"q={q} divides n={shape.n}; finite-field re-check skipped")

    progress = Progress(console=console, transient=True) if console is not None else None
    if progress is not None:
        progress.start()
        task = progress.add_task("Testing representatives", total=table.orbit_count)
    try:
        for index, rep in enumerate(table.representatives):
            entry: Dict[str, Any] = {"orbit": index, "representative": rep.to_plain()}
            lifted = lift_to_rationals(rep)
            if not in_nilpotent_cone(shape, lifted):
                entry["reason"] = "lift leaves N_p"
                census.discrepant.append(entry)
            else:
                distinguished, tag = is_distinguished(shape, lifted)
                entry.update({"distinguished": distinguished, "method": tag})
                census.verdicts.append(entry)
                agrees = True
                if recheck:
                    try:
                        agrees = distinguished_by_centralizer(shape, rep) == distinguished
                    except DimensionTooLarge:
                        agrees = distinguished_by_algebra(shape, rep) == distinguished
                if not agrees:
                    census.discrepant.append(dict(entry, reason="finite-field verdict differs"))
                elif distinguished:
                    census.count += 1
                    census.representatives.append(rep)
            if progress is not None:
                progress.advance(task)
    finally:
        if progress is not None:
            progress.stop()
    return census
