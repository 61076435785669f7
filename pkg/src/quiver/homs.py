"""
Morphisms, Isomorphism and Indecomposability

Hom(a, b) is the solution space of the commuting-square system
f_target M_alpha = M'_alpha f_source over all arrows. Isomorphism asks for
an element of Hom(a, b) that is invertible at every vertex; over finite
fields small hom spaces are enumerated, larger ones are sampled and then
settled vertex by vertex with exact rank and determinant checks.
"""

import random
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from config.algebra_params import (
    DEFAULT_SEED,
    IDEMPOTENT_SEARCH_MAX_DIM,
    ISO_ENUMERATION_BUDGET,
    ISO_RANDOM_TRIALS,
    ISO_SYMBOLIC_MATRIX_BUDGET,
    ISO_SYMBOLIC_VARIABLE_BUDGET,
)
from src.algebra.linalg import Subspace, kernel, rank, span
from src.algebra.matrix import ExactMatrix
from src.algebra.nilpotency import flatten, generic_determinant_vanishes, subspace_matrices
from src.quiver.presets import Vertex
from src.quiver.representation import QuiverRep, _check_compatible
from src.validation.errors import BudgetExceeded, DimensionTooLarge, FieldNotSupported

Morphism = Dict[Vertex, ExactMatrix]


@dataclass(frozen=True, eq=False)
class HomSpace:
    """
    Hom(source, target) with an echelon basis.

    Attributes:
        source: domain representation
        target: codomain representation
        flat: the solution space of the flattened linear system
        basis: the echelon basis decoded into vertex-indexed matrices
    """

    source: QuiverRep
    target: QuiverRep
    flat: Subspace
    basis: List[Morphism]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, coefficients: Sequence) -> Morphism:
        """The morphism sum_i c_i basis[i]."""
        field = self.source.field
        vector = [field.zero] * self.flat.ambient_dim
        for c, row in zip(coefficients, self.flat.vectors):
            if c:
                vector = [x + c * y for x, y in zip(vector, row)]
        return _decode(self.source, self.target, vector)

    def coordinates(self, morphism: Morphism) -> Optional[Tuple]:
        return self.flat.coordinates(_encode(self.source, self.target, morphism))


def _offsets(a: QuiverRep, b: QuiverRep) -> Dict[Vertex, int]:
    offsets, total = {}, 0
    for v in a.preset.vertices:
        offsets[v] = total
        total += b.dim(v) * a.dim(v)
    return offsets


def _decode(a: QuiverRep, b: QuiverRep, vector: Sequence) -> Morphism:
    offsets = _offsets(a, b)
    morphism = {}
    for v in a.preset.vertices:
        rows, cols = b.dim(v), a.dim(v)
        start = offsets[v]
        entries = tuple(
            tuple(vector[start + r * cols + c] for c in range(cols)) for r in range(rows)
        )
        morphism[v] = ExactMatrix(a.field, rows, cols, entries)
    return morphism


def _encode(a: QuiverRep, b: QuiverRep, morphism: Morphism) -> List:
    vector = []
    for v in a.preset.vertices:
        for row in morphism[v].entries:
            vector.extend(row)
    return vector


def hom_space(a: QuiverRep, b: QuiverRep) -> HomSpace:
    """
    All morphisms a -> b.

    Args:
        a: source representation
        b: target representation (same preset and field)

    Returns:
        HomSpace whose basis solves f_t M_alpha = M'_alpha f_s for every arrow

    Raises:
        PresetMismatch: if the presets or fields differ
    """
    _check_compatible(a, b)
    field = a.field
    zero = field.zero
    offsets = _offsets(a, b)
    unknowns = sum(b.dim(v) * a.dim(v) for v in a.preset.vertices)

    equations = []
    for arrow, (s, t) in a.preset.arrows.items():
        m_a, m_b = a.maps[arrow], b.maps[arrow]
        bt, as_, at, bs = b.dim(t), a.dim(s), a.dim(t), b.dim(s)
        for r in range(bt):
            for c in range(as_):
                row = [zero] * unknowns
                # (f_t M)_{r,c} = sum_k f_t[r,k] M[k,c]
                for k in range(at):
                    coeff = m_a.entries[k][c]
                    if coeff:
                        row[offsets[t] + r * at + k] += coeff
                # (M' f_s)_{r,c} = sum_k M'[r,k] f_s[k,c]
                for k in range(bs):
                    coeff = m_b.entries[r][k]
                    if coeff:
                        row[offsets[s] + k * as_ + c] -= coeff
                if any(row):
                    equations.append(tuple(row))

    if unknowns == 0:
        solutions = Subspace(0, ExactMatrix.zeros(field, 0, 0))
    else:
        system = ExactMatrix(field, len(equations), unknowns, tuple(equations))
        solutions = kernel(system)
    basis = [_decode(a, b, vector) for vector in solutions.vectors]
    return HomSpace(a, b, solutions, basis)


def end_space(r: QuiverRep) -> HomSpace:
    return hom_space(r, r)


def is_invertible_morphism(morphism: Morphism) -> bool:
    return all(m.is_invertible() for m in morphism.values())


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g . f (apply f first)."""
    return {v: g[v] @ f[v] for v in f}


# ----------------------------------------------------------------------
# Isomorphism
# ----------------------------------------------------------------------
def is_isomorphic(a: QuiverRep, b: QuiverRep, seed: int = None) -> bool:
    """
    Decide a ~= b.

    Mismatched presets, fields, dimension vectors or hom dimensions give
    False. Otherwise a morphism invertible at every vertex is looked for:
    exhaustively when the hom space has at most ISO_ENUMERATION_BUDGET
    points, else by seeded sampling followed by the vertex-wise
    generic-determinant test. Each False answer rests on one of these checks.

    Raises:
        BudgetExceeded: if a vertex can only be settled by a symbolic
            determinant above the ISO_SYMBOLIC_* budget
    """
    if a.preset != b.preset or a.field != b.field or a.dims != b.dims:
        return False
    if a.total_dim == 0:
        return True

    homs = hom_space(a, b)
    if homs.dim == 0:
        return False
    if homs.dim != end_space(a).dim or homs.dim != end_space(b).dim:
        return False
    if hom_space(b, a).dim != homs.dim:
        return False

    field = a.field
    if field.is_finite and field.order ** homs.dim <= ISO_ENUMERATION_BUDGET:
        return _enumerate_for_iso(homs)

    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    if _sample_invertible(homs, rng, ISO_RANDOM_TRIALS) is not None:
        return True
    return all(_vertex_admits_invertible(homs, v, rng) for v in a.preset.vertices if a.dim(v))


def _draw(field, rng: random.Random, bound: int):
    if field.is_finite:
        return field(rng.randrange(field.order))
    return field(rng.randint(-bound, bound))


def _sample_invertible(homs: HomSpace, rng: random.Random, trials: int) -> Optional[Morphism]:
    field = homs.source.field
    bound = 2 * homs.source.total_dim + 1
    for _ in range(trials):
        candidate = homs.element([_draw(field, rng, bound) for _ in range(homs.dim)])
        if is_invertible_morphism(candidate):
            return candidate
    return None


def _enumerate_for_iso(homs: HomSpace) -> bool:
    elements = list(homs.source.field.elements())
    for coefficients in product(elements, repeat=homs.dim):
        if is_invertible_morphism(homs.element(coefficients)):
            return True
    return False


def _vertex_admits_invertible(homs: HomSpace, v: Vertex, rng: random.Random) -> bool:
    """
    True iff det(sum_i t_i f_i[v]) is a nonzero polynomial.

    The product of these determinants over the vertices is nonzero iff every
    factor is, and a nonzero product means a ~= b over the algebraic closure,
    hence over the base field (Noether-Deuring). A zero factor is detected
    by a rank defect of the stacked basis or by the symbolic determinant.
    """
    field = homs.source.field
    n = homs.source.dim(v)
    matrices = subspace_matrices(span(field, n * n, [flatten(f[v]) for f in homs.basis]))
    if not matrices:
        return False
    # common cokernel or common kernel
    if rank(ExactMatrix.hstack(field, matrices)) < n or rank(ExactMatrix.vstack(field, matrices)) < n:
        return False
    if any(m.is_invertible() for m in matrices):
        return True
    for _ in range(ISO_RANDOM_TRIALS):
        combination = ExactMatrix.zeros(field, n, n)
        for m in matrices:
            combination = combination + m.scale(_draw(field, rng, 2 * n + 1))
        if combination.is_invertible():
            return True
    try:
        vanishes = generic_determinant_vanishes(
            matrices,
            max_variables=ISO_SYMBOLIC_VARIABLE_BUDGET,
            max_size=ISO_SYMBOLIC_MATRIX_BUDGET,
        )
    except DimensionTooLarge as err:
        raise BudgetExceeded(
            f"isomorphism test at vertex {v} needs a symbolic determinant beyond the budget",
            dict(err.detail, vertex=str(v)),
        ) from err
    return not vanishes


def find_isomorphism(a: QuiverRep, b: QuiverRep, seed: int = None) -> Optional[Morphism]:
    """
    An explicit isomorphism a -> b found by enumeration or sampling.

    Returns None when a and b are not isomorphic, and also when they are
    but every sampled morphism was singular (possible over a small GF(q)).
    """
    if not is_isomorphic(a, b, seed=seed):
        return None
    homs = hom_space(a, b)
    field = a.field
    if a.total_dim == 0:
        return {v: ExactMatrix.zeros(field, 0, 0) for v in a.preset.vertices}
    if field.is_finite and field.order ** homs.dim <= ISO_ENUMERATION_BUDGET:
        for coefficients in product(list(field.elements()), repeat=homs.dim):
            candidate = homs.element(coefficients)
            if is_invertible_morphism(candidate):
                return candidate
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    return _sample_invertible(homs, rng, 16 * ISO_RANDOM_TRIALS)


# ----------------------------------------------------------------------
# Indecomposability
# ----------------------------------------------------------------------
def _structure_constants(end: HomSpace) -> List[List[Tuple]]:
    """c[i][j] = coordinates of basis[i] . basis[j] in the basis."""
    table = []
    for x in end.basis:
        row = []
        for y in end.basis:
            row.append(end.coordinates(compose(x, y)))
        table.append(row)
    return table


def endomorphism_local(r: QuiverRep) -> bool:
    """
    True iff End(r) is local with End/rad one-dimensional (absolutely indecomposable).

    Over Q the radical of End(r) is the kernel of the trace form
    (x, y) -> tr(L_{xy}), where L_z is left multiplication on End(r).

    Raises:
        FieldNotSupported: over finite fields (use is_indecomposable)
    """
    if r.field.is_finite:
        raise FieldNotSupported(
            "the trace-form radical needs characteristic 0; use is_indecomposable over GF(q)"
        )
    if r.total_dim == 0:
        return False
    end = end_space(r)
    constants = _structure_constants(end)
    d = end.dim
    field = r.field
    # tr(L_{e_k}) = sum_m c[k][m][m]
    traces = [sum((constants[k][m][m] for m in range(d)), field.zero) for k in range(d)]
    gram = [
        [sum((constants[i][j][k] * traces[k] for k in range(d)), field.zero) for j in range(d)]
        for i in range(d)
    ]
    return rank(ExactMatrix(field, d, d, tuple(tuple(row) for row in gram))) == 1


def has_nontrivial_idempotent(r: QuiverRep) -> bool:
    """
    Exhaustive idempotent search in End(r) over GF(q).

    Raises:
        BudgetExceeded: if dim End(r) exceeds IDEMPOTENT_SEARCH_MAX_DIM or
            q^dim exceeds ISO_ENUMERATION_BUDGET
    """
    field = r.field
    if not field.is_finite:
        raise FieldNotSupported("idempotent enumeration needs a finite field")
    end = end_space(r)
    if end.dim > IDEMPOTENT_SEARCH_MAX_DIM or field.order ** end.dim > ISO_ENUMERATION_BUDGET:
        raise BudgetExceeded(
            f"End has dimension {end.dim} over {field.label}; search refused",
            {"dim_end": end.dim, "q": field.order},
        )
    for coefficients in product(list(field.elements()), repeat=end.dim):
        e = end.element(coefficients)
        if all(m.is_zero() for m in e.values()):
            continue
        if all(m == ExactMatrix.identity(field, m.rows) for m in e.values()):
            continue
        if all((m @ m) == m for m in e.values()):
            return True
    return False


def is_indecomposable(r: QuiverRep) -> bool:
    """Trace-form test over Q, exhaustive idempotent search over GF(q)."""
    if r.total_dim == 0:
        return False
    if r.field.is_finite:
        return not has_nontrivial_idempotent(r)
    return endomorphism_local(r)
