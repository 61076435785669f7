"""
Base Changes on Labeled Young Diagrams

A BaseChange replaces a Jordan basis of V (chains v_{i,j}) or of U (chains
u_{m,t}) by another one. Its matrix holds the new basis vectors as
columns, written in the old basis. A matrix is admissible when the new
basis is again a Jordan basis; column by column that is the stab
condition, equivalently the matrix commutes with the Jordan matrix.

V-side kinds: M (scale a chain), C (kill a quadrant), B (swap a column-1
entry between two rows). U-side kinds: D (change the tops u_m of one
length), E (add a lower chain vector to the tops).
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from src.algebra.field import FieldTag
from src.algebra.matrix import ExactMatrix
from src.validation.errors import MovePreconditionViolated, SizeMismatch
from src.young.diagram import Box, LabeledYoungDiagram, box_index, boxes_of, chain_vectors

MOVE_KINDS = {"V": ("M", "C", "B"), "U": ("D", "E")}

# chain -> (anchor position, {(chain', position'): coefficient})
Anchors = Mapping[int, Tuple[int, Mapping[Box, Any]]]


# ----------------------------------------------------------------------
# Admissibility
# ----------------------------------------------------------------------
def stab_violations(partition: Sequence[int], matrix: ExactMatrix) -> List[str]:
    """
    Entries of a base-change matrix that break the stab condition.

    With omega^{i',j'}_{i,j} the coefficient of v_{i',j'} in the new
    v_{i,j}: it must vanish when j' > j or lambda_i - j > lambda_{i'} - j',
    and otherwise (for j' >= 2) equal omega^{i',j'-1}_{i,j-1}.
    """
    n = sum(partition)
    if matrix.shape != (n, n):
        return [f"matrix has shape {matrix.shape}, expected {(n, n)}"]
    problems = []
    boxes = boxes_of(partition)
    for i, j in boxes:
        col = box_index(partition, i, j)
        for i2, j2 in boxes:
            value = matrix[box_index(partition, i2, j2), col]
            if j2 > j or partition[i - 1] - j > partition[i2 - 1] - j2:
                if value:
                    problems.append(f"coefficient of v_({i2},{j2}) in v'_({i},{j}) must be 0")
            elif j2 >= 2:
                previous = matrix[box_index(partition, i2, j2 - 1), box_index(partition, i, j - 1)]
                if value != previous:
                    problems.append(
                        f"coefficient of v_({i2},{j2}) in v'_({i},{j}) must repeat the one of "
                        f"v_({i2},{j2 - 1}) in v'_({i},{j - 1})"
                    )
    return problems


def anchored_matrix(field: FieldTag, partition: Sequence[int], anchors: Anchors) -> ExactMatrix:
    """
    Base-change matrix prescribed on one vector per modified chain.

    For chain i anchored at a with terms {(i', b): w}, the new chain is
    v'_{i,j} = sum w * v_{i', b + j - a}, dropping indices outside
    1..lambda_{i'}. Chains without an anchor are kept.
    """
    n = sum(partition)
    columns = []
    for i, part in enumerate(partition, start=1):
        for j in range(1, part + 1):
            column = [field.zero] * n
            if i not in anchors:
                column[box_index(partition, i, j)] = field.one
            else:
                anchor, terms = anchors[i]
                for (i2, b), weight in terms.items():
                    position = b + j - anchor
                    if 1 <= position <= partition[i2 - 1]:
                        column[box_index(partition, i2, position)] += weight
            columns.append(tuple(column))
    return ExactMatrix.from_columns(field, columns, rows=n)


@dataclass(frozen=True, eq=False)
class BaseChange:
    """
    One admissible change of Jordan basis.

    Attributes:
        side: "V" or "U"
        kind: one of M, C, B (V side) or D, E (U side)
        params: indices and scalars of the move, JSON-ready
        partition: lambda for V-side moves, mu for U-side moves
        matrix: new basis vectors as columns in the old basis
    """

    side: str
    kind: str
    params: Dict[str, Any]
    partition: Tuple[int, ...]
    matrix: ExactMatrix

    def __post_init__(self):
        if self.kind not in MOVE_KINDS.get(self.side, ()):
            raise ValueError(f"unknown move {self.side}/{self.kind}")
        problems = stab_violations(self.partition, self.matrix)
        if problems:
            raise MovePreconditionViolated(
                f"{self.label} is not admissible: {problems[0]}",
                {"clause": "stab", "move": self.label, "violations": problems},
            )
        if not self.matrix.is_invertible():
            raise MovePreconditionViolated(
                f"{self.label} is not invertible", {"clause": "stab", "move": self.label}
            )

    @property
    def label(self) -> str:
        p = self.params
        if self.kind == "M":
            return f"M_{p['i']}"
        if self.kind == "C":
            return f"C_{p['i']},{p['j']}[m={p['m']}]"
        if self.kind == "B":
            return f"B_({p['i0']},{p['j0']}),({p['i1']},{p['j1']})"
        if self.kind == "D":
            return f"D_{p['j']}"
        return f"E_{p['m']},{p['j']}"

    def is_identity(self) -> bool:
        return self.matrix == ExactMatrix.identity(self.matrix.field, self.matrix.rows)

    def to_dict(self) -> Dict[str, Any]:
        return {"side": self.side, "kind": self.kind, "label": self.label, "params": dict(self.params)}


# ----------------------------------------------------------------------
# Move factories
# ----------------------------------------------------------------------
def move_M(d: LabeledYoungDiagram, i: int, omega) -> BaseChange:
    """Replace chain i by omega times itself; row i of the diagram is divided by omega."""
    field = d.field
    omega = field(omega)
    if not omega:
        raise MovePreconditionViolated("M needs a nonzero scalar", {"clause": "nonzero"})
    top = d.lam[i - 1]
    matrix = anchored_matrix(field, d.lam, {i: (top, {(i, top): omega})})
    return BaseChange("V", "M", {"i": i, "omega": field.to_plain(omega)}, d.lam, matrix)


def move_C(d: LabeledYoungDiagram, i: int, j: int, m: int, omega: Optional[Mapping[Box, Any]] = None) -> BaseChange:
    """
    Kill the m-entries of the quadrant north-west of (i, j).

    By default the coefficients are read off the diagram:
    v'_{i,j} = v_{i,j} + sum over the quadrant of gamma^m_{i',j'} v_{i',j'}.
    """
    field = d.field
    if omega is None:
        omega = {
            (i2, j2): d.entry(i2, j2, m)
            for i2, j2 in d.boxes()
            if i2 <= i and j2 <= j and (i2, j2) != (i, j) and d.entry(i2, j2, m)
        }
    else:
        omega = {box: field(value) for box, value in omega.items() if field(value)}
    terms = {(i, j): field.one}
    terms.update(omega)
    matrix = anchored_matrix(field, d.lam, {i: (j, terms)})
    params = {
        "i": i,
        "j": j,
        "m": m,
        "omega": {f"{a},{b}": field.to_plain(value) for (a, b), value in sorted(omega.items())},
    }
    return BaseChange("V", "C", params, d.lam, matrix)


def move_B(d: LabeledYoungDiagram, upper: Box, lower: Box, omega) -> BaseChange:
    """
    Add omega * gamma_{i1,1} to gamma_{i0,1} and nothing else.

    Chain i0 gains omega * v_{i0, j1 + .} anchored at j0, chain i1 loses the
    same vector anchored at j1.
    """
    field = d.field
    (i0, j0), (i1, j1) = upper, lower
    omega = field(omega)
    anchors = {
        i0: (j0, {(i0, j0): field.one, (i0, j1): omega}),
        i1: (j1, {(i1, j1): field.one, (i0, j1): -omega}),
    }
    matrix = anchored_matrix(field, d.lam, anchors)
    params = {"i0": i0, "j0": j0, "i1": i1, "j1": j1, "omega": field.to_plain(omega)}
    return BaseChange("V", "B", params, d.lam, matrix)


def _u_matrix(field: FieldTag, mu: Sequence[int], tops: ExactMatrix) -> ExactMatrix:
    """U-side matrix from new tops u'_m = sum tops[m', m] u_{m', mu_m' - mu_m + .}."""
    anchors = {}
    for m, part in enumerate(mu, start=1):
        terms = {}
        for m2, part2 in enumerate(mu, start=1):
            value = tops[m2 - 1, m - 1]
            if value:
                terms[(m2, part2)] = value
        anchors[m] = (part, terms)
    return anchored_matrix(field, mu, anchors)


def move_D(d: LabeledYoungDiagram, j: int, a: ExactMatrix) -> BaseChange:
    """
    Change the tops of length j: every tuple gamma becomes A gamma.

    A must fix e_t for mu_t != j and send e_t (mu_t = j) into W_{m2}, where
    m2 is the last index with mu_{m2} = j.
    """
    field, h = d.field, d.h
    if a.shape != (h, h):
        raise SizeMismatch(f"D_{j} needs an {h}x{h} matrix, got {a.shape}")
    block = [t for t in range(1, h + 1) if d.mu[t - 1] == j]
    if not block:
        raise MovePreconditionViolated(f"no part of mu equals {j}", {"clause": "D-shape"})
    m2 = block[-1]
    for t in range(1, h + 1):
        column = a.column(t - 1)
        if t in block:
            if any(column[r] for r in range(m2, h)):
                raise MovePreconditionViolated(
                    f"A e_{t} must lie in W_{m2}", {"clause": "D-shape"}
                )
        elif any(column[r] != (field.one if r == t - 1 else field.zero) for r in range(h)):
            raise MovePreconditionViolated(f"A must fix e_{t}", {"clause": "D-shape"})
    if not a.is_invertible():
        raise MovePreconditionViolated(f"D_{j} needs an invertible matrix", {"clause": "D-shape"})
    # new tops in the old ones: u' = A^T-coordinates, i.e. u'_m = sum A[m][m'] u_m'
    matrix = _u_matrix(field, d.mu, a.transpose())
    return BaseChange("U", "D", {"j": j, "A": a.to_plain()}, d.mu, matrix)


def move_E(d: LabeledYoungDiagram, m: int, j: int, omega: Optional[Mapping[int, Any]] = None) -> BaseChange:
    """
    u'_{m'} = u_{m'} + omega_{m'} u_{m,j} for every m' with mu_{m'} >= j.

    By default omega kills the tuple (i, j) of the unique row i carrying an
    m-entry in column mu_m.
    """
    field = d.field
    if omega is None:
        rows = _rows_with_top_entry(d, m)
        if len(rows) != 1:
            raise MovePreconditionViolated(
                f"E_{m},{j} needs exactly one row with gamma^{m} in column {d.mu[m - 1]}",
                {"clause": "single-row", "rows": rows},
            )
        i = rows[0]
        pivot = d.entry(i, d.mu[m - 1], m)
        omega = {
            m2: -d.entry(i, j, m2) / pivot
            for m2 in range(1, d.h + 1)
            if d.mu[m2 - 1] >= j and j <= d.lam[i - 1] and d.entry(i, j, m2)
        }
    else:
        omega = {int(m2): field(value) for m2, value in omega.items() if field(value)}
    anchors = {}
    for m2, part in enumerate(d.mu, start=1):
        terms = {(m2, part): field.one}
        if omega.get(m2):
            if part < j:
                raise MovePreconditionViolated(
                    f"u_{m2} is too short to receive u_({m},{j})", {"clause": "order"}
                )
            terms[(m, j)] = terms.get((m, j), field.zero) + omega[m2]
        anchors[m2] = (part, terms)
    matrix = anchored_matrix(field, d.mu, anchors)
    params = {
        "m": m,
        "j": j,
        "omega": {str(m2): field.to_plain(value) for m2, value in sorted(omega.items())},
    }
    return BaseChange("U", "E", params, d.mu, matrix)


def unit_pivot_matrix(field: FieldTag, gamma: Sequence[Any], target: int, pivot: int) -> ExactMatrix:
    """A with A gamma = e_target: inverse of I with column target replaced by gamma and e_target moved to pivot."""
    h = len(gamma)
    columns = [tuple(field.one if r == c else field.zero for r in range(h)) for c in range(h)]
    columns[target - 1] = tuple(gamma)
    if pivot != target:
        columns[pivot - 1] = tuple(field.one if r == target - 1 else field.zero for r in range(h))
    return ExactMatrix.from_columns(field, columns, rows=h).inverse()


def triangular_unit_matrix(field: FieldTag, gamma: Sequence[Any], s: int) -> ExactMatrix:
    """A with A gamma = e_s, upper triangular when gamma lies in W_s with gamma_s != 0."""
    return unit_pivot_matrix(field, gamma, s, s)


def permutation_matrix(field: FieldTag, sigma: Mapping[int, int], h: int) -> ExactMatrix:
    """A e_t = e_sigma(t); indices missing from sigma are fixed."""
    columns = []
    for t in range(1, h + 1):
        image = sigma.get(t, t)
        columns.append(tuple(field.one if r == image - 1 else field.zero for r in range(h)))
    return ExactMatrix.from_columns(field, columns, rows=h)


# ----------------------------------------------------------------------
# Application
# ----------------------------------------------------------------------
def _rows_with_top_entry(d: LabeledYoungDiagram, m: int) -> List[int]:
    top = d.mu[m - 1]
    return [i for i in range(1, d.g + 1) if d.lam[i - 1] >= top and d.entry(i, top, m)]


def _fail(bc: BaseChange, clause: str, message: str):
    raise MovePreconditionViolated(f"{bc.label}: {message}", {"clause": clause, "move": bc.label})


def _check_preconditions(d: LabeledYoungDiagram, bc: BaseChange):
    p = bc.params
    expected = d.lam if bc.side == "V" else d.mu
    if tuple(bc.partition) != tuple(expected):
        _fail(bc, "shape", f"built for {bc.partition}, diagram has {expected}")
    if bc.kind == "C":
        i, j, m = p["i"], p["j"], p["m"]
        if d.entry(i, j, m) != d.field.one:
            _fail(bc, "pivot", f"gamma^{m}_({i},{j}) must be 1")
        if any(d.is_nonzero(i, j2) for j2 in range(j + 1, d.lam[i - 1] + 1)):
            _fail(bc, "rightmost", f"row {i} must vanish right of column {j}")
    elif bc.kind == "B":
        i0, j0, i1, j1 = p["i0"], p["j0"], p["i1"], p["j1"]
        if not (i0 < i1 and j0 > j1 >= 2):
            _fail(bc, "order", "needs i0 < i1 and j0 > j1 >= 2")
        if any(j not in (1, j0) for j in d.row_support(i0)):
            _fail(bc, "support", f"row {i0} must be supported in columns 1 and {j0}")
        if any(j not in (1, j1) for j in d.row_support(i1)):
            _fail(bc, "support", f"row {i1} must be supported in columns 1 and {j1}")
        if d.tuple_at(i0, j0) != d.tuple_at(i1, j1):
            _fail(bc, "pivots", f"gamma_({i0},{j0}) and gamma_({i1},{j1}) must agree")
    elif bc.kind == "E":
        m, j = p["m"], p["j"]
        if not j < d.mu[m - 1]:
            _fail(bc, "order", f"needs j < mu_{m}")
        if len(_rows_with_top_entry(d, m)) != 1:
            _fail(bc, "single-row", f"exactly one row may carry gamma^{m} in column {d.mu[m - 1]}")


def _transform(d: LabeledYoungDiagram, bc: BaseChange) -> LabeledYoungDiagram:
    if bc.side == "V":
        return d.with_gamma(bc.matrix.inverse() @ d.gamma)
    # new tops are combinations of the old chain vectors u_{m',t'}
    top_columns = []
    offset = 0
    for part in d.mu:
        offset += part
        top_columns.append(offset - 1)
    new_tops = bc.matrix.submatrix(range(d.l), top_columns)
    return d.with_gamma(chain_vectors(d) @ new_tops)


def _check_effect(before: LabeledYoungDiagram, after: LabeledYoungDiagram, bc: BaseChange):
    field, p = before.field, bc.params
    if bc.kind == "M":
        i = p["i"]
        omega = field(p["omega"])
        for a, b in before.boxes():
            expected = tuple(x / omega for x in before.tuple_at(a, b)) if a == i else before.tuple_at(a, b)
            if after.tuple_at(a, b) != expected:
                _fail(bc, "effect", f"tuple ({a},{b}) is not the predicted one")
    elif bc.kind == "C":
        i, j, m = p["i"], p["j"], p["m"]
        untouched = [
            m2 for m2 in range(1, before.h + 1)
            if m2 != m and not any(before.entry(i, b, m2) for b in range(1, before.lam[i - 1] + 1))
        ]
        for a, b in before.boxes():
            inside = a <= i and b <= j and (a, b) != (i, j)
            if not inside:
                if after.tuple_at(a, b) != before.tuple_at(a, b):
                    _fail(bc, "effect", f"tuple ({a},{b}) outside the quadrant changed")
                continue
            if after.entry(a, b, m):
                _fail(bc, "effect", f"gamma^{m}_({a},{b}) was not killed")
            if any(after.entry(a, b, m2) != before.entry(a, b, m2) for m2 in untouched):
                _fail(bc, "effect", f"tuple ({a},{b}) changed in a column that row {i} does not carry")
    elif bc.kind == "B":
        i0, i1, omega = p["i0"], p["i1"], field(p["omega"])
        for a, b in before.boxes():
            expected = before.tuple_at(a, b)
            if (a, b) == (i0, 1):
                expected = tuple(x + omega * y for x, y in zip(expected, before.tuple_at(i1, 1)))
            if after.tuple_at(a, b) != expected:
                _fail(bc, "effect", f"tuple ({a},{b}) is not the predicted one")
    elif bc.kind == "D":
        a = ExactMatrix.from_rows(field, p["A"])
        if after.gamma != before.gamma @ a.transpose():
            _fail(bc, "effect", "tuples are not A gamma")
    else:
        m, j = p["m"], p["j"]
        omega = {int(key): field(value) for key, value in p["omega"].items()}
        rows = _rows_with_top_entry(before, m)
        i = rows[0]
        pivot = before.entry(i, before.mu[m - 1], m)
        for a, b in before.boxes():
            if b < j:
                continue
            expected = before.tuple_at(a, b)
            if (a, b) == (i, j):
                expected = tuple(
                    x + omega.get(m2, field.zero) * pivot for m2, x in enumerate(expected, start=1)
                )
            if after.tuple_at(a, b) != expected:
                _fail(bc, "effect", f"tuple ({a},{b}) is not the predicted one")


def apply_move(d: LabeledYoungDiagram, bc: BaseChange) -> LabeledYoungDiagram:
    """
    Change bases and recompute the diagram.

    The new gamma is computed from the transformed bases; the pictorial
    effect of the move kind is then asserted against it.

    Raises:
        MovePreconditionViolated: with detail["clause"] naming the failed
            condition (shape, pivot, rightmost, order, support, pivots,
            single-row, or effect)
    """
    _check_preconditions(d, bc)
    after = _transform(d, bc)
    _check_effect(d, after, bc)
    return after


def replay(d: LabeledYoungDiagram, moves: Sequence[BaseChange]) -> LabeledYoungDiagram:
    for bc in moves:
        d = apply_move(d, bc)
    return d
