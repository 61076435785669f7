"""
Reduction of Labeled Young Diagrams

Brings a diagram with |mu| <= 5 to a form whose nonzero tuples are unit
vectors e_s (plus one (1,1) tuple when mu = (3,2)) using only admissible
base changes. Three shapes of mu occur:

    a) mu = (2^a, 1^b)
    b) mu = (a, 1^b) with a >= 3
    c) mu = (3, 2)

The returned move list replays the input onto the output.
"""

from typing import Any, Dict, List, Optional, Tuple

from config.algebra_params import REDUCTION_MAX_MOVES, REDUCTION_MAX_MU
from src.algebra.matrix import ExactMatrix
from src.validation.errors import MuTooLarge, NotReducedBase
from src.young.diagram import LabeledYoungDiagram
from src.young.moves import (
    BaseChange,
    apply_move,
    move_B,
    move_C,
    move_D,
    move_E,
    move_M,
    permutation_matrix,
    triangular_unit_matrix,
    unit_pivot_matrix,
)

Violation = Dict[str, Any]


def reduction_case(mu) -> str:
    """Which of the three reduction shapes mu falls in."""
    mu = tuple(mu)
    if not mu or mu[0] <= 2:
        return "a"
    if len(mu) == 1 or mu[1] <= 1:
        return "b"
    if mu == (3, 2):
        return "c"
    raise MuTooLarge(f"mu={mu} has no reduction", {"mu": list(mu)})


def _top_index(values) -> int:
    """Largest s (1-based) with a nonzero s-th coordinate."""
    return max(s for s, x in enumerate(values, start=1) if x)


def _is_unit(values, field) -> Optional[int]:
    """s if values == e_s, else None."""
    support = [s for s, x in enumerate(values, start=1) if x]
    if len(support) == 1 and values[support[0] - 1] == field.one:
        return support[0]
    return None


# ----------------------------------------------------------------------
# Checker
# ----------------------------------------------------------------------
def check_reduced(d: LabeledYoungDiagram) -> Tuple[bool, List[Violation]]:
    """
    Test the four clauses of a reduced diagram.

    1. at most one special row: either a row i_* carrying e_s in column 1
       and one more tuple e_{s'} further right, or (mu = (3,2) only) a row
       i_0 whose column-1 tuple is (1,1)
    2. every other nonzero tuple at (i, j) is some e_s with mu_s >= j
    3. apart from i_*, every row carries at most one nonzero tuple
    4. in every column j >= 2 each e_s occurs at most once; in column 1
       each e_s occurs at most once among rows other than i_*

    Returns:
        (ok, violations) with violations as {"clause", "message"} dicts
    """
    field = d.field
    violations: List[Violation] = []
    pair_tuple = (field.one, field.one)
    special_rows: List[Tuple[str, int]] = []

    def flag(clause: int, message: str):
        violations.append({"clause": clause, "message": message})

    for i, j in d.nonzero_boxes():
        values = d.tuple_at(i, j)
        if j == 1 and d.mu == (3, 2) and values == pair_tuple:
            special_rows.append(("i0", i))
            continue
        s = _is_unit(values, field)
        if s is None:
            flag(2, f"tuple ({i},{j}) is not a unit vector")
        elif d.mu[s - 1] < j:
            flag(2, f"tuple ({i},{j}) = e_{s} sits right of mu_{s}")

    multi = [i for i in range(1, d.g + 1) if len(d.row_support(i)) > 1]
    if len(multi) > 1:
        flag(3, f"rows {multi} all carry several tuples")
    star = None
    for i in multi:
        support = d.row_support(i)
        if len(support) != 2 or support[0] != 1:
            flag(1, f"row {i} carries tuples in columns {support}")
        else:
            star = i
            special_rows.append(("i*", i))
    if len(special_rows) > 1:
        flag(1, f"more than one special row: {special_rows}")

    for j in range(1, max(d.lam, default=0) + 1):
        seen: Dict[int, int] = {}
        for i in range(1, d.g + 1):
            if d.lam[i - 1] < j or (j == 1 and i == star):
                continue
            s = _is_unit(d.tuple_at(i, j), field)
            if s is None:
                continue
            if s in seen:
                flag(4, f"e_{s} occurs twice in column {j} (rows {seen[s]} and {i})")
            seen[s] = i
    return not violations, violations


# ----------------------------------------------------------------------
# Reducer
# ----------------------------------------------------------------------
class _Reducer:
    """Mutable driver: current diagram, move log and the progress measure."""

    def __init__(self, d: LabeledYoungDiagram):
        self.d = d
        self.field = d.field
        self.moves: List[BaseChange] = []
        self._measure: Optional[Tuple[int, int, int]] = None

    def step(self, key: Tuple[int, int, int]):
        """Every step must strictly lower (phase, column, row)."""
        if self._measure is not None and not key < self._measure:
            raise RuntimeError(f"reduction measure did not decrease: {self._measure} -> {key}")
        self._measure = key

    def apply(self, bc: BaseChange):
        if bc.is_identity():
            return
        self.d = apply_move(self.d, bc)
        self.moves.append(bc)
        if len(self.moves) > REDUCTION_MAX_MOVES:
            raise RuntimeError(f"reduction exceeded {REDUCTION_MAX_MOVES} moves")

    # helpers ----------------------------------------------------------
    def tup(self, i: int, j: int) -> Tuple:
        return self.d.tuple_at(i, j)

    def rows_up(self, j: int, start: Optional[int] = None) -> List[int]:
        """Rows reaching column j, from the bottom (or from start) upwards."""
        start = self.d.g if start is None else start
        return [i for i in range(start, 0, -1) if self.d.lam[i - 1] >= j]

    def lowermost(self, j: int, above: Optional[int] = None) -> Optional[int]:
        start = self.d.g if above is None else above - 1
        for i in self.rows_up(j, start):
            if any(self.tup(i, j)):
                return i
        return None

    def scale_to(self, i: int, value):
        """M_i dividing row i by value."""
        if value != self.field.one:
            self.apply(move_M(self.d, i, value))

    def d_move(self, j: int, a: ExactMatrix):
        self.apply(move_D(self.d, j, a))

    def diag(self, values) -> ExactMatrix:
        h = len(values)
        zero = self.field.zero
        rows = [[values[r] if r == c else zero for c in range(h)] for r in range(h)]
        return ExactMatrix.from_rows(self.field, rows)

    # case a: mu = (2^a, 1^b) -------------------------------------------
    def case_a(self):
        d, field = self.d, self.field
        a = sum(1 for part in d.mu if part == 2)
        j = d.mu[0]
        pivot_rows: Dict[int, int] = {}
        s = 0
        for i in self.rows_up(j):
            self.step((3, j, i))
            gamma = self.tup(i, j)
            if not any(gamma):
                continue
            target = s + 1
            pivot = next((t for t in range(target, d.h + 1) if gamma[t - 1]), None)
            if pivot is None:
                raise RuntimeError(f"tuple ({i},{j}) lies in W_{s}")
            self.d_move(j, unit_pivot_matrix(field, gamma, target, pivot))
            self.apply(move_C(self.d, i, j, target))
            if j == 2 and any(self.tup(i, 1)):
                self.apply(move_E(self.d, target, 1))
            pivot_rows[target] = i
            s = target
        if j == 1:
            return

        for i in self.rows_up(1):
            self.step((2, 1, i))
            gamma = self.tup(i, 1)
            if not any(gamma):
                continue
            s = _top_index(gamma)
            if s > a:
                self.d_move(1, triangular_unit_matrix(field, gamma, s))
            else:
                self.d_move(2, triangular_unit_matrix(field, gamma, s))
                if s in pivot_rows:
                    self._restore_column_two(pivot_rows, s)
            self.apply(move_C(self.d, i, 1, s))

    def _restore_column_two(self, pivot_rows: Dict[int, int], s: int):
        """Turn gamma_{i_s,2} back into e_s after a D_2 that moved it."""
        row = pivot_rows[s]
        self.scale_to(row, self.tup(row, 2)[s - 1])
        values = self.tup(row, 2)
        for x in range(1, s):
            if values[x - 1]:
                self.apply(move_C(self.d, pivot_rows[x], 2, x))

    def first_column(self):
        """Column-1 reduction with upper-triangular D_1 only (all parts of mu equal 1)."""
        for i in self.rows_up(1):
            self.step((2, 1, i))
            gamma = self.tup(i, 1)
            if not any(gamma):
                continue
            s = _top_index(gamma)
            self.d_move(1, triangular_unit_matrix(self.field, gamma, s))
            self.apply(move_C(self.d, i, 1, s))

    # case b: mu = (a, 1^b), a >= 3 -------------------------------------
    def case_b(self):
        d, field = self.d, self.field
        h = d.h
        first = d.mu[0]
        second = d.mu[1] if h > 1 else 0
        chain_rows: Dict[int, int] = {}
        for j in range(first, second, -1):
            self.step((3, j, d.g + 1))
            i = self.lowermost(j)
            if i is None:
                continue
            self.scale_to(i, self.tup(i, j)[0])
            self.apply(move_C(self.d, i, j, 1))
            chain_rows[j] = i
        if h == 1:
            return

        top_row = chain_rows.get(first)
        if top_row is not None and any(self.tup(top_row, 1)):
            self.apply(move_E(self.d, 1, 1))
        carriers = [
            (j, chain_rows[j])
            for j in sorted(chain_rows)
            if 2 <= j < first and any(self.tup(chain_rows[j], 1))
        ]
        star: Optional[Tuple[int, int]] = None
        if carriers:
            j_low, i_low = carriers[0]
            for j_up, i_up in carriers[1:]:
                omega = -self.tup(i_up, 1)[1] / self.tup(i_low, 1)[1]
                self.apply(move_B(self.d, (i_up, j_up), (i_low, j_low), omega))
            star = (i_low, j_low)

        star_row = star[0] if star else None
        used: set = set()
        for i in self.rows_up(1):
            self.step((2, 1, i))
            if i == star_row:
                self.apply(move_C(self.d, i, star[1], 1))
                gamma = self.tup(i, 1)
                if not any(gamma):
                    star_row = None
                    continue
                s = _top_index(gamma)
                self.d_move(1, triangular_unit_matrix(field, gamma, s))
                sigma = {s: 2}
                sigma.update({t: t + 1 for t in range(2, s)})
                self.d_move(1, permutation_matrix(field, sigma, h))
                used = {sigma.get(t, t) for t in used}
                continue
            gamma = self.tup(i, 1)
            if not any(gamma):
                continue
            along_e2 = not gamma[0] and all(not x for x in gamma[2:])
            if star_row is not None and i < star_row and along_e2:
                self.scale_to(i, gamma[1])
                self.apply(move_C(self.d, i, 1, 2))
                used.add(2)
                continue
            s = _top_index(gamma)
            if s == 1:
                self.scale_to(i, gamma[0])
            else:
                self.d_move(1, triangular_unit_matrix(field, gamma, s))
            self.apply(move_C(self.d, i, 1, s))
            used.add(s)

    # case c: mu = (3, 2) ------------------------------------------------
    def case_c(self):
        d, field = self.d, self.field
        one, zero = field.one, field.zero
        self.step((4, 3, d.g + 1))
        row3 = self.lowermost(3)
        if row3 is not None:
            self.scale_to(row3, self.tup(row3, 3)[0])
            self.apply(move_C(self.d, row3, 3, 1))
            if any(self.tup(row3, 2)):
                self.apply(move_E(self.d, 1, 2))
            if any(self.tup(row3, 1)):
                self.apply(move_E(self.d, 1, 1))

        row2 = star = None
        for i in self.rows_up(2):
            self.step((3, 2, i))
            g1, g2 = self.tup(i, 2)
            if not (g1 or g2):
                continue
            if g2 and row2 is None:
                a = ExactMatrix.from_rows(field, [[one, -g1 / g2], [zero, one / g2]])
                self.d_move(2, a)
                self.apply(move_C(self.d, i, 2, 2))
                if any(self.tup(i, 1)):
                    self.apply(move_E(self.d, 2, 1))
                row2 = i
            elif not g2 and star is None:
                self.scale_to(i, g1)
                self.apply(move_C(self.d, i, 2, 1))
                star = i
            else:
                raise RuntimeError(f"column 2 tuple at row {i} escaped the reduction")

        self.step((2, 0, 0))
        if star is not None:
            self.apply(move_C(self.d, star, 2, 1))
        if row2 is not None:
            self.apply(move_C(self.d, row2, 2, 2))
        if row3 is not None:
            self.apply(move_C(self.d, row3, 3, 1))

        first = self.lowermost(1)
        if first is None:
            return
        g1, g2 = self.tup(first, 1)
        if g1 and g2:
            self.step((1, 1, first))
            alpha, beta = one / g1, one / g2
            self.d_move(3, self.diag([alpha, one]))
            self.d_move(2, self.diag([one, beta]))
            if row3 is not None:
                self.scale_to(row3, self.tup(row3, 3)[0])
            if star is not None:
                self.scale_to(star, self.tup(star, 2)[0])
            if row2 is not None:
                self.scale_to(row2, self.tup(row2, 2)[1])
            self.apply(move_C(self.d, first, 1, 2))
            if star is not None:
                self.apply(move_C(self.d, star, 2, 1))
            following = self.lowermost(1, above=first)
            if following is not None:
                self.step((1, 1, following))
                self.scale_to(following, self.tup(following, 1)[0])
                self.apply(move_C(self.d, following, 1, 1))
            return

        for i in self.rows_up(1, first):
            self.step((1, 1, i))
            g1, g2 = self.tup(i, 1)
            if not (g1 or g2):
                continue
            if i == star:
                self.d_move(2, self.diag([one, one / g2]))
                if row2 is not None:
                    self.scale_to(row2, self.tup(row2, 2)[1])
                continue
            s = 1 if g1 else 2
            self.scale_to(i, g1 if g1 else g2)
            self.apply(move_C(self.d, i, 1, s))


def reduce(d: LabeledYoungDiagram) -> Tuple[LabeledYoungDiagram, List[BaseChange]]:
    """
    Reduce a diagram by admissible moves.

    Args:
        d: diagram with |mu| <= 5

    Returns:
        (reduced diagram, move list replaying d onto it)

    Raises:
        MuTooLarge: if |mu| exceeds the reduction range
        NotReducedBase: if the result fails check_reduced (internal error)
    """
    if d.l > REDUCTION_MAX_MU:
        raise MuTooLarge(f"|mu| = {d.l} exceeds {REDUCTION_MAX_MU}", {"mu": list(d.mu)})
    if d.h == 0:
        return d, []
    reducer = _Reducer(d)
    case = reduction_case(d.mu)
    if case == "a":
        reducer.case_a()
    elif case == "b":
        reducer.case_b()
    else:
        reducer.case_c()
    ok, violations = check_reduced(reducer.d)
    if not ok:
        raise NotReducedBase(
            f"reduction of mu={d.mu} left {len(violations)} violated clause(s)",
            {"violations": violations, "diagram": reducer.d.to_dict()},
        )
    return reducer.d, reducer.moves


def reduce_first_column(d: LabeledYoungDiagram) -> Tuple[LabeledYoungDiagram, List[BaseChange]]:
    """Reduce a diagram with mu = (1, ..., 1) keeping the flag <u_h> < <u_{h-1}, u_h> < ... fixed."""
    if any(part != 1 for part in d.mu):
        raise ValueError(f"first-column reduction needs mu = (1,...,1), got {d.mu}")
    reducer = _Reducer(d)
    if d.h:
        reducer.first_column()
    return reducer.d, reducer.moves
