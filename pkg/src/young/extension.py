"""
Extension Checks

Normal forms for one extra piece of data on top of a reduced pair
(U, V, f):

    right_functional : phi on V with f-stable kernel containing U
    left_vector      : a vector u' in U with f(u') = 0
    left_functional  : phi on U with f-stable kernel
    flag             : f-stable subspaces U'' < U' < U of dimensions 1, 2, 3

Each check validates the data, reports its normalized form and lists the
finitely many normal forms available for the given diagram.
"""

from dataclasses import dataclass, field as dataclass_field
from itertools import product
from typing import Any, Dict, List, Mapping, Sequence

from src.algebra.jordan import jordan_matrix
from src.algebra.linalg import extend_to_basis, kernel, span
from src.algebra.matrix import ExactMatrix
from src.validation.errors import MuTooLarge, NotReducedBase, NotStable, SizeMismatch
from src.young.diagram import LabeledYoungDiagram, chain_vectors
from src.young.reduction import check_reduced, reduce_first_column

EXTENSION_KINDS = ("right_functional", "left_vector", "left_functional", "flag")

# mu with a long first chain that the one-vector checks accept
_LONG_SHAPES = ((4,), (3,), (3, 1))


@dataclass
class ExtensionReport:
    """
    Outcome of an extension check.

    Attributes:
        kind: one of EXTENSION_KINDS
        case: which normalization branch applied
        normalized: the normal form of the given data
        classes: every normal form available on this diagram
        notes: remarks for the reader of the report
    """

    kind: str
    case: str
    normalized: Dict[str, Any]
    classes: List[Dict[str, Any]]
    notes: List[str] = dataclass_field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "case": self.case,
            "normalized": self.normalized,
            "classes": self.classes,
            "class_count": self.class_count,
            "notes": list(self.notes),
        }


def extend_check(kind: str, d: LabeledYoungDiagram, data: Any) -> ExtensionReport:
    """
    Normalize the extra data of an extension of a reduced diagram.

    Args:
        kind: one of EXTENSION_KINDS
        d: a diagram passing check_reduced
        data: phi as a list of k values (right_functional), eta as the
            coefficients of u' on u_{m,1} (left_vector), the values
            phi(u_m) (left_functional), or {"U_prime": [...], "U_double_prime": [...]}
            as vectors in the chain basis u_{1,1}, ..., u_{1,mu_1}, u_{2,1}, ... (flag)

    Raises:
        NotReducedBase: if d fails check_reduced
        NotStable: if the data is not compatible with f
    """
    if kind not in EXTENSION_KINDS:
        raise ValueError(f"unknown extension kind {kind!r}; expected one of {EXTENSION_KINDS}")
    ok, violations = check_reduced(d)
    if not ok:
        raise NotReducedBase("extension checks need a reduced diagram", {"violations": violations})
    handlers = {
        "right_functional": _right_functional,
        "left_vector": _left_vector,
        "left_functional": _left_functional,
        "flag": _flag,
    }
    return handlers[kind](d, data)


def _values(d: LabeledYoungDiagram, data: Sequence[Any], length: int, what: str) -> List:
    if len(data) != length:
        raise SizeMismatch(f"{what} needs {length} values, got {len(data)}")
    return [d.field(x) for x in data]


# ----------------------------------------------------------------------
# phi on V
# ----------------------------------------------------------------------
def part_ends(lam: Sequence[int]) -> List[int]:
    """Last row of every distinct part size."""
    return [i for i in range(1, len(lam) + 1) if i == len(lam) or lam[i - 1] > lam[i]]


def _right_functional(d: LabeledYoungDiagram, data) -> ExtensionReport:
    phi = _values(d, data, d.k, "phi")
    for i, j in d.boxes():
        if j < d.lam[i - 1] and phi[d.index(i, j)]:
            raise NotStable(f"Ker phi is not f-stable: phi(v_({i},{j})) != 0")
    for column in chain_vectors(d).columns():
        if sum((a * b for a, b in zip(phi, column)), d.field.zero):
            raise NotStable("U is not contained in Ker phi")

    admissible = [i for i in part_ends(d.lam) if not d.is_nonzero(i, d.lam[i - 1])]
    classes = [{"i_bullet": None}] + [{"i_bullet": i, "part": d.lam[i - 1]} for i in admissible]

    support = [i for i in range(1, d.g + 1) if phi[d.index(i, d.lam[i - 1])]]
    if not support:
        return ExtensionReport("right_functional", "zero", {"i_bullet": None}, classes)
    smallest = min(d.lam[i - 1] for i in support)
    i_bullet = max(i for i in range(1, d.g + 1) if d.lam[i - 1] == smallest)
    notes = []
    if i_bullet not in admissible:
        notes.append(f"row {i_bullet} carries a top tuple; reduce again after normalizing phi")
    normalized = {"i_bullet": i_bullet, "part": smallest}
    return ExtensionReport("right_functional", "top", normalized, classes, notes)


# ----------------------------------------------------------------------
# u' in U and phi on U
# ----------------------------------------------------------------------
def _one_vector_case(d: LabeledYoungDiagram) -> str:
    if d.l > 4:
        raise MuTooLarge(f"one-vector extensions need |mu| <= 4, got mu={d.mu}")
    if not d.mu or d.mu[0] <= 2:
        return "a"
    if d.mu in _LONG_SHAPES:
        return "b"
    raise MuTooLarge(f"no one-vector normal form for mu={d.mu}")


def _epsilon(values) -> List[int]:
    return [1 if x else 0 for x in values]


def _one_vector_report(kind: str, d: LabeledYoungDiagram, values: List) -> ExtensionReport:
    case = _one_vector_case(d)
    if case == "a":
        classes = [{"epsilon": list(eps)} for eps in product((0, 1), repeat=d.h)]
        return ExtensionReport(kind, "a", {"epsilon": _epsilon(values)}, classes)

    classes = [{"epsilon": [0] * d.h}, {"epsilon": [1] + [0] * (d.h - 1)}]
    if d.mu == (3, 1):
        classes.append({"epsilon": [0, 1], "generic": True})
    if d.mu == (3, 1) and values[1]:
        normalized = {"epsilon": [0, 1], "generic": True}
        return ExtensionReport(
            kind, "b-generic", normalized, classes, ["u_2 is replaced by the generic element"]
        )
    return ExtensionReport(kind, "b", {"epsilon": _epsilon(values[:1]) + [0] * (d.h - 1)}, classes)


def _left_vector(d: LabeledYoungDiagram, data) -> ExtensionReport:
    return _one_vector_report("left_vector", d, _values(d, data, d.h, "eta"))


def _left_functional(d: LabeledYoungDiagram, data) -> ExtensionReport:
    return _one_vector_report("left_functional", d, _values(d, data, d.h, "phi(u_m)"))


# ----------------------------------------------------------------------
# flags U'' < U' < U
# ----------------------------------------------------------------------
def _flag(d: LabeledYoungDiagram, data: Mapping[str, Any]) -> ExtensionReport:
    if d.l != 3:
        raise MuTooLarge(f"flag extensions need |mu| = 3, got mu={d.mu}")
    field = d.field
    shift = jordan_matrix(field, d.mu)
    upper = span(field, 3, [_values(d, v, 3, "U' vector") for v in data["U_prime"]])
    lower = span(field, 3, [_values(d, v, 3, "U'' vector") for v in data["U_double_prime"]])
    if (lower.dim, upper.dim) != (1, 2):
        raise SizeMismatch(f"flag needs dimensions (1, 2), got {(lower.dim, upper.dim)}")
    if not lower.is_subspace_of(upper):
        raise ValueError("U'' is not contained in U'")
    for sub in (lower, upper):
        if any(not sub.contains(shift.apply(v)) for v in sub.vectors):
            raise NotStable("flag member is not f-stable")

    if d.mu == (3,):
        normalized = {"U_double_prime": "<u_(1,1)>", "U_prime": "<u_(1,1), u_(1,2)>"}
        return ExtensionReport("flag", "forced", normalized, [normalized])

    if d.mu == (2, 1):
        # chain basis order: u_(1,1), u_(1,2), u_(2,1)
        kernel_f = kernel(shift)
        if upper == kernel_f:
            w = lower.vectors[0]
            report = _one_vector_report("flag", d, [w[0], w[2]])
            report.case = "kernel"
            report.notes.append("U' = Ker f; U'' is normalized as a vector of Ker f")
            return report
        annihilator = kernel(ExactMatrix.from_rows(field, upper.vectors))
        phi = annihilator.vectors[0]
        report = _one_vector_report("flag", d, [phi[1], phi[2]])
        report.case = "image"
        report.notes.append("U'' = f(U); U' is normalized as the kernel of a functional")
        return report

    # mu = (1,1,1): adapted basis u_3 in U'', u_2 in U', then triangular moves only
    adapted = extend_to_basis(field, 3, [lower.vectors[0], _outside(upper, lower)])
    change = ExactMatrix.from_columns(field, list(reversed(adapted)), rows=3)
    rebased = d.with_gamma(d.gamma @ change)
    reduced, moves = reduce_first_column(rebased)
    normalized = {"diagram": reduced.to_dict(), "moves": [bc.label for bc in moves]}
    return ExtensionReport("flag", "triangular", normalized, [normalized])


def _outside(upper, lower):
    return next(v for v in upper.vectors if not lower.contains(v))
