"""
Labeled Young Diagrams

A pair (U, V, f) with f nilpotent on V and U an f-stable subspace is
recorded by the Jordan type lambda of f, the Jordan type mu of f|U and the
coordinates of the chain tops u_m = u_{m, mu_m} of U in a Jordan basis
(v_{i,j}) of V. The gamma matrix has one row per box (i, j) of lambda,
ordered v_{1,1}, ..., v_{1,lambda_1}, v_{2,1}, ..., and one column per part
of mu: column m holds the coordinates of u_m.
"""

import random
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from src.algebra.field import FieldTag
from src.algebra.jordan import Partition, is_partition, jordan_matrix, nilpotent_jordan_basis
from src.algebra.linalg import Subspace, rank, span
from src.algebra.matrix import ExactMatrix
from src.quiver.presets import qp_preset
from src.quiver.representation import QuiverRep
from src.validation.errors import NotStable, SizeMismatch

Box = Tuple[int, int]


def box_offsets(partition: Sequence[int]) -> List[int]:
    """Row of the gamma matrix holding box (i, 1), for every chain i."""
    offsets, total = [], 0
    for part in partition:
        offsets.append(total)
        total += part
    return offsets


def box_index(partition: Sequence[int], i: int, j: int) -> int:
    if not 1 <= i <= len(partition) or not 1 <= j <= partition[i - 1]:
        raise ValueError(f"box ({i},{j}) is outside the diagram {tuple(partition)}")
    return box_offsets(partition)[i - 1] + j - 1


def boxes_of(partition: Sequence[int]) -> List[Box]:
    return [(i, j) for i, part in enumerate(partition, start=1) for j in range(1, part + 1)]


@dataclass(frozen=True)
class LabeledYoungDiagram:
    """
    Jordan types of (V, f) and (U, f|U) with the coordinates of the U-chain tops.

    Attributes:
        lam: Jordan type of f on V (non-increasing, positive parts)
        mu: Jordan type of f on U
        field: base field
        gamma: sum(lam) x len(mu) matrix; entry ((i,j), m) is gamma^m_{i,j}
    """

    lam: Partition
    mu: Partition
    field: FieldTag
    gamma: ExactMatrix

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(p) for p in self.lam))
        object.__setattr__(self, "mu", tuple(int(p) for p in self.mu))
        if self.lam and not is_partition(self.lam):
            raise ValueError(f"lambda={self.lam} is not a partition")
        if self.mu and not is_partition(self.mu):
            raise ValueError(f"mu={self.mu} is not a partition")
        if self.gamma.field != self.field:
            raise SizeMismatch(f"gamma lives over {self.gamma.field}, expected {self.field}")
        if self.gamma.shape != (self.k, self.h):
            raise SizeMismatch(
                f"gamma has shape {self.gamma.shape}, expected {(self.k, self.h)}",
                {"lambda": self.lam, "mu": self.mu},
            )
        for m, part in enumerate(self.mu, start=1):
            for i, j in self.boxes():
                if j > part and self.entry(i, j, m):
                    raise ValueError(
                        f"gamma^{m}_({i},{j}) must vanish: u_{m} lies in Ker f^{part}"
                    )

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, lam: Sequence[int], mu: Sequence[int], field: FieldTag) -> "LabeledYoungDiagram":
        return cls(tuple(lam), tuple(mu), field, ExactMatrix.zeros(field, sum(lam), len(mu)))

    @classmethod
    def from_tops(
        cls,
        lam: Sequence[int],
        mu: Sequence[int],
        field: FieldTag,
        tops: Sequence[Mapping[Box, Any]],
    ) -> "LabeledYoungDiagram":
        """
        Build from explicit tops u_m = sum gamma^m_{i,j} v_{i,j}.

        Args:
            tops: one mapping (i, j) -> coefficient per part of mu
        """
        if len(tops) != len(mu):
            raise SizeMismatch(f"{len(tops)} tops given for mu={tuple(mu)}")
        columns = []
        for top in tops:
            column = [field.zero] * sum(lam)
            for (i, j), value in top.items():
                column[box_index(lam, i, j)] = field(value)
            columns.append(tuple(column))
        return cls(tuple(lam), tuple(mu), field, ExactMatrix.from_columns(field, columns, rows=sum(lam)))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LabeledYoungDiagram":
        field = FieldTag.parse(data.get("field", "Q"))
        lam = tuple(int(p) for p in data["lambda"])
        mu = tuple(int(p) for p in data["mu"])
        grid = [[field.zero] * len(mu) for _ in range(sum(lam))]
        for key, values in data.get("gamma", {}).items():
            i, j = (int(part) for part in key.split(","))
            if len(values) != len(mu):
                raise SizeMismatch(f"box {key} carries {len(values)} entries, expected {len(mu)}")
            grid[box_index(lam, i, j)] = [field(v) for v in values]
        gamma = ExactMatrix(field, sum(lam), len(mu), tuple(tuple(row) for row in grid))
        return cls(lam, mu, field, gamma)

    def with_gamma(self, gamma: ExactMatrix) -> "LabeledYoungDiagram":
        return LabeledYoungDiagram(self.lam, self.mu, self.field, gamma)

    # ------------------------------------------------------------------
    # Access
    # ------------------------------------------------------------------
    @property
    def k(self) -> int:
        return sum(self.lam)

    @property
    def l(self) -> int:
        return sum(self.mu)

    @property
    def g(self) -> int:
        return len(self.lam)

    @property
    def h(self) -> int:
        return len(self.mu)

    def boxes(self) -> List[Box]:
        return boxes_of(self.lam)

    def index(self, i: int, j: int) -> int:
        return box_index(self.lam, i, j)

    def entry(self, i: int, j: int, m: int):
        return self.gamma[self.index(i, j), m - 1]

    def tuple_at(self, i: int, j: int) -> Tuple:
        return self.gamma.row(self.index(i, j))

    def is_nonzero(self, i: int, j: int) -> bool:
        return any(self.tuple_at(i, j))

    def nonzero_boxes(self) -> List[Box]:
        return [(i, j) for i, j in self.boxes() if self.is_nonzero(i, j)]

    def row_support(self, i: int) -> List[int]:
        """Columns j with a nonzero tuple in row i."""
        return [j for j in range(1, self.lam[i - 1] + 1) if self.is_nonzero(i, j)]

    def is_zero(self) -> bool:
        return self.gamma.is_zero()

    def to_dict(self) -> Dict[str, Any]:
        gamma = {
            f"{i},{j}": [self.field.to_plain(x) for x in self.tuple_at(i, j)]
            for i, j in self.nonzero_boxes()
        }
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "field": self.field.label,
            "gamma": gamma,
        }

    def render(self) -> List[str]:
        """One text line per row of the diagram, tuples as (a,b,...)."""
        lines = []
        for i, part in enumerate(self.lam, start=1):
            cells = []
            for j in range(1, part + 1):
                values = self.tuple_at(i, j)
                if any(values):
                    cells.append("(" + ",".join(str(self.field.to_plain(x)) for x in values) + ")")
                else:
                    cells.append("0")
            lines.append(" ".join(cells))
        return lines

    def __repr__(self):
        return f"LabeledYoungDiagram(lambda={self.lam}, mu={self.mu}, {self.field.label}, gamma={self.to_dict()['gamma']})"


# ----------------------------------------------------------------------
# Pairs (U, V, f) and their diagrams
# ----------------------------------------------------------------------
def _restriction(u_basis: Subspace, f: ExactMatrix) -> ExactMatrix:
    """Matrix of f|U in the echelon basis of U."""
    columns = []
    for vector in u_basis.vectors:
        coords = u_basis.coordinates(f.apply(vector))
        if coords is None:
            raise NotStable("f(U) is not contained in U")
        columns.append(coords)
    return ExactMatrix.from_columns(f.field, columns, rows=u_basis.dim)


def diagram_from_pair(u_basis: Subspace, v_dim: int, f: ExactMatrix) -> LabeledYoungDiagram:
    """
    The labeled Young diagram of (U, V, f).

    Jordan bases of f and of f|U are taken from the deterministic chain
    selection of the algebra package; gamma expresses every chain top of U
    in the Jordan basis of V.

    Args:
        u_basis: the subspace U of F^v_dim
        v_dim: dimension of V
        f: nilpotent v_dim x v_dim matrix

    Raises:
        NotStable: if f(U) is not contained in U
        NotNilpotent: if f is not nilpotent
    """
    field = f.field
    if f.shape != (v_dim, v_dim):
        raise SizeMismatch(f"f has shape {f.shape}, expected {(v_dim, v_dim)}")
    if u_basis.ambient_dim != v_dim:
        raise SizeMismatch(f"U lives in dimension {u_basis.ambient_dim}, expected {v_dim}")
    restricted = _restriction(u_basis, f)
    v_jordan, lam = nilpotent_jordan_basis(f)
    u_jordan, mu = nilpotent_jordan_basis(restricted)

    tops = []
    offsets = box_offsets(mu)
    for m, part in enumerate(mu):
        coords = u_jordan.column(offsets[m] + part - 1)
        top = [field.zero] * v_dim
        for c, vector in zip(coords, u_basis.vectors):
            if c:
                top = [a + c * b for a, b in zip(top, vector)]
        tops.append(tuple(top))
    top_matrix = ExactMatrix.from_columns(field, tops, rows=v_dim)
    gamma = v_jordan.inverse() @ top_matrix
    return LabeledYoungDiagram(lam, mu, field, gamma)


def chain_vectors(d: LabeledYoungDiagram) -> ExactMatrix:
    """k x l matrix whose column (m, t) is u_{m,t} = f^{mu_m - t}(u_m) in the v-basis."""
    field = d.field
    shift = jordan_matrix(field, d.lam)
    columns = []
    for m, part in enumerate(d.mu, start=1):
        top = d.gamma.column(m - 1)
        for t in range(1, part + 1):
            columns.append(shift.power(part - t).apply(top))
    return ExactMatrix.from_columns(field, columns, rows=d.k)


def diagram_subspace(d: LabeledYoungDiagram) -> Subspace:
    return span(d.field, d.k, chain_vectors(d).columns())


def is_injective_diagram(d: LabeledYoungDiagram) -> bool:
    """True iff the chains u_{m,t} are linearly independent."""
    return d.l == 0 or rank(chain_vectors(d)) == d.l


def pair_rep(u_basis: Subspace, f: ExactMatrix, x: int = None) -> QuiverRep:
    """Q_2 representation U -> V with the loops f|U and f."""
    restricted = _restriction(u_basis, f)
    x = max(f.rows, 1) if x is None else x
    alpha = ExactMatrix.from_columns(f.field, u_basis.vectors, rows=f.rows)
    maps = {"beta_1": restricted, "beta_2": f, "alpha_1": alpha}
    return QuiverRep(qp_preset(2, x), f.field, (u_basis.dim, f.rows), maps)


def diagram_rep(d: LabeledYoungDiagram, x: int = None) -> QuiverRep:
    """Q_2 representation of a diagram: J_mu on U, J_lambda on V, chains as the arrow."""
    x = max(d.k, 1) if x is None else x
    maps = {
        "beta_1": jordan_matrix(d.field, d.mu),
        "beta_2": jordan_matrix(d.field, d.lam),
        "alpha_1": chain_vectors(d),
    }
    return QuiverRep(qp_preset(2, x), d.field, (d.l, d.k), maps)


def random_stable_pair(
    lam: Sequence[int],
    mu: Sequence[int],
    field: FieldTag,
    rng: random.Random,
    attempts: int = 64,
) -> Tuple[Subspace, ExactMatrix]:
    """
    A random f-stable U in V with f of Jordan type lam and f|U of type mu.

    Tops u_m are drawn uniformly from Ker f^{mu_m} (entries in [-3, 3] over
    Q) until the chains are independent; the coordinate choice
    u_m = v_{m, mu_m} is used if every attempt fails.

    Returns:
        (U, f) with f = J_lam

    Raises:
        ValueError: if mu does not fit inside lam
    """
    lam, mu = tuple(lam), tuple(mu)
    if not is_partition(lam) or (mu and not is_partition(mu)):
        raise ValueError(f"lambda={lam} and mu={mu} must be partitions")
    if len(mu) > len(lam) or any(m > p for m, p in zip(mu, lam)):
        raise ValueError(f"mu={mu} does not fit inside lambda={lam}")
    f = jordan_matrix(field, lam)
    if field.is_finite:
        draw = lambda: field.domain(rng.randrange(field.order))
    else:
        draw = lambda: field(rng.randint(-3, 3))

    for _ in range(attempts):
        tops = []
        for part in mu:
            tops.append({(i, j): draw() for i, j in boxes_of(lam) if j <= part})
        d = LabeledYoungDiagram.from_tops(lam, mu, field, tops)
        if is_injective_diagram(d):
            return diagram_subspace(d), f
    tops = [{(m, part): 1} for m, part in enumerate(mu, start=1)]
    return diagram_subspace(LabeledYoungDiagram.from_tops(lam, mu, field, tops)), f
