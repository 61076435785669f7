"""
Commuting Nilpotent Pairs

For d = (k, n) with k, n - k >= 6, x_t in N_p acts on the canonical basis by

    e_n -> ... -> e_{k+4} -> e_{k+3} -> e_{k-1} -> e_{k-5} -> ... -> e_1 -> 0
    e_{k+2} -> e_{k+1} -> e_k -> e_{k-1} + e_{k-4}
    e_{k-2} -> e_{k-3} -> e_{k-4} -> t e_{k-5}

and y_t is defined on the Jordan basis of x_t

    u1 = e_{k+2} - (1+t) e_{k+5}     v1 = e_{k+1} - e_{k-2} - e_{k+4}
    u2 = e_{k+1} - (1+t) e_{k+4}     v2 = e_k - e_{k-3} - e_{k+3}
    u3 = e_k - (1+t) e_{k+3}
    u4 = e_{k-4} - t e_{k-1}

by e_n -> u1 -> v1 -> v2 + a u3, e_{n-1} -> u2 -> v2 -> a u4, e_{n-2} -> u3,
e_{n-3} -> u4 and zero on the rest of the long chain, with a = t if
n = k + 6 and a = 0 otherwise. The v2 term in y(v1) keeps U = <e_1..e_k>
stable; without it y(e_{k-2}) has a component outside U when n = k + 6.
"""

import random
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import sympy
from rich.console import Console
from rich.progress import Progress

from config.algebra_params import DEFAULT_SEED
from src.algebra.field import FieldTag, gf
from src.algebra.linalg import span
from src.algebra.matrix import ExactMatrix
from src.parabolic.shape import BlockVector, dims_of, in_nilpotent_cone
from src.validation.errors import ParamOutOfRange

T = sympy.Symbol("t")


def _check_sizes(n: int, k: int):
    if k < 6 or n - k < 6:
        raise ParamOutOfRange(f"commuting pair needs k >= 6 and n - k >= 6, got k={k}, n={n}", {"k": k, "n": n})


def alpha_of(n: int, k: int, t):
    """a = t when n = k + 6, else 0."""
    return t if n == k + 6 else 0


def _pair_images(n: int, k: int, t, zero, one) -> Tuple[List[List], List[List], List[List]]:
    """
    Columns of x (on e_1..e_n), of the Jordan basis and of y on that basis.

    Scalars only need + and *, so the same code serves GF(q), Q and sympy.
    """

    def e(i: int) -> List:
        v = [zero] * n
        v[i - 1] = one
        return v

    def comb(*terms) -> List:
        out = [zero] * n
        for coefficient, vector in terms:
            out = [a + coefficient * b for a, b in zip(out, vector)]
        return out

    image: Dict[int, List] = {1: [zero] * n}
    for i in range(k + 4, n + 1):
        image[i] = e(i - 1)
    image[k + 3] = e(k - 1)
    image[k - 1] = e(k - 5)
    for i in range(2, k - 4):
        image[i] = e(i - 1)
    image[k + 2] = e(k + 1)
    image[k + 1] = e(k)
    image[k] = comb((one, e(k - 1)), (one, e(k - 4)))
    image[k - 2] = e(k - 3)
    image[k - 3] = e(k - 4)
    image[k - 4] = comb((t, e(k - 5)))
    x_columns = [image[i] for i in range(1, n + 1)]

    s = one + t
    u1 = comb((one, e(k + 2)), (-s, e(k + 5)))
    u2 = comb((one, e(k + 1)), (-s, e(k + 4)))
    u3 = comb((one, e(k)), (-s, e(k + 3)))
    u4 = comb((one, e(k - 4)), (-t, e(k - 1)))
    v1 = comb((one, e(k + 1)), (-one, e(k - 2)), (-one, e(k + 4)))
    v2 = comb((one, e(k)), (-one, e(k - 3)), (-one, e(k + 3)))

    a = t if n == k + 6 else zero
    long_chain = list(range(n, k + 2, -1)) + [k - 1] + list(range(k - 5, 0, -1))
    y_on_chain = {n: u1, n - 1: u2, n - 2: u3, n - 3: u4}
    basis = [e(i) for i in long_chain] + [u1, u2, u3, u4, v1, v2]
    y_images = [y_on_chain.get(i, [zero] * n) for i in long_chain]
    y_images += [v1, v2, [zero] * n, [zero] * n, comb((one, v2), (a, u3)), comb((a, u4))]
    return x_columns, basis, y_images


def commuting_pair(field: FieldTag, n: int, k: int, t) -> Tuple[ExactMatrix, ExactMatrix]:
    """
    (x_t, y_t) over a field.

    Raises:
        ParamOutOfRange: if k < 6 or n - k < 6
    """
    _check_sizes(n, k)
    t = field(t)
    x_columns, basis, y_images = _pair_images(n, k, t, field.zero, field.one)
    x = ExactMatrix.from_columns(field, [tuple(c) for c in x_columns], rows=n)
    change = ExactMatrix.from_columns(field, [tuple(c) for c in basis], rows=n)
    y = ExactMatrix.from_columns(field, [tuple(c) for c in y_images], rows=n) @ change.inverse()
    return x, y


def symbolic_pair(n: int, k: int) -> Tuple[sympy.Matrix, sympy.Matrix]:
    """(x_t, y_t) with t an indeterminate."""
    _check_sizes(n, k)
    x_columns, basis, y_images = _pair_images(n, k, T, sympy.Integer(0), sympy.Integer(1))
    x = sympy.Matrix.hstack(*[sympy.Matrix(c) for c in x_columns])
    change = sympy.Matrix.hstack(*[sympy.Matrix(c) for c in basis])
    images = sympy.Matrix.hstack(*[sympy.Matrix(c) for c in y_images])
    y = (images * change.inv()).applyfunc(sympy.expand)
    return x, y


def symbolic_checks(n: int, k: int) -> Dict[str, bool]:
    """[x_t, y_t] = 0 and y_t(U) in U as identities in t."""
    x, y = symbolic_pair(n, k)
    commutator = (x * y - y * x).applyfunc(sympy.expand)
    return {
        "commutator_zero": commutator.is_zero_matrix is True,
        "x_preserves_U": all(x[i, j] == 0 for i in range(k, n) for j in range(k)),
        "y_preserves_U": all(sympy.expand(y[i, j]) == 0 for i in range(k, n) for j in range(k)),
    }


def cyclic_span_dim(x: ExactMatrix, y: ExactMatrix, v: Sequence) -> int:
    """Dimension of the span of all x^i y^j v."""
    n = x.rows
    vectors = [tuple(v)]
    current = span(x.field, n, vectors)
    frontier = [tuple(v)]
    while frontier:
        fresh = []
        for w in frontier:
            for image in (x.apply(w), y.apply(w)):
                if not current.contains(image):
                    vectors.append(image)
                    current = span(x.field, n, vectors)
                    fresh.append(image)
        frontier = fresh
    return current.dim


def has_cyclic_vector_en(x: ExactMatrix, y: ExactMatrix) -> bool:
    n = x.rows
    e_n = tuple(x.field.one if i == n - 1 else x.field.zero for i in range(n))
    return cyclic_span_dim(x, y, e_n) == n


# ----------------------------------------------------------------------
# Report
# ----------------------------------------------------------------------
@dataclass
class CommutingPairReport:
    """
    Checks on (x_t, y_t) for one (n, k).

    Attributes:
        symbolic: identities in t (commutator, stability of U)
        sampled: t values tried over GF(q)
        not_cyclic: sampled t where e_n is not cyclic
        not_distinguished: sampled t where x_t is not distinguished
        not_in_cone: sampled t where x_t or y_t leaves N_p
    """

    n: int
    k: int
    q: int
    symbolic: Dict[str, bool]
    sampled: List[int] = dataclass_field(default_factory=list)
    not_cyclic: List[int] = dataclass_field(default_factory=list)
    not_distinguished: List[int] = dataclass_field(default_factory=list)
    not_in_cone: List[int] = dataclass_field(default_factory=list)
    methods: List[str] = dataclass_field(default_factory=list)

    @property
    def exceptional(self) -> List[int]:
        return sorted(set(self.not_cyclic) | set(self.not_distinguished) | set(self.not_in_cone))

    @property
    def good_count(self) -> int:
        return len(self.sampled) - len(self.exceptional)

    def validate(self) -> List[str]:
        errors = [f"symbolic check {name} failed" for name, ok in self.symbolic.items() if not ok]
        if self.not_in_cone:
            errors.append(f"x_t or y_t outside N_p for t in {self.not_in_cone}")
        return errors

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "alpha": "t" if self.n == self.k + 6 else "0",
            "symbolic": dict(self.symbolic),
            "sampled": len(self.sampled),
            "good": self.good_count,
            "not_cyclic": list(self.not_cyclic),
            "not_distinguished": list(self.not_distinguished),
            "not_in_cone": list(self.not_in_cone),
            "exceptional": self.exceptional,
            "distinguished_methods": sorted(set(self.methods)),
        }


def commuting_pair_report(
    n: int,
    k: int,
    q: int = 101,
    samples: int = 100,
    seed: int = None,
    distinguished: Optional[Callable] = None,
    console: Optional[Console] = None,
) -> CommutingPairReport:
    """
    Symbolic identities plus sampled cyclicity and distinguishedness.

    Args:
        n, k: sizes, d = (k, n)
        q: prime for the sampled checks
        samples: number of distinct nonzero t values drawn
        seed: sampling seed (DEFAULT_SEED when None)
        distinguished: test (shape, x) -> (bool, method); defaults to is_distinguished
        console: when given, a progress bar is shown
    """
    from src.families.distinguished import is_distinguished

    _check_sizes(n, k)
    test = distinguished or is_distinguished
    field = gf(q)
    shape = dims_of(BlockVector((k, n - k)))
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    values = sorted(rng.sample(range(1, q), min(samples, q - 1)))
    report = CommutingPairReport(n, k, q, symbolic_checks(n, k), sampled=values)

    progress = Progress(console=console, transient=True) if console is not None else None
    if progress is not None:
        progress.start()
        task = progress.add_task(f"Sampling t over GF({q})", total=len(values))
    try:
        for value in values:
            x, y = commuting_pair(field, n, k, value)
            if not (in_nilpotent_cone(shape, x) and in_nilpotent_cone(shape, y)):
                report.not_in_cone.append(value)
            if not has_cyclic_vector_en(x, y):
                report.not_cyclic.append(value)
            verdict, method = test(shape, x)
            report.methods.append(method)
            if not verdict:
                report.not_distinguished.append(value)
            if progress is not None:
                progress.advance(task)
    finally:
        if progress is not None:
            progress.stop()
    return report
