"""
Generic-Element Nilpotency

A subspace S of n x n matrices consists of nilpotent matrices iff the
characteristic polynomial of a generic element sum_k t_k B_k equals t^n as
a polynomial in the indeterminates t_k. The expansion is exact (division
free, over a polynomial ring on QQ or GF(q)) and guarded by a budget.
"""

from math import isqrt
from typing import List, Sequence, Union

import sympy
from sympy.polys.matrices import DomainMatrix

from config.algebra_params import SYMBOLIC_MATRIX_BUDGET, SYMBOLIC_VARIABLE_BUDGET
from src.algebra.linalg import Subspace
from src.algebra.matrix import ExactMatrix
from src.validation.errors import DimensionTooLarge, SizeMismatch


def flatten(m: ExactMatrix) -> tuple:
    """Row-major coordinates of m in the space of rows x cols matrices."""
    return tuple(x for row in m.entries for x in row)


def unflatten(field, n: int, values: Sequence) -> ExactMatrix:
    return ExactMatrix(field, n, n, tuple(tuple(values[i * n : (i + 1) * n]) for i in range(n)))


def subspace_matrices(s: Subspace) -> List[ExactMatrix]:
    """The echelon basis of a subspace of F^(n*n) read back as n x n matrices."""
    n = isqrt(s.ambient_dim)
    if n * n != s.ambient_dim:
        raise SizeMismatch(f"ambient dimension {s.ambient_dim} is not a square")
    return [unflatten(s.field, n, v) for v in s.vectors]


def generic_element(
    basis: Sequence[ExactMatrix],
    max_variables: int = SYMBOLIC_VARIABLE_BUDGET,
    max_size: int = SYMBOLIC_MATRIX_BUDGET,
):
    """
    The matrix sum_k t_k basis[k] over a polynomial ring in t_0, t_1, ...

    Returns:
        (DomainMatrix, ring)

    Raises:
        DimensionTooLarge: above max_variables indeterminates or max_size rows
    """
    field = basis[0].field
    n = basis[0].rows
    if len(basis) > max_variables or n > max_size:
        raise DimensionTooLarge(
            f"generic element with {len(basis)} indeterminates of size {n}x{n} "
            f"exceeds the symbolic budget",
            {"variables": len(basis), "size": n},
        )
    symbols = sympy.symbols(f"t0:{len(basis)}")
    ring = field.domain.poly_ring(*symbols)
    gens = ring.gens
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = ring.zero
            for k, b in enumerate(basis):
                if b[i, j]:
                    entry += ring.convert(field.to_sympy(b[i, j])) * gens[k]
            row.append(entry)
        grid.append(row)
    return DomainMatrix(grid, (n, n), ring), ring


def generic_charpoly(basis: Sequence[ExactMatrix]):
    """
    Characteristic polynomial coefficients of sum_k t_k basis[k].

    Returns:
        (coefficients, ring): coefficients are elements of ``ring``,
        leading coefficient first
    """
    generic, ring = generic_element(basis)
    return list(generic.charpoly()), ring


def generic_determinant_vanishes(basis: Sequence[ExactMatrix], **budget) -> bool:
    """True iff det(sum_k t_k basis[k]) is the zero polynomial."""
    if not basis or basis[0].rows == 0:
        return False
    generic, ring = generic_element(basis, **budget)
    return generic.det() == ring.zero


def is_nilpotent_subspace(s: Union[Subspace, Sequence[ExactMatrix]], n: int = None) -> bool:
    """
    Decide whether every element of a subspace of n x n matrices is nilpotent.

    Args:
        s: a Subspace of F^(n*n) (matrices flattened row by row), or a list
            of spanning matrices
        n: ambient size, required for an empty list

    Returns:
        True iff all non-leading characteristic coefficients vanish identically

    Raises:
        DimensionTooLarge: if the symbolic expansion exceeds the budget
    """
    if isinstance(s, Subspace):
        if n is not None and n * n != s.ambient_dim:
            raise SizeMismatch("declared ambient size does not match the subspace")
        basis = subspace_matrices(s)
    else:
        basis = [b for b in s if not b.is_zero()]
    if not basis:
        return True
    size = basis[0].rows
    if any(b.rows != size or b.cols != size for b in basis):
        raise SizeMismatch("subspace spanned by matrices of different sizes")
    if n is not None and n != size:
        raise SizeMismatch("declared ambient size does not match the basis")
    coefficients, ring = generic_charpoly(basis)
    return all(c == ring.zero for c in coefficients[1:])
