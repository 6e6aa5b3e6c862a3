"""
Exact linear algebra over GF(p).

Gauss-Jordan elimination with first-nonzero pivot selection; arithmetic is
exact so no pivoting heuristics are needed. All functions are pure.
"""

from typing import List, Sequence, Tuple, Union

import numpy as np

from ..errors import UsageError
from .field import FieldElement, FieldPrime
from .matrix import FieldMatrix

DEFAULT_ENUMERATION_BUDGET = 1 << 20

Vector = Sequence[Union[int, FieldElement]]


def row_reduce(data: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row-echelon form of a residue array over GF(p).

    Args:
        data: Integer array; copied, never mutated
        p: Prime modulus

    Returns:
        Tuple of (RREF array, pivot column indices)
    """
    mat = np.array(data, dtype=np.int64, copy=True) % p
    num_rows, num_cols = mat.shape
    pivots: List[int] = []
    row = 0
    for col in range(num_cols):
        if row >= num_rows:
            break
        candidates = np.nonzero(mat[row:, col])[0]
        if len(candidates) == 0:
            continue
        pivot_row = int(candidates[0]) + row
        if pivot_row != row:
            mat[[row, pivot_row]] = mat[[pivot_row, row]]
        inv_pivot = pow(int(mat[row, col]), -1, p)
        mat[row] = (mat[row] * inv_pivot) % p
        for other in range(num_rows):
            if other != row and mat[other, col] != 0:
                mat[other] = (mat[other] - (int(mat[other, col]) * mat[row]) % p) % p
        pivots.append(col)
        row += 1
    return mat, pivots


def rank(m: FieldMatrix) -> int:
    """Row rank of ``m`` over its field."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(row_reduce(m.array, m.field.p)[1])


def determinant(m: FieldMatrix) -> FieldElement:
    """
    Exact determinant of a square matrix.

    Raises:
        UsageError: If ``m`` is not square
    """
    if m.rows != m.cols:
        raise UsageError(f"Determinant of a non-square {m.rows}x{m.cols} matrix")
    p = m.field.p
    mat = np.array(m.array, dtype=np.int64, copy=True)
    size = m.rows
    det = 1
    for col in range(size):
        candidates = np.nonzero(mat[col:, col])[0]
        if len(candidates) == 0:
            return m.field.zero
        pivot_row = int(candidates[0]) + col
        if pivot_row != col:
            mat[[col, pivot_row]] = mat[[pivot_row, col]]
            det = -det
        pivot = int(mat[col, col])
        det = (det * pivot) % p
        inv_pivot = pow(pivot, -1, p)
        for other in range(col + 1, size):
            factor = (int(mat[other, col]) * inv_pivot) % p
            if factor:
                mat[other] = (mat[other] - (factor * mat[col]) % p) % p
    return m.field(det)


def _as_residues(field: FieldPrime, v: Vector) -> List[int]:
    residues = []
    for entry in v:
        if isinstance(entry, FieldElement):
            if entry.field != field:
                raise UsageError(f"Field mismatch: {field} and {entry.field}")
            residues.append(entry.value)
        else:
            residues.append(int(entry) % field.p)
    return residues


def row_space_contains(m: FieldMatrix, v: Vector) -> bool:
    """
    Whether ``v`` lies in the row space of ``m``.

    Raises:
        UsageError: If ``v`` does not have ``m.cols`` entries
    """
    if len(v) != m.cols:
        raise UsageError(f"Vector of length {len(v)} against {m.cols} columns")
    row = FieldMatrix.from_rows(m.field, [_as_residues(m.field, v)])
    return rank(m.stack(row)) == rank(m)


def nullspace_basis(m: FieldMatrix) -> List[Tuple[int, ...]]:
    """
    Basis of the right null space {x : m x = 0}.

    Each basis vector is scaled so its first nonzero entry is 1. The list
    is empty exactly when ``m`` has full column rank.
    """
    p = m.field.p
    if m.rows == 0:
        reduced, pivots = np.zeros((0, m.cols), dtype=np.int64), []
    else:
        reduced, pivots = row_reduce(m.array, p)
    free_columns = [col for col in range(m.cols) if col not in pivots]
    basis = []
    for free in free_columns:
        vector = [0] * m.cols
        vector[free] = 1
        for pivot_row, pivot_col in enumerate(pivots):
            vector[pivot_col] = (-int(reduced[pivot_row, free])) % p
        lead = next(value for value in vector if value)
        scale = pow(lead, -1, p)
        basis.append(tuple((value * scale) % p for value in vector))
    return basis


def enumerate_vectors(field: FieldPrime, length: int,
                      budget: int = DEFAULT_ENUMERATION_BUDGET) -> np.ndarray:
    """
    All q^length vectors over the field, one per row, in lexicographic order.

    Raises:
        UsageError: If q^length exceeds ``budget``
    """
    count = field.p ** length
    if count > budget:
        raise UsageError(
            f"Enumerating {field.p}^{length} = {count} vectors exceeds the budget of {budget}"
        )
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((field.p,) * length, dtype=np.int64)
    return grid.reshape(length, -1).T.copy()
