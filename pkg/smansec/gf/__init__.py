"""
Finite-field substrate for smansec.

This package contains exact arithmetic over prime fields:
- FieldPrime / FieldElement: GF(p) and its residues
- FieldMatrix: immutable matrices over GF(p)
- rank, determinant, row_space_contains, nullspace_basis: row reduction
"""

from .field import FieldElement, FieldPrime
from .linalg import (
    DEFAULT_ENUMERATION_BUDGET,
    determinant,
    enumerate_vectors,
    nullspace_basis,
    rank,
    row_reduce,
    row_space_contains,
)
from .matrix import FieldMatrix, mod_matmul

__all__ = [
    "DEFAULT_ENUMERATION_BUDGET",
    "FieldElement",
    "FieldMatrix",
    "FieldPrime",
    "determinant",
    "enumerate_vectors",
    "mod_matmul",
    "nullspace_basis",
    "rank",
    "row_reduce",
    "row_space_contains",
]
