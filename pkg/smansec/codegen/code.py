"""
Encoding matrices and their algebraic security checks.

An encoding matrix G is k x n over GF(p); relay j transmits x G[j], so
G may only be nonzero where the SMAN has a link. G gives an MDS scheme
when every k columns are independent, and a weakly secure one when no
k-1 columns let an eavesdropper isolate a single source packet, i.e. the
rows of every transposed submatrix transpose(G[E]), |E| = k-1, span no
weight-1 vector.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence, Tuple, Union

import numpy as np

from ..errors import UsageError
from ..gf.field import FieldElement, FieldPrime
from ..gf.linalg import determinant, rank, row_space_contains
from ..gf.matrix import FieldMatrix
from ..sman.network import Sman


def support_of(matrix: FieldMatrix) -> Sman:
    """The 0/1 support pattern of a matrix, as a SMAN."""
    return Sman.from_rows(matrix.support().astype(int).tolist())


@dataclass(frozen=True)
class EncodingMatrix:
    """
    A k x n encoding matrix serving a SMAN.

    Invariants: zero wherever the SMAN has no link, and rank k.
    """
    matrix: FieldMatrix
    sman: Sman

    def __post_init__(self):
        if self.matrix.shape != (self.sman.k, self.sman.n):
            raise UsageError(
                f"Matrix shape {self.matrix.shape} does not match SMAN {self.sman.k}x{self.sman.n}"
            )
        allowed = np.array(self.sman.to_rows(), dtype=bool)
        if np.any(self.matrix.support() & ~allowed):
            raise UsageError("Encoding matrix is nonzero where the SMAN has no link")
        if rank(self.matrix) != self.sman.k:
            raise UsageError(f"Encoding matrix must have rank k = {self.sman.k}")

    @classmethod
    def from_matrix(cls, matrix: FieldMatrix) -> "EncodingMatrix":
        """Wrap a matrix, taking its own support as the SMAN."""
        return cls(matrix=matrix, sman=support_of(matrix))

    @classmethod
    def from_rows(cls, field: FieldPrime, rows: Sequence[Sequence[int]]) -> "EncodingMatrix":
        return cls.from_matrix(FieldMatrix.from_rows(field, rows))

    @property
    def field(self) -> FieldPrime:
        return self.matrix.field

    @property
    def k(self) -> int:
        return self.matrix.rows

    @property
    def n(self) -> int:
        return self.matrix.cols


CodeLike = Union[EncodingMatrix, FieldMatrix]


def as_matrix(g: CodeLike) -> FieldMatrix:
    return g.matrix if isinstance(g, EncodingMatrix) else g


@dataclass(frozen=True)
class Message:
    """Source packets (x_1, ..., x_k) as residues."""
    values: Tuple[int, ...]
    field: FieldPrime

    def __post_init__(self):
        for value in self.values:
            if not 0 <= value < self.field.p:
                raise UsageError(f"Residue {value} outside [0, {self.field.p})")

    @classmethod
    def of(cls, field: FieldPrime, values: Sequence[Union[int, FieldElement]]) -> "Message":
        return cls(tuple(int(value) % field.p for value in values), field)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Codeword:
    """Relay transmissions (x G[1], ..., x G[n]) as residues."""
    values: Tuple[int, ...]
    field: FieldPrime

    def __post_init__(self):
        for value in self.values:
            if not 0 <= value < self.field.p:
                raise UsageError(f"Residue {value} outside [0, {self.field.p})")

    @classmethod
    def of(cls, field: FieldPrime, values: Sequence[Union[int, FieldElement]]) -> "Codeword":
        return cls(tuple(int(value) % field.p for value in values), field)

    def __len__(self) -> int:
        return len(self.values)


def verify_mds_code(g: CodeLike) -> bool:
    """Whether every k columns of G have rank k."""
    m = as_matrix(g)
    k, n = m.shape
    if n < k:
        return False
    return all(rank(m.select_columns(E)) == k for E in combinations(range(n), k))


def transposed_submatrices(g: CodeLike) -> Iterator[Tuple[Tuple[int, ...], FieldMatrix]]:
    """
    Yield (E, transpose(G[E])) for every E of k-1 columns, lexicographically.

    When n < k-1 the single E covering all columns is yielded.
    """
    m = as_matrix(g)
    k, n = m.shape
    for E in combinations(range(n), min(k - 1, n)):
        yield E, m.select_columns(E).transpose()


def _unit_vector(length: int, index: int) -> list:
    vector = [0] * length
    vector[index] = 1
    return vector


def verify_weak_security_code(g: CodeLike) -> bool:
    """
    Whether no k-1 relays reveal any single source packet.

    For every transposed submatrix A, no unit vector e_i lies in the row
    space of A. This stays correct when A is rank-deficient.
    """
    m = as_matrix(g)
    k = m.rows
    if k == 1:
        return True
    for _, A in transposed_submatrices(m):
        for i in range(k):
            if row_space_contains(A, _unit_vector(k, i)):
                return False
    return True


def verify_weak_security_minors(g: CodeLike) -> bool:
    """
    Whether every order-(k-1) minor of every transposed submatrix is nonzero.

    Agrees with verify_weak_security_code on MDS matrices and is stricter
    on matrices with dependent column sets.
    """
    m = as_matrix(g)
    k = m.rows
    if k == 1:
        return True
    if m.cols < k - 1:
        return False
    for _, A in transposed_submatrices(m):
        for dropped in range(k):
            kept = [col for col in range(k) if col != dropped]
            if not determinant(A.select_columns(kept)):
                return False
    return True
