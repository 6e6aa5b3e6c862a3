"""
Immutable matrices over GF(p).

Entries live in a read-only ``numpy`` int64 array holding residues in
[0, p). With p < 2^31 the product of two residues stays below 2^62, so
reducing after every product never overflows.
"""

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from ..errors import UsageError
from .field import FieldElement, FieldPrime


def _frozen(data: np.ndarray) -> np.ndarray:
    data.setflags(write=False)
    return data


class FieldMatrix:
    """
    A rows x cols matrix over a prime field.

    Instances never change after construction; every operation that would
    modify a matrix returns a new one.
    """

    __slots__ = ("field", "_data")

    def __init__(self, field: FieldPrime, data):
        array = np.array(data, dtype=np.int64, copy=True)
        if array.ndim != 2:
            raise UsageError(f"Field matrix must be two-dimensional, got shape {array.shape}")
        self.field = field
        self._data = _frozen(array % field.p)

    @classmethod
    def from_rows(cls, field: FieldPrime, rows: Sequence[Sequence[int]], cols: int = None) -> "FieldMatrix":
        """
        Build a matrix from nested row lists.

        Args:
            field: The field the entries live in
            rows: Row lists of integers (reduced mod p)
            cols: Column count, required only when ``rows`` is empty

        Raises:
            UsageError: If rows have different lengths
        """
        rows = [list(row) for row in rows]
        if not rows:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        width = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != width:
                raise UsageError(f"Row {index} has {len(row)} entries, expected {width}")
        return cls(field, np.array(rows, dtype=np.int64).reshape(len(rows), width))

    @classmethod
    def zeros(cls, field: FieldPrime, rows: int, cols: int) -> "FieldMatrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldPrime, size: int) -> "FieldMatrix":
        return cls(field, np.eye(size, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the residues."""
        return self._data

    def entries(self) -> List[int]:
        """Row-major residues."""
        return [int(value) for value in self._data.ravel()]

    def to_rows(self) -> List[List[int]]:
        return [[int(value) for value in row] for row in self._data]

    def __getitem__(self, position: Tuple[int, int]) -> FieldElement:
        row, col = position
        return FieldElement(int(self._data[row, col]), self.field)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self._data.T)

    @property
    def T(self) -> "FieldMatrix":
        return self.transpose()

    def select_columns(self, indices: Iterable[int]) -> "FieldMatrix":
        indices = list(indices)
        self._check_indices(indices, self.cols, "column")
        return FieldMatrix(self.field, self._data[:, indices].reshape(self.rows, len(indices)))

    def select_rows(self, indices: Iterable[int]) -> "FieldMatrix":
        indices = list(indices)
        self._check_indices(indices, self.rows, "row")
        return FieldMatrix(self.field, self._data[indices, :].reshape(len(indices), self.cols))

    def stack(self, other: "FieldMatrix") -> "FieldMatrix":
        """This matrix with ``other``'s rows appended below."""
        self._check_field(other)
        if other.cols != self.cols:
            raise UsageError(f"Cannot stack {other.cols} columns under {self.cols}")
        return FieldMatrix(self.field, np.vstack([self._data, other._data]))

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise UsageError(f"Shape mismatch: {self.shape} @ {other.shape}")
        return FieldMatrix(self.field, mod_matmul(self._data, other._data, self.field.p))

    def support(self) -> np.ndarray:
        """Boolean mask of the nonzero entries."""
        return self._data != 0

    def _check_field(self, other: "FieldMatrix") -> None:
        if other.field != self.field:
            raise UsageError(f"Field mismatch: {self.field} and {other.field}")

    @staticmethod
    def _check_indices(indices: List[int], bound: int, what: str) -> None:
        for index in indices:
            if not 0 <= index < bound:
                raise UsageError(f"{what.capitalize()} index {index} outside [0, {bound})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.field == other.field and np.array_equal(self._data, other._data)

    def __hash__(self) -> int:
        return hash((self.field, self.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"FieldMatrix({self.field}, {self.to_rows()!r})"


def mod_matmul(left: np.ndarray, right: np.ndarray, p: int) -> np.ndarray:
    """
    Product of two residue arrays reduced mod p.

    Accumulates one inner index at a time so partial sums stay below 2^63.
    """
    result = np.zeros((left.shape[0], right.shape[1]), dtype=np.int64)
    for inner in range(left.shape[1]):
        result = (result + np.outer(left[:, inner], right[inner, :]) % p) % p
    return result
