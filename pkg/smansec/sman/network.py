"""
The simple multiple access network model.

A SMAN is a k x n 0/1 adjacency matrix: row i lists the relays source i
reaches, column j the sources relay j hears. Rows and columns are stored
bit-packed in Python integers (bit j of a row is relay j, bit i of a
column is source i) so unions are ``|`` and cardinalities ``bit_count``.
Indices are 0-based throughout.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from ..errors import UsageError


def mask_members(mask: int) -> Tuple[int, ...]:
    """Set bits of ``mask`` in increasing order."""
    members = []
    index = 0
    while mask:
        if mask & 1:
            members.append(index)
        mask >>= 1
        index += 1
    return tuple(members)


def members_mask(members: Iterable[int]) -> int:
    mask = 0
    for member in members:
        mask |= 1 << member
    return mask


@dataclass(frozen=True)
class Sman:
    """
    An (n, k)-SMAN given by its adjacency matrix.

    Rows are bitmasks over relays. Instances are immutable; link updates
    return new instances.
    """
    k: int
    n: int
    rows: Tuple[int, ...]
    columns: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.k < 1:
            raise UsageError(f"A SMAN needs at least one source, got k={self.k}")
        if self.n < self.k:
            raise UsageError(f"A SMAN needs n >= k, got n={self.n}, k={self.k}")
        if len(self.rows) != self.k:
            raise UsageError(f"Expected {self.k} rows, got {len(self.rows)}")
        limit = 1 << self.n
        for index, row in enumerate(self.rows):
            if not 0 <= row < limit:
                raise UsageError(f"Row {index} addresses relays outside [0, {self.n})")
        columns = tuple(
            members_mask(i for i in range(self.k) if self.rows[i] >> j & 1)
            for j in range(self.n)
        )
        object.__setattr__(self, "columns", columns)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Sman":
        """
        Build a SMAN from nested 0/1 row lists.

        Raises:
            UsageError: If the rows are ragged or contain entries other than 0/1
        """
        rows = [list(row) for row in rows]
        if not rows:
            raise UsageError("A SMAN needs at least one source row")
        n = len(rows[0])
        masks = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise UsageError(f"Row {i} has {len(row)} entries, expected {n}")
            for j, entry in enumerate(row):
                if entry not in (0, 1):
                    raise UsageError(f"Entry ({i}, {j}) is {entry!r}, expected 0 or 1")
            masks.append(members_mask(j for j, entry in enumerate(row) if entry))
        return cls(k=len(rows), n=n, rows=tuple(masks))

    @classmethod
    def from_supports(cls, n: int, supports: Sequence[Iterable[int]]) -> "Sman":
        """Build a SMAN from the row supports R_i."""
        return cls(k=len(supports), n=n, rows=tuple(members_mask(r) for r in supports))

    @classmethod
    def all_ones(cls, k: int, n: int) -> "Sman":
        """The densest SMAN: every source reaches every relay."""
        return cls(k=k, n=n, rows=((1 << n) - 1,) * k)

    def entry(self, i: int, j: int) -> int:
        self._check_link(i, j)
        return self.rows[i] >> j & 1

    def to_rows(self) -> List[List[int]]:
        return [[self.rows[i] >> j & 1 for j in range(self.n)] for i in range(self.k)]

    def row_support(self, i: int) -> FrozenSet[int]:
        """R_i, the relays source ``i`` reaches."""
        self._check_source(i)
        return frozenset(mask_members(self.rows[i]))

    def column_support(self, j: int) -> FrozenSet[int]:
        """Sources relay ``j`` hears."""
        self._check_relay(j)
        return frozenset(mask_members(self.columns[j]))

    def row_sizes(self) -> Tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def link_count(self) -> int:
        return sum(self.row_sizes())

    def links(self) -> List[Tuple[int, int]]:
        """All (source, relay) links in row-major order."""
        return [(i, j) for i in range(self.k) for j in mask_members(self.rows[i])]

    def support_sets(self) -> "SupportSets":
        return SupportSets.from_sman(self)

    def with_link(self, i: int, j: int) -> "Sman":
        self._check_link(i, j)
        rows = list(self.rows)
        rows[i] |= 1 << j
        return Sman(k=self.k, n=self.n, rows=tuple(rows))

    def without_link(self, i: int, j: int) -> "Sman":
        self._check_link(i, j)
        rows = list(self.rows)
        rows[i] &= ~(1 << j)
        return Sman(k=self.k, n=self.n, rows=tuple(rows))

    def is_subgraph_of(self, other: "Sman") -> bool:
        """Whether every link of this SMAN is also a link of ``other``."""
        if (self.k, self.n) != (other.k, other.n):
            return False
        return all(mine & ~theirs == 0 for mine, theirs in zip(self.rows, other.rows))

    def _check_source(self, i: int) -> None:
        if not 0 <= i < self.k:
            raise UsageError(f"Source index {i} outside [0, {self.k})")

    def _check_relay(self, j: int) -> None:
        if not 0 <= j < self.n:
            raise UsageError(f"Relay index {j} outside [0, {self.n})")

    def _check_link(self, i: int, j: int) -> None:
        self._check_source(i)
        self._check_relay(j)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(bit) for bit in row) for row in self.to_rows())


@dataclass(frozen=True)
class SupportSets:
    """The row supports R_i = supp(M_i) of a SMAN."""
    sets: Tuple[FrozenSet[int], ...]

    @classmethod
    def from_sman(cls, sman: Sman) -> "SupportSets":
        return cls(sets=tuple(frozenset(mask_members(row)) for row in sman.rows))

    def __getitem__(self, i: int) -> FrozenSet[int]:
        return self.sets[i]

    def __len__(self) -> int:
        return len(self.sets)

    def union(self, sources: Iterable[int]) -> FrozenSet[int]:
        result: FrozenSet[int] = frozenset()
        for i in sources:
            result |= self.sets[i]
        return result
