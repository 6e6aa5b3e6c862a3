"""
Exact information-theoretic security checks by exhaustive enumeration.

All q^k messages are equiprobable. For a linear observation every
distribution that arises is uniform over a coset, so entropies are whole
multiples of log q; values are kept as exact integers in those q-ary
units and any departure from uniformity is treated as a bug.

Security only needs checking against maximal observation sets: what a
smaller set of relays sees is a function of what a larger set sees, and
conditioning on a function of an observation reveals no more.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from ..errors import ConsistencyError, UsageError
from ..gf.linalg import DEFAULT_ENUMERATION_BUDGET, enumerate_vectors, rank
from ..gf.matrix import FieldMatrix, mod_matmul
from ..codegen.code import CodeLike, as_matrix

log = logging.getLogger(__name__)

DEFAULT_ORACLE_BUDGET = DEFAULT_ENUMERATION_BUDGET


@dataclass(frozen=True)
class EntropyValue:
    """Entropy in units of log q."""
    q_ary_units: int

    def __post_init__(self):
        if self.q_ary_units < 0:
            raise ConsistencyError(f"Negative entropy {self.q_ary_units}")

    def __int__(self) -> int:
        return self.q_ary_units


def _check_subset(indices: Iterable[int], bound: int, what: str) -> Tuple[int, ...]:
    indices = tuple(sorted(set(indices)))
    for index in indices:
        if not 0 <= index < bound:
            raise UsageError(f"{what} index {index} outside [0, {bound})")
    return indices


def independence_rank_criterion(g: CodeLike, B: Iterable[int], E: Iterable[int]) -> bool:
    """
    Whether observing relays ``E`` leaves sources ``B`` jointly hidden.

    True iff appending the unit rows e_j (j in B) to transpose(G[E])
    raises its rank by exactly |B|.
    """
    m = as_matrix(g)
    B = _check_subset(B, m.rows, "Source")
    E = _check_subset(E, m.cols, "Relay")
    observed = m.select_columns(E).transpose()
    units = FieldMatrix.from_rows(
        m.field, [[int(col == j) for col in range(m.rows)] for j in B], cols=m.rows
    )
    return rank(observed.stack(units)) == rank(observed) + len(B)


class EntropyOracle:
    """
    Conditional entropies of one code, computed over every message.

    The message table and all codewords are tabulated once at construction.
    """

    def __init__(self, g: CodeLike, budget: int = DEFAULT_ORACLE_BUDGET):
        """
        Raises:
            UsageError: If q^k exceeds ``budget``
        """
        self.matrix = as_matrix(g)
        self.field = self.matrix.field
        self.k, self.n = self.matrix.shape
        self.messages = enumerate_vectors(self.field, self.k, budget)
        self.codewords = mod_matmul(self.messages, self.matrix.array, self.field.p)

    def _units(self, columns: np.ndarray) -> int:
        """log_q of the support size of a uniform joint distribution."""
        if columns.shape[1] == 0:
            return 0
        _, counts = np.unique(columns, axis=0, return_counts=True)
        if np.any(counts != counts[0]):
            raise ConsistencyError("Observation distribution is not uniform over its support")
        support = len(counts)
        units = 0
        size = 1
        while size < support:
            size *= self.field.p
            units += 1
        if size != support:
            raise ConsistencyError(
                f"Support size {support} is not a power of q = {self.field.p}"
            )
        return units

    def conditional_entropy(self, B: Iterable[int], E: Iterable[int]) -> EntropyValue:
        """
        H(X_B | Y_E) in q-ary units.

        Cross-checked against the rank of the linear map x -> (x_B, x G[E]).

        Raises:
            ConsistencyError: If the tabulated value is not integral or
                disagrees with the rank computation
        """
        B = _check_subset(B, self.k, "Source")
        E = _check_subset(E, self.n, "Relay")
        targets = self.messages[:, list(B)]
        observed = self.codewords[:, list(E)]
        joint = self._units(np.hstack([targets, observed]))
        marginal = self._units(observed)
        value = joint - marginal

        selected = self.matrix.select_columns(E)
        units = FieldMatrix.from_rows(
            self.field, [[int(row == j) for j in B] for row in range(self.k)], cols=len(B)
        )
        combined = FieldMatrix(self.field, np.hstack([units.array, selected.array]))
        shortcut = rank(combined) - rank(selected)
        if value != shortcut:
            raise ConsistencyError(
                f"Tabulated H(X_B|Y_E) = {value} but the rank shortcut gives {shortcut} "
                f"for B={list(B)}, E={list(E)}"
            )
        return EntropyValue(value)

    def is_hidden(self, B: Sequence[int], E: Sequence[int]) -> bool:
        return self.conditional_entropy(B, E).q_ary_units == len(set(B))

    def observation_sets(self, size: int) -> Iterable[Tuple[int, ...]]:
        return combinations(range(self.n), min(size, self.n))

    def weakly_secure(self) -> bool:
        """Every single source stays hidden from every k-1 relays."""
        if self.k == 1:
            return True
        return all(
            self.is_hidden((i,), E)
            for E in self.observation_sets(self.k - 1)
            for i in range(self.k)
        )

    def weakly_secure_all_sizes(self) -> bool:
        """weakly_secure without the maximal-set reduction."""
        return all(
            self.is_hidden((i,), E)
            for size in range(1, min(self.k - 1, self.n) + 1)
            for E in combinations(range(self.n), size)
            for i in range(self.k)
        )

    def block_secure(self, ell: int, b: int) -> bool:
        """Every b sources stay jointly hidden from every ``ell`` relays."""
        if not 1 <= ell <= self.k - 1:
            raise UsageError(f"Eavesdropping strength {ell} outside [1, {self.k - 1}]")
        if b <= 0:
            return True
        b = min(b, self.k)
        return all(
            self.is_hidden(B, E)
            for E in self.observation_sets(ell)
            for B in combinations(range(self.k), b)
        )

    def block_level(self, ell: int) -> int:
        """Largest b with block_secure(ell, b)."""
        level = 0
        while level < self.k and self.block_secure(ell, level + 1):
            level += 1
        return level

    def entropy_table(self, ell: int) -> List[Dict[str, object]]:
        """
        H(X_B | Y_E) for every |E| = ell and 1 <= |B| <= k - ell.

        Indices in the table are 1-based.
        """
        rows = []
        for E in self.observation_sets(ell):
            for size in range(1, self.k - ell + 1):
                for B in combinations(range(self.k), size):
                    rows.append({
                        "observed": [j + 1 for j in E],
                        "targets": [i + 1 for i in B],
                        "entropy": self.conditional_entropy(B, E).q_ary_units,
                    })
        return rows


def conditional_entropy(g: CodeLike, B: Iterable[int], E: Iterable[int],
                        budget: int = DEFAULT_ORACLE_BUDGET) -> EntropyValue:
    """H(X_B | Y_E) in q-ary units; see EntropyOracle."""
    return EntropyOracle(g, budget).conditional_entropy(B, E)


def entropy_table(g: CodeLike, ell: int,
                  budget: int = DEFAULT_ORACLE_BUDGET) -> List[Dict[str, object]]:
    return EntropyOracle(g, budget).entropy_table(ell)


def check_weak_security_exact(g: CodeLike, budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    """Exhaustive check that no k-1 relays reveal anything about any single source."""
    return EntropyOracle(g, budget).weakly_secure()


def check_weak_security_exact_all_sizes(g: CodeLike, budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    return EntropyOracle(g, budget).weakly_secure_all_sizes()


def check_block_security_exact(g: CodeLike, ell: int, b: int,
                               budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    """Exhaustive check of b-block security against ``ell`` relays."""
    return EntropyOracle(g, budget).block_secure(ell, b)


def block_security_level_of_code(g: CodeLike, ell: int,
                                 budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    """Largest b for which the code is b-block secure against ``ell`` relays."""
    oracle = EntropyOracle(g, budget)
    level = oracle.block_level(ell)
    log.debug("Block-security level at strength %d: %d", ell, level)
    return level


def block_security_level_by_rank(g: CodeLike, ell: int) -> int:
    """block_security_level_of_code computed with the rank criterion instead of enumeration."""
    m = as_matrix(g)
    k, n = m.shape
    if not 1 <= ell <= k - 1:
        raise UsageError(f"Eavesdropping strength {ell} outside [1, {k - 1}]")
    level = 0
    for b in range(1, k + 1):
        secure = all(
            independence_rank_criterion(m, B, E)
            for E in combinations(range(n), min(ell, n))
            for B in combinations(range(k), b)
        )
        if not secure:
            break
        level = b
    return level
