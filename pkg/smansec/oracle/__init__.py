"""
Exhaustive entropy oracle.

- conditional_entropy: exact H(X_B | Y_E) in q-ary units
- check_weak_security_exact / check_block_security_exact: security by enumeration
- entropy_table: per-subset entropies reported by certify
- independence_rank_criterion: the linear-algebra shortcut for larger fields
"""

from .entropy import (
    DEFAULT_ORACLE_BUDGET,
    EntropyOracle,
    EntropyValue,
    block_security_level_by_rank,
    block_security_level_of_code,
    check_block_security_exact,
    check_weak_security_exact,
    check_weak_security_exact_all_sizes,
    conditional_entropy,
    entropy_table,
    independence_rank_criterion,
)

__all__ = [
    "DEFAULT_ORACLE_BUDGET",
    "EntropyOracle",
    "EntropyValue",
    "block_security_level_by_rank",
    "block_security_level_of_code",
    "check_block_security_exact",
    "check_weak_security_exact",
    "check_weak_security_exact_all_sizes",
    "conditional_entropy",
    "entropy_table",
    "independence_rank_criterion",
]
