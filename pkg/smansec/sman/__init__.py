"""
The SMAN model and its combinatorial conditions.

This package contains:
- Sman / SupportSets: the adjacency matrix and its row supports
- conditions: MDS, weak security (column and row form), block security
- parser: the text and JSON file formats
"""

from .conditions import (
    block_security_profile,
    check_block_security_condition,
    check_mds_condition,
    check_row_condition,
    check_support_union_bound,
    check_weak_security_condition,
    column_union,
)
from .network import Sman, SupportSets
from .parser import (
    load_sman,
    parse_sman,
    serialize_sman,
    sman_from_json,
    sman_to_dict,
    sman_to_json,
)

__all__ = [
    "Sman",
    "SupportSets",
    "block_security_profile",
    "check_block_security_condition",
    "check_mds_condition",
    "check_row_condition",
    "check_support_union_bound",
    "check_weak_security_condition",
    "column_union",
    "load_sman",
    "parse_sman",
    "serialize_sman",
    "sman_from_json",
    "sman_to_dict",
    "sman_to_json",
]
