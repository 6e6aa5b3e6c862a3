"""
Max-flow verification of the Weak Security Condition.

This package contains:
- FlowNetwork / build_flow_network: the per-excluded-source networks
- max_flow: Edmonds-Karp shortest augmenting paths
- check_min_cut_condition: the polynomial-time verifier
"""

from .maxflow import FlowResult, max_flow
from .network import Arc, FlowNetwork, build_flow_network, dump_flow_network
from .verifier import MinCutVerdict, check_min_cut_condition

__all__ = [
    "Arc",
    "FlowNetwork",
    "FlowResult",
    "MinCutVerdict",
    "build_flow_network",
    "check_min_cut_condition",
    "dump_flow_network",
    "max_flow",
]
