"""
Weak security on simple multiple access networks.

A library and command line that decide whether a two-hop network of k
sources and n relays admits a weakly secure MDS code, trim it to the
sparsest such topology, construct a concrete code over a prime field and
certify it by exhaustive enumeration.
"""

__version__ = "1.0.0"

from .errors import (
    AmbiguousDecodeError,
    ConsistencyError,
    FieldDomainError,
    InfeasibleError,
    ParseError,
    RetryExhaustedError,
    SmanError,
    UsageError,
)
from .sman.network import Sman
from .types.verdict import SecurityProfile, Verdict, WitnessKind

__all__ = [
    "AmbiguousDecodeError",
    "ConsistencyError",
    "FieldDomainError",
    "InfeasibleError",
    "ParseError",
    "RetryExhaustedError",
    "SecurityProfile",
    "Sman",
    "SmanError",
    "UsageError",
    "Verdict",
    "WitnessKind",
]
