"""
Shared value types for smansec.

This package contains the result types handed between layers:
- Verdict: holds/fails with a witness subset
- WitnessKind: what a witness indexes (relays or sources)
- SecurityProfile: block-security levels per eavesdropping strength
"""

from .verdict import SecurityProfile, Verdict, WitnessKind

__all__ = [
    "SecurityProfile",
    "Verdict",
    "WitnessKind",
]
