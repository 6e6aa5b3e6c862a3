"""
Sparsification of weakly securable SMANs.

- trim: remove links until each source reaches n - k + 2 relays
- trim_step: one tentative removal with its verdict
"""

from .trimmer import TrimResult, TrimStep, target_degree, trim, trim_step

__all__ = [
    "TrimResult",
    "TrimStep",
    "target_degree",
    "trim",
    "trim_step",
]
