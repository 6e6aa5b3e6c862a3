"""
Verdict and security-profile value types.

These are the results every condition checker hands back: a holds/fails
flag with a witness subset on failure, and the vector of block-security
levels of a topology. Indices inside witnesses are 0-based; reports shift
them to 1-based for display.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, Optional, Tuple


class WitnessKind(Enum):
    """What a witness subset indexes."""
    RELAY_SET = "relay-set"
    SOURCE_SET = "source-set"
    NONE = "none"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a condition check."""
    holds: bool
    witness: Optional[Tuple[int, ...]] = None
    witness_kind: WitnessKind = WitnessKind.NONE

    def __post_init__(self):
        if self.holds:
            if self.witness is not None or self.witness_kind != WitnessKind.NONE:
                raise ValueError("A holding verdict cannot carry a witness")
        else:
            if self.witness is None or self.witness_kind == WitnessKind.NONE:
                raise ValueError("A failing verdict must carry a witness")
            if list(self.witness) != sorted(set(self.witness)):
                raise ValueError(f"Witness must be strictly increasing: {self.witness}")

    @classmethod
    def passed(cls) -> "Verdict":
        return cls(holds=True)

    @classmethod
    def failed(cls, witness: Iterable[int], kind: WitnessKind) -> "Verdict":
        return cls(holds=False, witness=tuple(sorted(witness)), witness_kind=kind)

    def display_witness(self) -> Optional[list]:
        """Witness as 1-based indices, or None."""
        if self.witness is None:
            return None
        return [index + 1 for index in self.witness]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "witness": self.display_witness(),
            "witness_kind": self.witness_kind.value,
        }

    def __str__(self) -> str:
        if self.holds:
            return "holds"
        members = ",".join(str(index) for index in self.display_witness())
        return f"fails ({self.witness_kind.value} {{{members}}})"


@dataclass(frozen=True)
class SecurityProfile:
    """
    Block-security levels (b_1, ..., b_{k-1}).

    ``levels[ell - 1]`` is the largest block size that stays hidden from an
    eavesdropper observing any ``ell`` relays.
    """
    levels: Tuple[int, ...]

    def __post_init__(self):
        for ell, level in enumerate(self.levels, start=1):
            if level < 0:
                raise ValueError(f"Negative block-security level at strength {ell}")
        for previous, current in zip(self.levels, self.levels[1:]):
            if current > previous:
                raise ValueError(f"Block-security levels must be non-increasing: {self.levels}")

    def level(self, ell: int) -> int:
        """Level at eavesdropping strength ``ell`` (1-based)."""
        if not 1 <= ell <= len(self.levels):
            raise ValueError(f"Strength {ell} outside 1..{len(self.levels)}")
        return self.levels[ell - 1]

    def is_weakly_secure(self) -> bool:
        return all(level >= 1 for level in self.levels)

    def to_list(self) -> list:
        return list(self.levels)
