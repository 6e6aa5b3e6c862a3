"""
Run reports.

A RunReport is what every command produces: a fixed set of top-level keys
so scripts can diff runs. Re-running a command with the same inputs and
seed reproduces the JSON byte-for-byte apart from ``wall_time``.
"""

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


@dataclass
class RunReport:
    """Outcome of one command."""
    command: List[str]
    input_sha256: Optional[str] = None
    success: bool = True
    exit_code: int = 0
    result: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None
    matrix: Optional[str] = None
    profile: Optional[List[int]] = None
    seed: Optional[int] = None
    error: Optional[str] = None
    wall_time: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "input_sha256": self.input_sha256,
            "success": self.success,
            "exit_code": self.exit_code,
            "result": self.result,
            "witness": self.witness,
            "matrix": self.matrix,
            "profile": self.profile,
            "seed": self.seed,
            "error": self.error,
            "wall_time": round(self.wall_time, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)
