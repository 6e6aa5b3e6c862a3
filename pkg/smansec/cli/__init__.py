"""
Command-line surface for smansec.

- CommandRunner: runs one pipeline stage and returns a RunReport
- RunReport: the fixed-schema outcome of a command
- main: argparse front end
"""

from .report import RunReport, sha256_hex
from .runner import COMMANDS, METHODS, CommandRunner
from .shell import build_parser, main, render_text

__all__ = [
    "COMMANDS",
    "METHODS",
    "CommandRunner",
    "RunReport",
    "build_parser",
    "main",
    "render_text",
    "sha256_hex",
]
