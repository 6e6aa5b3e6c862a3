"""
Main entry point for smansec.

Run as ``python -m smansec.main <command> ...``; see ``--help`` for the
subcommands.
"""

import sys

from .cli.shell import main


if __name__ == "__main__":
    sys.exit(main())
