"""
Argument parsing and rendering for the smansec command line.

Subcommands: verify, trim, construct, certify, simulate, cauchy. Each runs
once, prints its report (text or ``--json``) to stdout and returns the
report's exit code. Logging goes to stderr.
"""

import argparse
import logging
import sys
from typing import List, Optional, TextIO

from ..codegen.construct import DEFAULT_MAX_ATTEMPTS, DEFAULT_PRIME
from ..codegen.decoding import DEFAULT_DECODE_BUDGET
from ..oracle.entropy import DEFAULT_ORACLE_BUDGET
from ..util.rng import DEFAULT_SEED
from .report import RunReport
from .runner import METHODS, CommandRunner

log = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smansec",
        description="Weak security and MDS coding on simple multiple access networks",
    )
    parser.add_argument("--json", action="store_true", help="Print the report as JSON")
    parser.add_argument("--output", type=str, help="Write the emitted matrix to this file")
    parser.add_argument("--verbose", action="store_true", help="Log debug detail to stderr")
    parser.add_argument("--version", action="version", version="smansec 1.0.0")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Check the MDS and Weak Security Conditions")
    verify.add_argument("path", help="SMAN file (text or JSON)")
    verify.add_argument("--method", choices=METHODS, default="both")

    trim = commands.add_parser("trim", help="Remove links down to n-k+2 per source")
    trim.add_argument("path", help="SMAN file (text or JSON)")
    trim.add_argument("--method", choices=("flow", "brute"), default="flow")
    trim.add_argument("--audit", action="store_true",
                      help="Re-check every intermediate matrix by brute force")

    construct = commands.add_parser("construct", help="Build a weakly secure MDS encoding matrix")
    construct.add_argument("path", help="SMAN file (text or JSON)")
    construct.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    construct.add_argument("--seed", type=int, default=DEFAULT_SEED)
    construct.add_argument("--attempts", type=int, default=DEFAULT_MAX_ATTEMPTS)

    certify = commands.add_parser("certify", help="Verify a code algebraically and by enumeration")
    certify.add_argument("path", help="Code file (text or JSON)")
    certify.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET)

    simulate = commands.add_parser("simulate", help="Decode randomly corrupted codewords")
    simulate.add_argument("path", help="Code file (text or JSON)")
    simulate.add_argument("--errors", type=int, default=1)
    simulate.add_argument("--trials", type=int, default=100)
    simulate.add_argument("--seed", type=int, default=DEFAULT_SEED)
    simulate.add_argument("--budget", type=int, default=DEFAULT_DECODE_BUDGET)

    cauchy = commands.add_parser("cauchy", help="Emit the Cauchy code on the all-ones SMAN")
    cauchy.add_argument("k", type=int)
    cauchy.add_argument("n", type=int)
    cauchy.add_argument("--prime", type=int, default=DEFAULT_PRIME)

    return parser


def command_arguments(args: argparse.Namespace) -> dict:
    """Keyword arguments of the runner method for ``args.command``."""
    if args.command == "verify":
        return {"path": args.path, "method": args.method}
    if args.command == "trim":
        return {"path": args.path, "method": args.method, "audit": args.audit}
    if args.command == "construct":
        return {"path": args.path, "prime": args.prime, "seed": args.seed,
                "attempts": args.attempts}
    if args.command == "certify":
        return {"path": args.path, "oracle_budget": args.oracle_budget}
    if args.command == "simulate":
        return {"path": args.path, "errors": args.errors, "trials": args.trials,
                "seed": args.seed, "budget": args.budget}
    return {"k": args.k, "n": args.n, "prime": args.prime}


def _flag(value: bool) -> str:
    return "holds" if value else "fails"


def render_text(report: RunReport) -> str:
    """Human-readable form of a report."""
    lines = []
    if not report.success:
        lines.append(f"Error: {report.error}")
        if report.witness:
            for key, members in report.witness.items():
                lines.append(f"Witness {key}: {{{', '.join(map(str, members))}}}")
        lines.append(f"Exit code: {report.exit_code}")
        return "\n".join(lines) + "\n"

    result = report.result
    for key in ("mds", "weak_security_brute", "row_condition", "weak_security_flow"):
        if key in result and isinstance(result[key], dict):
            entry = result[key]
            text = _flag(entry["holds"])
            if entry.get("witness"):
                text += f" ({entry['witness_kind']} {{{', '.join(map(str, entry['witness']))}}})"
            lines.append(f"{key}: {text}")
    for key in ("mds", "weak_security", "weak_security_exact"):
        if isinstance(result.get(key), bool):
            lines.append(f"{key}: {_flag(result[key])}")
    for key in ("attempts", "verifier_calls", "backtracks",
                "recovered", "ambiguous", "wrong", "success_rate"):
        if key in result:
            lines.append(f"{key}: {result[key]}")
    if report.profile is not None:
        lines.append(f"profile: ({', '.join(map(str, report.profile))})")
    if result.get("removal_log"):
        lines.append(result["removal_log"].rstrip("\n"))
    if report.matrix:
        lines.append(report.matrix.rstrip("\n"))
    return "\n".join(lines) + "\n"


def main(argv: Optional[List[str]] = None, stdout: TextIO = None) -> int:
    """
    Run one command and print its report.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]
        stdout: Stream for the report; defaults to sys.stdout

    Returns:
        The report's exit code
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    report = CommandRunner(["smansec"] + argv).execute(args.command, **command_arguments(args))

    if args.output and report.matrix is not None:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(report.matrix)
        log.info("Wrote %s", args.output)

    stdout.write(report.to_json() + "\n" if args.json else render_text(report))
    return report.exit_code
