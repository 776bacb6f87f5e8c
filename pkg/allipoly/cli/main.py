"""
Command-line entry point.

Usage:
    allipoly compute --input graph.txt [--json] [--eval 1/2] [--threads 4]
    allipoly family path --n 4 [--brute-force]
    allipoly verify --input graph.txt
    allipoly census --max-n 6 --out catalog.jsonl
    allipoly compare g1.txt g2.txt --polys tutte,alliance
    allipoly compare --suite

Exit codes: 0 success, 1 input error or failed verification, 2 guard exceeded.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO
from dotenv import load_dotenv
from pydantic import ValidationError

from allipoly.cli.commands import census, compare, compute, family, verify
from allipoly.core.config import settings
from allipoly.core.errors import AlliPolyError, GuardExceededError
from allipoly.core.log_setup import configure_logging
from allipoly.models.cli import CliConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_GUARD = 2

COMMANDS: Dict[str, Callable[[CliConfig, TextIO], int]] = {
    "compute": compute.run,
    "family": family.run,
    "verify": verify.run,
    "census": census.run,
    "compare": compare.run,
}


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=["edgelist", "graph6"], help="Input graph format (default edgelist)")
    common.add_argument("--json", dest="json_output", action="store_true", default=None, help="Emit JSON")
    common.add_argument("--threads", type=int, help="Work partitions and worker processes")
    common.add_argument("--force", action="store_true", default=None, help="Override brute-force guards")
    common.add_argument("--log-level", dest="log_level", help="Log level (default from ALLIPOLY_LOG_LEVEL)")
    common.add_argument("-v", "--verbose", action="store_true", default=False, help="Debug logging")

    parser = argparse.ArgumentParser(prog="allipoly", description="Alliance polynomials of small graphs")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("compute", parents=[common], help="Compute A(G;x) by enumeration")
    p.add_argument("--input", dest="inputs", action="append", help="Graph file ('-' for standard input)")
    p.add_argument("--eval", dest="eval_point", help="Also evaluate at a rational point (p/q or integer)")

    p = subparsers.add_parser("family", parents=[common], help="Closed-form polynomial of a named family")
    p.add_argument("family", help="path, cycle, complete, empty, star, complete-bipartite, complete-minus-edge")
    p.add_argument("--n", type=int, required=True, help="Order (first part for complete-bipartite)")
    p.add_argument("--m", type=int, help="Second part for complete-bipartite")
    p.add_argument("--brute-force", dest="brute_force", action="store_true", default=None, help="Cross-check by enumeration")

    p = subparsers.add_parser("verify", parents=[common], help="Run the structural invariant report")
    p.add_argument("--input", dest="inputs", action="append", help="Graph file ('-' for standard input)")
    p.add_argument("--polynomial", dest="polynomial_path", help=argparse.SUPPRESS)

    p = subparsers.add_parser("census", parents=[common], help="Exhaustive catalog with collision summary")
    p.add_argument("--max-n", dest="max_n", type=int, required=True, help="Largest order")
    p.add_argument("--out", help="JSON-lines catalog path (default catalog.jsonl)")

    p = subparsers.add_parser("compare", parents=[common], help="Compare two graphs under several polynomials")
    p.add_argument("inputs", nargs="*", help="Two graph files")
    p.add_argument("--polys", default="alliance", help="Comma-separated polynomial names")
    p.add_argument("--suite", action="store_true", default=None, help="Run the built-in distinguishing pairs")

    return parser


def main(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    load_dotenv()
    args = build_parser().parse_args(argv)
    verbose = args.__dict__.pop("verbose", False)
    if args.log_level is None:
        args.log_level = "DEBUG" if verbose else settings.log_level
    if args.threads is None:
        args.threads = settings.default_threads
    configure_logging(args.log_level)

    stream = out if out is not None else sys.stdout
    try:
        config = CliConfig.from_namespace(args)
        return COMMANDS[config.command](config, stream)
    except GuardExceededError as e:
        logger.error(f"Guard exceeded: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD
    except AlliPolyError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValidationError as e:
        message = "; ".join(error["msg"] for error in e.errors())
        logger.error(f"Invalid options: {message}")
        print(f"error: {message}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
