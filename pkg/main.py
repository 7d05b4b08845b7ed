"""
snc-toolkit - Main Entry Point

Command-line surface over the conjecture services. Machine-readable output
goes to standard output, diagnostics go to standard error.
"""

import argparse
import sys
from typing import List, Optional

from src.cli import cmd_blowup, cmd_check, cmd_farkas, cmd_matrix, cmd_sweep
from src.core.error_codes import EXIT_INPUT_ERROR
from src.core.exceptions import ApplicationException
from src.core.logfire_config import initialize_logfire
from src.core.logger import get_logger, setup_logging

logger = get_logger(__name__)

CONJECTURE_CHOICES = ["c1", "c2", "c3", "c4", "c5", "c6", "all"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snc-toolkit",
        description="Second-neighborhood conjecture toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  snc-toolkit check cycle3.txt --conjecture all --cross-check
  snc-toolkit matrix cycle3.txt --inverse
  snc-toolkit blowup path.txt --weights 2,1
  snc-toolkit sweep --n 4 --mode all --dedup --prune
  snc-toolkit farkas --matrix M.txt --rhs b.txt
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="Evaluate conjectures on one digraph")
    check.add_argument("path", help="Digraph file")
    check.add_argument(
        "--conjecture",
        choices=CONJECTURE_CHOICES,
        default="all",
        type=str.lower,
        help="Conjecture to check (default: all)",
    )
    check.add_argument(
        "--cross-check",
        action="store_true",
        help="Also check the relations between the six formulations",
    )
    check.add_argument(
        "--lp-c5",
        action="store_true",
        help="Cross-check C5 through the feasibility route (implies --cross-check)",
    )

    matrix = sub.add_parser("matrix", help="Print the second-neighborhood matrix")
    matrix.add_argument("path", help="Digraph file")
    matrix.add_argument(
        "--inverse",
        action="store_true",
        help="Print the inverse, or SINGULAR and a null vector",
    )

    blowup = sub.add_parser("blowup", help="Blow up each vertex into a class")
    blowup.add_argument("path", help="Digraph file")
    blowup.add_argument(
        "--weights", required=True, help="Comma-separated positive class sizes"
    )

    sweep = sub.add_parser("sweep", help="Run the suite over many digraphs")
    sweep.add_argument("--n", type=int, required=True, help="Number of vertices")
    sweep.add_argument(
        "--mode",
        choices=["all", "tournaments", "random"],
        default="all",
        help="Instance stream (default: all)",
    )
    sweep.add_argument("--seed", type=int, default=0, help="Random seed")
    sweep.add_argument("--samples", type=int, help="Sample count for random mode")
    sweep.add_argument(
        "--dedup", action="store_true", help="Skip isomorphic duplicates"
    )
    sweep.add_argument(
        "--prune",
        action="store_true",
        help="Skip instances with large minimum out-degree",
    )
    sweep.add_argument("--checkpoint", help="Checkpoint file to write")
    sweep.add_argument("--resume", help="Checkpoint file to resume from")
    sweep.add_argument(
        "--emit-all",
        action="store_true",
        help="Print verdicts for every instance, not only notable ones",
    )
    sweep.add_argument(
        "--allow-oversize",
        action="store_true",
        help="Permit exhaustive sweeps above the configured size cap",
    )
    sweep.add_argument("--p-forward", help="Probability of arc i->j, e.g. 1/3")
    sweep.add_argument("--p-backward", help="Probability of arc j->i, e.g. 1/3")
    sweep.add_argument("--threads", type=int, help="Worker processes")

    farkas = sub.add_parser("farkas", help="Decide {M x = b, x >= 0}")
    farkas.add_argument("--matrix", required=True, help="Matrix file for M")
    farkas.add_argument("--rhs", required=True, help="Single-column matrix file for b")

    return parser


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "check":
        return cmd_check(
            args.path,
            conjecture=args.conjecture,
            cross_check=args.cross_check,
            lp_c5=args.lp_c5,
            out=sys.stdout,
        )
    if args.command == "matrix":
        return cmd_matrix(args.path, inverse=args.inverse, out=sys.stdout)
    if args.command == "blowup":
        return cmd_blowup(args.path, args.weights, out=sys.stdout)
    if args.command == "sweep":
        return cmd_sweep(
            args.n,
            mode=args.mode,
            seed=args.seed,
            samples=args.samples,
            dedup=args.dedup,
            prune=args.prune,
            checkpoint=args.checkpoint,
            resume=args.resume,
            emit_all=args.emit_all,
            allow_oversize=args.allow_oversize,
            p_forward=args.p_forward,
            p_backward=args.p_backward,
            threads=args.threads,
            out=sys.stdout,
        )
    return cmd_farkas(args.matrix, args.rhs, out=sys.stdout)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and return its exit code.

    Usage errors count as input errors (exit 1) so that code 2 keeps meaning
    "a conjecture fails". Every ApplicationException is reported on standard
    error and mapped through ERROR_CODE_MAP.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else 0

    setup_logging()
    initialize_logfire()

    try:
        return dispatch(args)
    except ApplicationException as exc:
        logger.debug("Command %s failed: %s", args.command, exc.to_dict())
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except KeyboardInterrupt:
        sys.stderr.write("interrupted\n")
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
