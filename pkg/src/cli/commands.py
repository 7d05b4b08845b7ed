"""
CLI Commands

One function per subcommand. Each writes its machine-readable payload to
`out` and returns the process exit code; ApplicationException propagates to
the entry point, which maps it to an exit code.
"""

import sys
from pathlib import Path
from typing import List, Optional, TextIO

from pydantic import ValidationError

from src.cli.converters import (
    convert_report_to_cross_check_line,
    convert_report_to_verdict_lines,
    convert_search_report_to_summary,
    convert_verdict_to_line,
    to_json_line,
)
from src.core.error_codes import (
    EXIT_CONJECTURE_FAILS,
    EXIT_CROSS_CHECK_VIOLATION,
    EXIT_INTERNAL_DEFECT,
    EXIT_OK,
    EnumerationErrorCode,
    FormatErrorCode,
)
from src.core.exceptions import EnumerationException, FormatException
from src.core.logger import get_logger
from src.services.conjecture_service import (
    ConjectureId,
    ConjectureService,
    blow_up_row_sums,
)
from src.services.digraph_service import blow_up
from src.services.farkas_service import Solution, StandardSystem, solve_standard
from src.services.linalg_service import Singular, invert, second_neighborhood_matrix
from src.services.sweep_service import EnumSpec, InstanceOutcome, SweepService
from src.stores.checkpoint_store import CheckpointStore
from src.stores.digraph_store import DigraphStore
from src.stores.matrix_store import MatrixStore

logger = get_logger(__name__)


def _requested(conjecture: str) -> List[ConjectureId]:
    if conjecture.lower() == "all":
        return list(ConjectureId)
    return [ConjectureId(conjecture.upper())]


def _write(out: TextIO, line: str) -> None:
    out.write(line + "\n")


def cmd_check(
    path: str,
    conjecture: str = "all",
    cross_check: bool = False,
    lp_c5: bool = False,
    out: Optional[TextIO] = None,
) -> int:
    """
    Print one verdict line per requested conjecture, plus a cross-check line
    with --cross-check (implied by --lp-c5).

    Exit codes: 3 on any violation, else 2 on any Fails verdict, else 0.
    """
    out = out or sys.stdout
    D = DigraphStore().load(path)
    requested = _requested(conjecture)
    service = ConjectureService()

    if cross_check or lp_c5:
        report = service.consistency_check(D, instance=path, lp_c5=lp_c5)
        for line in convert_report_to_verdict_lines(report):
            if ConjectureId(line.conjecture) in requested:
                _write(out, to_json_line(line))
        _write(out, to_json_line(convert_report_to_cross_check_line(report)))
        verdicts = [report.verdict(c) for c in requested]
        if report.violations:
            return EXIT_CROSS_CHECK_VIOLATION
    else:
        verdicts = [service.check(D, c) for c in requested]
        for verdict in verdicts:
            _write(out, to_json_line(convert_verdict_to_line(path, verdict)))

    if any(not v.satisfied for v in verdicts):
        return EXIT_CONJECTURE_FAILS
    return EXIT_OK


def cmd_matrix(path: str, inverse: bool = False, out: Optional[TextIO] = None) -> int:
    """S_D in matrix text format; with inverse, S_D^-1 or SINGULAR and a null vector."""
    out = out or sys.stdout
    D = DigraphStore().load(path)
    store = MatrixStore()
    S = second_neighborhood_matrix(D)
    if not inverse:
        out.write(store.format(S))
        return EXIT_OK
    result = invert(S)
    if isinstance(result, Singular):
        _write(out, "SINGULAR")
        out.write(store.format_vector(result.null_vector))
    else:
        out.write(store.format(result.inverse))
    return EXIT_OK


def _parse_weights(weights: str) -> List[int]:
    values = []
    for position, token in enumerate(weights.split(","), start=1):
        try:
            values.append(int(token.strip()))
        except ValueError as exc:
            raise FormatException.wrap(
                exc,
                f"Weight {position} is not an integer: {token!r}",
                FormatErrorCode.PARSE_FAILED,
                position=position,
            ) from exc
    return values


def cmd_blowup(path: str, weights: str, out: Optional[TextIO] = None) -> int:
    """
    Print the blow-up of D in digraph format followed by comment lines with
    the class map and the class-wise row-sum identity.
    """
    out = out or sys.stdout
    D = DigraphStore().load(path)
    u = _parse_weights(weights)
    lifted = blow_up(D, u)
    checks = blow_up_row_sums(D, u, lifted)

    comments = [
        f"class {i}: " + " ".join(str(k) for k in members)
        for i, members in enumerate(lifted.classes, start=1)
    ]
    for check in checks:
        observed = ", ".join(str(x) for x in check.observed)
        comments.append(
            f"V_{check.vertex}: (S_D u) = {check.expected}, "
            f"S_D* 1 = [{observed}] {'PASS' if check.passed else 'FAIL'}"
        )
    passed = all(check.passed for check in checks)
    comments.append(f"identity check {'PASS' if passed else 'FAIL'}")
    out.write(DigraphStore().format(lifted.digraph, comments))
    if not passed:
        logger.error("Blow-up row-sum identity failed for %r with %s", D, u)
        return EXIT_INTERNAL_DEFECT
    return EXIT_OK


def cmd_sweep(
    n: int,
    mode: str = "all",
    seed: int = 0,
    samples: Optional[int] = None,
    dedup: bool = False,
    prune: bool = False,
    checkpoint: Optional[str] = None,
    resume: Optional[str] = None,
    emit_all: bool = False,
    allow_oversize: bool = False,
    p_forward: Optional[str] = None,
    p_backward: Optional[str] = None,
    threads: Optional[int] = None,
    out: Optional[TextIO] = None,
) -> int:
    """
    Sweep the conjecture suite over an instance stream.

    Standard output carries the verdict lines of instances with a
    counterexample or violation (every instance with emit_all) and a final
    summary line; progress and wall time go to standard error.
    """
    out = out or sys.stdout
    try:
        spec = EnumSpec(
            n=n,
            mode=mode,
            seed=seed,
            sample_count=samples,
            dedup=dedup,
            prune=prune,
            allow_oversize=allow_oversize,
            p_forward=p_forward,
            p_backward=p_backward,
        )
    except ValidationError as exc:
        raise EnumerationException.wrap(
            exc,
            f"Invalid sweep specification: {exc.errors()[0]['msg']}",
            EnumerationErrorCode.INVALID_SPEC,
        ) from exc

    checkpoint_path = resume or checkpoint
    store = CheckpointStore(Path(checkpoint_path)) if checkpoint_path else None

    def emit(outcome: InstanceOutcome) -> None:
        if emit_all or outcome.notable:
            for line in convert_report_to_verdict_lines(outcome.report):
                _write(out, to_json_line(line))

    report = SweepService().sweep(
        spec,
        threads=threads,
        checkpoint_store=store,
        resume=resume is not None,
        on_outcome=emit,
    )
    _write(out, to_json_line(convert_search_report_to_summary(report)))

    if report.violation_count:
        return EXIT_CROSS_CHECK_VIOLATION
    if any(report.counterexamples.values()):
        return EXIT_CONJECTURE_FAILS
    return EXIT_OK


def cmd_farkas(matrix_path: str, rhs_path: str, out: Optional[TextIO] = None) -> int:
    """
    Decide {M x = b, x >= 0}: SOLUTION and x, or CERTIFICATE and y, each
    followed by the vector in matrix text format. Both answers exit 0.
    """
    out = out or sys.stdout
    store = MatrixStore()
    system = StandardSystem(store.load(matrix_path), store.load_vector(rhs_path))
    outcome = solve_standard(system)
    if isinstance(outcome, Solution):
        _write(out, "SOLUTION")
        out.write(store.format_vector(outcome.x))
    else:
        _write(out, "CERTIFICATE")
        out.write(store.format_vector(outcome.y))
    return EXIT_OK


__all__ = ["cmd_check", "cmd_matrix", "cmd_blowup", "cmd_sweep", "cmd_farkas"]
