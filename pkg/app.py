"""
Buckfire - exact winning probabilities for Pass the Buck.

Commands:
    solve     per-vertex probabilities from one or all engines
    trace     step-by-step abacus trace as JSON lines
    sequence  a(k, n), t(k, n) and root probabilities for k-ary trees
    mc        seeded Monte Carlo estimate scored against the exact answer
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import ValidationError

from config.engine_config import Method, OutputFormat
from config.logging_setup import configure_logging, level_for_verbosity
from config.settings import get_settings
from core import abacus, markov
from core.errors import (
    BuckfireError, ClosedFormUnavailableError, EngineDisagreementError, GraphError,
    InvalidTreeSpecError, LevelOutOfRangeError,
)
from core.export_handler import ExportHandler
from core.solver import BoardSolver, FAIL_SIGMA
from models.graph import TreeSpec
from models.request import SolveRequest
from storage.file_manager import get_file_manager

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_DISAGREE = 4
EXIT_STATISTICAL = 5

MATRIX_KINDS = ("transition", "fundamental", "absorption")


# ─────────────────────────────────────────────
# Argument parsing
# ─────────────────────────────────────────────

def _tree_arg(text: str) -> TreeSpec:
    try:
        return TreeSpec.parse(text)
    except InvalidTreeSpecError as e:
        raise argparse.ArgumentTypeError(str(e))


def _policy_arg(text: str) -> abacus.FiringPolicy:
    try:
        return abacus.FiringPolicy.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected lowest, highest, queue or random:<seed>, got {text!r}"
        )


def _add_board_arguments(parser: argparse.ArgumentParser) -> None:
    board = parser.add_mutually_exclusive_group(required=True)
    board.add_argument("--tree", type=_tree_arg, metavar="k=K,n=N", help="complete k-ary tree to level n")
    board.add_argument("--graph", type=Path, metavar="FILE", help="board file")
    parser.add_argument("--start", type=int, default=None, help="start vertex (default: board's own)")


def _add_output_arguments(parser: argparse.ArgumentParser, default: OutputFormat) -> None:
    parser.add_argument("--output", choices=[f.value for f in OutputFormat], default=default.value)
    parser.add_argument("--out", type=Path, metavar="DIR", help="write to an auto-named file in DIR")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buckfire", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="winning probabilities")
    _add_board_arguments(solve)
    solve.add_argument("--method", choices=[m.value for m in Method], default=Method.ALL.value)
    solve.add_argument("--seed", type=int, default=None, help="Monte Carlo seed (enables mc under --method all)")
    solve.add_argument("--trials", type=int, default=1_000_000)
    solve.add_argument("--workers", type=int, default=None)
    solve.add_argument("--matrix", choices=MATRIX_KINDS, default=None,
                       help="print a Markov matrix instead of probabilities")
    _add_output_arguments(solve, OutputFormat.TABLE)

    trace = commands.add_parser("trace", help="abacus trace as JSON lines")
    _add_board_arguments(trace)
    trace.add_argument("--policy", type=_policy_arg, default=None,
                       help="lowest, highest, queue or random:<seed>")
    _add_output_arguments(trace, OutputFormat.JSON)

    sequence = commands.add_parser("sequence", help="k-ary tree sequences")
    sequence.add_argument("--k", type=int, default=2)
    sequence.add_argument("--n-max", type=int, required=True)
    _add_output_arguments(sequence, OutputFormat.CSV)

    mc = commands.add_parser("mc", help="Monte Carlo estimate")
    _add_board_arguments(mc)
    mc.add_argument("--trials", type=int, default=1_000_000)
    mc.add_argument("--seed", type=int, default=None, help="required")
    mc.add_argument("--workers", type=int, default=None)
    mc.add_argument("--out", type=Path, metavar="DIR", help="write to an auto-named file in DIR")

    return parser


def _request(args: argparse.Namespace, method: Method) -> SolveRequest:
    return SolveRequest(
        tree=args.tree,
        graph_path=args.graph,
        start=args.start,
        method=method,
        trials=getattr(args, "trials", 1),
        seed=getattr(args, "seed", None),
        workers=getattr(args, "workers", None),
        output=OutputFormat(getattr(args, "output", OutputFormat.JSON.value)),
    )


def _emit(content_and_name: Tuple[str, str], out_dir: Optional[Path]) -> None:
    content, filename = content_and_name
    if out_dir is None:
        sys.stdout.write(content)
        return
    path = get_file_manager(out_dir).save_export_text(filename, content)
    print(f"Saved {path}")


# ─────────────────────────────────────────────
# Commands
# ─────────────────────────────────────────────

def cmd_solve(args: argparse.Namespace) -> int:
    request = _request(args, Method(args.method))
    handler = ExportHandler()
    solver = BoardSolver()

    if args.matrix:
        board = solver.build_board(request)
        t, _ = markov.build_transition_matrix(board)
        matrix = t
        if args.matrix != "transition":
            q, r = markov.partition(t, board.vertex_count)
            matrix = markov.fundamental_matrix(q) if args.matrix == "fundamental" else markov.absorption_matrix(q, r)
        _emit(handler.export_matrix(matrix, board.get_display_name(), args.matrix), args.out)
        return EXIT_OK

    report = solver.solve(request)
    _emit(handler.export_probabilities(report, request.output), args.out)
    if not report.agree:
        logger.error("Exact engines disagree at vertices %s", report.disagreements())
        return EXIT_DISAGREE
    if report.estimate is not None and report.worst_z_score() > FAIL_SIGMA:
        return EXIT_STATISTICAL
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    request = _request(args, Method.ABACUS)
    board = BoardSolver.build_board(request)
    policy = args.policy or BoardSolver().policy
    steps = abacus.trace_run(abacus.augment(board), policy)
    _emit(ExportHandler().export_trace(steps, board.get_display_name(), request.output), args.out)
    return EXIT_OK


def cmd_sequence(args: argparse.Namespace) -> int:
    _emit(ExportHandler().export_sequence(args.k, args.n_max, OutputFormat(args.output)), args.out)
    return EXIT_OK


def cmd_mc(args: argparse.Namespace) -> int:
    request = _request(args, Method.MC)
    report = BoardSolver().simulate(request)
    _emit(ExportHandler().export_mc(report), args.out)
    worst = report.worst_z_score()
    if worst > FAIL_SIGMA:
        logger.error("Monte Carlo frequency %.2f sigma from exact", worst)
        return EXIT_STATISTICAL
    return EXIT_OK


COMMANDS = {
    "solve": cmd_solve,
    "trace": cmd_trace,
    "sequence": cmd_sequence,
    "mc": cmd_mc,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point. Returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    settings = get_settings()
    configure_logging(level_for_verbosity(settings.log_level, args.verbose))

    try:
        return COMMANDS[args.command](args)
    except ValidationError as e:
        message = "; ".join(error["msg"] for error in e.errors())
        print(f"buckfire: error: {message}", file=sys.stderr)
        return EXIT_USAGE
    except (ClosedFormUnavailableError, LevelOutOfRangeError, InvalidTreeSpecError) as e:
        print(f"buckfire: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as e:
        print(f"buckfire: error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except EngineDisagreementError as e:
        print(f"buckfire: error: {e}", file=sys.stderr)
        return EXIT_DISAGREE
    except BuckfireError as e:
        print(f"buckfire: error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as e:
        print(f"buckfire: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
