"""
Board Solver - run the requested engines on one board and compare them.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from config.engine_config import Method
from config.settings import get_settings
from core import abacus, closed_form, markov, monte_carlo
from core.errors import ClosedFormUnavailableError, EngineDisagreementError
from core.graph_builder import build_complete_kary_tree, with_start
from core.graph_parser import GraphParser
from models.graph import Graph, VertexId
from models.outcomes import EmpiricalDistribution
from models.request import SolveRequest

logger = logging.getLogger(__name__)

Probabilities = Dict[VertexId, Fraction]

# Frequencies beyond FAIL_SIGMA fail the statistical check; beyond WARN_SIGMA they are logged.
WARN_SIGMA = 3.0
FAIL_SIGMA = 4.0


@dataclass
class SolveReport:
    """
    Results of every engine that ran on a board.

    ``exact`` maps an engine name (abacus, markov, closed) to its per-vertex
    probabilities; ``estimate`` holds the Monte Carlo counts when one ran.
    """
    board: Graph
    exact: Dict[str, Probabilities] = field(default_factory=dict)
    estimate: Optional[EmpiricalDistribution] = None

    @property
    def methods(self) -> List[str]:
        names = list(self.exact)
        if self.estimate is not None:
            names.append(Method.MC.value)
        return names

    def reference(self) -> Probabilities:
        """The first exact answer, used to score Monte Carlo estimates."""
        return next(iter(self.exact.values()))

    @property
    def agree(self) -> bool:
        answers = list(self.exact.values())
        return all(answer == answers[0] for answer in answers[1:])

    def disagreements(self) -> List[VertexId]:
        """Vertices on which some exact engines differ."""
        answers = list(self.exact.values())
        if not answers:
            return []
        return [v for v in self.board.vertices() if len({a[v] for a in answers}) > 1]

    def check_agreement(self) -> None:
        if not self.agree:
            raise EngineDisagreementError(
                f"exact engines disagree on {self.board.get_display_name()} "
                f"at vertices {self.disagreements()}"
            )

    def worst_z_score(self) -> float:
        if self.estimate is None or not self.exact:
            return 0.0
        return max(self.estimate.z_scores(self.reference()))

    def is_normalized(self) -> bool:
        return all(sum(answer.values()) == 1 for answer in self.exact.values())


def flag_deviation(report: SolveReport) -> float:
    """Log a warning when the worst Monte Carlo z-score lies between WARN_SIGMA and FAIL_SIGMA."""
    worst = report.worst_z_score()
    if WARN_SIGMA < worst <= FAIL_SIGMA:
        logger.warning("Monte Carlo frequency %.2f sigma from exact on %s", worst, report.board.get_display_name())
    return worst


class BoardSolver:
    """
    Builds the board named by a request and runs the requested engines.
    """

    def __init__(self, policy: Optional[abacus.FiringPolicy] = None):
        settings = get_settings()
        self.fire_cap = settings.fire_cap
        self.policy = policy or self._default_policy(settings.default_policy)

    @staticmethod
    def _default_policy(name: str) -> abacus.FiringPolicy:
        try:
            return abacus.FiringPolicy.parse(name)
        except ValueError:
            logger.warning("Unknown firing policy %r, using lowest", name)
            return abacus.LOWEST_INDEX

    @staticmethod
    def build_board(request: SolveRequest) -> Graph:
        if request.tree is not None:
            board = build_complete_kary_tree(request.tree)
            if request.start is not None and request.start != board.start:
                board = with_start(board, request.start)
            return board
        return GraphParser.parse(request.graph_path, start=request.start)

    @staticmethod
    def closed_form_applies(request: SolveRequest, board: Graph) -> bool:
        return request.tree is not None and board.start == 0

    def solve(self, request: SolveRequest) -> SolveReport:
        """
        Run the engines named by ``request.method``.

        ``all`` runs abacus and markov, the closed form on root-started
        trees, and Monte Carlo when a seed is given.
        """
        board = self.build_board(request)
        report = SolveReport(board=board)
        method = request.method

        if method in (Method.ABACUS, Method.ALL):
            report.exact[Method.ABACUS.value] = abacus.solve(board, self.policy, self.fire_cap)
        if method in (Method.MARKOV, Method.ALL, Method.MC):
            report.exact[Method.MARKOV.value] = markov.win_probabilities(board)
        if method is Method.CLOSED and not self.closed_form_applies(request, board):
            raise ClosedFormUnavailableError("closed forms assume the buck starts at the root")
        if method in (Method.CLOSED, Method.ALL) and self.closed_form_applies(request, board):
            report.exact[Method.CLOSED.value] = closed_form.level_probabilities(request.tree.k, request.tree.n)
        if method is Method.MC or (method is Method.ALL and request.seed is not None):
            report.estimate = monte_carlo.estimate(board, request.trials, request.seed, workers=request.workers)
            flag_deviation(report)

        logger.info(
            "Solved %s with %s: %s", board.get_display_name(), ", ".join(report.methods),
            "AGREE" if report.agree else "DISAGREE",
        )
        return report

    def simulate(self, request: SolveRequest) -> SolveReport:
        """Monte Carlo estimate plus the exact markov answer it is scored against."""
        board = self.build_board(request)
        report = SolveReport(board=board)
        report.exact[Method.MARKOV.value] = markov.win_probabilities(board)
        report.estimate = monte_carlo.estimate(board, request.trials, request.seed, workers=request.workers)
        flag_deviation(report)
        return report
