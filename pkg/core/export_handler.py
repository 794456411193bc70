"""
Export Handler - Render results as JSON, CSV or plain-text tables.

Rationals are always written as "num/den"; floats get `float_digits`
significant digits (17 by default, enough to round-trip a double).
"""
import json
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import pandas as pd

from config.engine_config import OutputFormat
from config.settings import get_settings
from core import closed_form
from core.solver import SolveReport
from models.chips import TraceStep
from models.graph import VertexId
from models.outcomes import EmpiricalDistribution
from models.rational_matrix import RationalMatrix, format_fraction
from storage.file_manager import get_file_manager, FileManager


def format_float(value: float) -> str:
    return format(value, f".{get_settings().float_digits}g")


EXTENSIONS = {
    OutputFormat.JSON: "json",
    OutputFormat.CSV: "csv",
    OutputFormat.TABLE: "txt",
}


class ExportHandler:
    """
    Handles rendering engine results to the supported output formats.
    """

    def __init__(self, file_manager: Optional[FileManager] = None):
        self.file_manager: FileManager = file_manager or get_file_manager()

    # Rendering helpers

    @staticmethod
    def _render_frame(frame: pd.DataFrame, output: OutputFormat) -> str:
        if output is OutputFormat.CSV:
            return frame.to_csv(index=False, lineterminator="\n")
        if output is OutputFormat.JSON:
            return json.dumps(frame.to_dict(orient="records"), indent=2) + "\n"
        return frame.to_string(index=False) + "\n"

    # Probabilities

    def probability_frame(self, report: SolveReport) -> pd.DataFrame:
        """One row per vertex with "num/den" and float columns per engine, plus Monte Carlo frequency and sigma."""
        board = report.board
        rows = []
        mc = self.mc_payload(report.estimate, report.reference()) if report.estimate is not None else None
        for v in board.vertices():
            row: Dict[str, Any] = {'vertex': v}
            if board.has_levels:
                row['level'] = board.level(v)
            for name, answer in report.exact.items():
                row[name] = format_fraction(answer[v])
                row[f"{name}_float"] = format_float(float(answer[v]))
            if mc is not None:
                row['mc_freq'] = mc['freq'][v]
                row['mc_sigma'] = mc['sigma'][v]
            rows.append(row)
        return pd.DataFrame(rows)

    def export_probabilities(self, report: SolveReport, output: OutputFormat) -> Tuple[str, str]:
        """
        Export per-vertex winning probabilities.

        Returns:
            Tuple of (content, filename)
        """
        board = report.board
        verdict = "AGREE" if report.agree else "DISAGREE"
        if output is OutputFormat.JSON:
            payload: Dict[str, Any] = {
                'board': board.get_display_name(),
                'start': board.start,
                'methods': {
                    name: {str(v): format_fraction(p) for v, p in answer.items()}
                    for name, answer in report.exact.items()
                },
                'agreement': verdict,
            }
            if report.estimate is not None:
                payload['mc'] = self.mc_payload(report.estimate, report.reference())
            content = json.dumps(payload, indent=2) + "\n"
        else:
            frame = self.probability_frame(report)
            if output is OutputFormat.CSV and len(report.exact) > 1:
                frame['agreement'] = verdict
            content = self._render_frame(frame, output)
            if output is OutputFormat.TABLE and len(report.exact) > 1:
                content += f"\n{verdict}\n"
        filename = self.file_manager.generate_export_filename(
            board.get_display_name(), "probabilities", EXTENSIONS[output]
        )
        return content, filename

    # Traces

    @staticmethod
    def trace_records(steps: Sequence[TraceStep]) -> List[Dict[str, Any]]:
        return [{'step': i, **step.to_dict()} for i, step in enumerate(steps)]

    def export_trace(self, steps: Sequence[TraceStep], board_name: str,
                     output: OutputFormat = OutputFormat.JSON) -> Tuple[str, str]:
        """
        Export an abacus trace. JSON output is JSON lines, one step per line.
        """
        records = self.trace_records(steps)
        if output is OutputFormat.JSON:
            content = "".join(json.dumps(record) + "\n" for record in records)
            extension = "jsonl"
        else:
            frame = pd.DataFrame([
                {
                    'step': r['step'],
                    'internal': " ".join(map(str, r['internal'])),
                    'terminal': " ".join(map(str, r['terminal'])),
                    'comment': step.to_text(),
                }
                for r, step in zip(records, steps)
            ])
            content = self._render_frame(frame, output)
            extension = EXTENSIONS[output]
        filename = self.file_manager.generate_export_filename(board_name, "trace", extension)
        return content, filename

    @staticmethod
    def parse_trace(content: str) -> List[TraceStep]:
        """Read JSON-lines trace content back into steps."""
        return [TraceStep.from_dict(json.loads(line)) for line in content.splitlines() if line.strip()]

    # Sequences

    def sequence_frame(self, k: int, n_max: int) -> pd.DataFrame:
        """n, a, t, p_root, p_root_float, and limit_error for binary trees."""
        table = closed_form.sequence_table(k, n_max)
        rows = []
        convergence = closed_form.convergence_report(n_max) if k == 2 else None
        for n in range(table.n_max + 1):
            p = table.root_probability(n)
            row: Dict[str, Any] = {
                'n': n,
                'a': table.values[n],
                't': table.totals[n],
                'p_root': format_fraction(p),
                'p_root_float': format_float(float(p)),
            }
            if convergence is not None:
                row['limit_error'] = format_float(convergence[n].error)
            rows.append(row)
        return pd.DataFrame(rows)

    def export_sequence(self, k: int, n_max: int, output: OutputFormat = OutputFormat.CSV) -> Tuple[str, str]:
        content = self._render_frame(self.sequence_frame(k, n_max), output)
        filename = self.file_manager.generate_export_filename(f"tree_k{k}", "sequence", EXTENSIONS[output])
        return content, filename

    # Monte Carlo

    @staticmethod
    def mc_payload(estimate: EmpiricalDistribution, exact: Mapping[VertexId, Fraction]) -> Dict[str, Any]:
        return {
            **estimate.to_dict(),
            'freq': [format_float(f) for f in estimate.frequencies()],
            'exact': [format_fraction(exact[v]) for v in range(len(estimate.wins))],
            'sigma': [format_float(s) for s in estimate.sigma(exact)],
        }

    def export_mc(self, report: SolveReport) -> Tuple[str, str]:
        """Monte Carlo counts next to the exact answer, as JSON."""
        payload = self.mc_payload(report.estimate, report.reference())
        content = json.dumps(payload, indent=2) + "\n"
        filename = self.file_manager.generate_export_filename(report.board.get_display_name(), "mc", "json")
        return content, filename

    # Matrices

    def export_matrix(self, matrix: RationalMatrix, board_name: str, kind: str) -> Tuple[str, str]:
        """Matrix as {"rows", "cols", "entries"} with "num/den" entries."""
        content = json.dumps(matrix.to_json(), indent=2) + "\n"
        filename = self.file_manager.generate_export_filename(board_name, kind, "json")
        return content, filename

