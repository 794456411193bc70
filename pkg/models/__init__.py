# Models module
from .graph import Graph, TreeSpec, VertexId
from .chips import AbacusGraph, ChipConfig, TerminalCounts, RunStats, TraceStep, TraceAction
from .rational_matrix import RationalMatrix
from .root_two import RootTwoNumber, SQRT2
from .outcomes import GameOutcome, EmpiricalDistribution

__all__ = [
    'Graph', 'TreeSpec', 'VertexId',
    'AbacusGraph', 'ChipConfig', 'TerminalCounts', 'RunStats', 'TraceStep', 'TraceAction',
    'RationalMatrix', 'RootTwoNumber', 'SQRT2',
    'GameOutcome', 'EmpiricalDistribution',
]
