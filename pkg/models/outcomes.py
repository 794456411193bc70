"""
Monte Carlo results.
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Dict, Any, Mapping

from models.graph import VertexId


@dataclass(frozen=True)
class GameOutcome:
    """One played game: the winner and the number of passes before the win."""
    winner: VertexId
    steps: int


@dataclass
class EmpiricalDistribution:
    """
    Win counts over ``trials`` seeded games. ``sum(wins) == trials``.
    """
    trials: int
    wins: List[int]
    seed: int
    total_steps: int = 0
    chunks: int = 1

    def frequencies(self) -> List[float]:
        return [w / self.trials for w in self.wins]

    def sigma(self, exact: Mapping[VertexId, Fraction]) -> List[float]:
        """Binomial standard error of each frequency under the exact probability."""
        return [
            math.sqrt(float(exact[v]) * (1 - float(exact[v])) / self.trials)
            for v in range(len(self.wins))
        ]

    def z_scores(self, exact: Mapping[VertexId, Fraction]) -> List[float]:
        """|freq - exact| / sigma; 0 where sigma is 0 and the frequency is exact."""
        scores = []
        for v, (freq, s) in enumerate(zip(self.frequencies(), self.sigma(exact))):
            diff = abs(freq - float(exact[v]))
            scores.append(diff / s if s > 0 else (0.0 if diff == 0 else math.inf))
        return scores

    def mean_steps(self) -> float:
        return self.total_steps / self.trials

    def merge(self, other: 'EmpiricalDistribution') -> 'EmpiricalDistribution':
        """Exact count addition of two estimates on the same board."""
        if len(self.wins) != len(other.wins):
            raise ValueError("cannot merge estimates from different boards")
        return EmpiricalDistribution(
            trials=self.trials + other.trials,
            wins=[a + b for a, b in zip(self.wins, other.wins)],
            seed=self.seed,
            total_steps=self.total_steps + other.total_steps,
            chunks=self.chunks + other.chunks,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'trials': self.trials,
            'seed': self.seed,
            'wins': list(self.wins),
            'freq': self.frequencies(),
        }


@dataclass
class BranchCounts:
    """Tallies of the d+1 outcomes drawn at one vertex."""
    vertex: VertexId
    counts: List[int] = field(default_factory=list)

    @property
    def samples(self) -> int:
        return sum(self.counts)
