"""
Monte Carlo player for Pass the Buck.

Randomness comes from numpy's PCG64 bit generator. At a vertex of degree d
one integer is drawn uniformly from [0, d]: values 0..d-1 pass the buck to
``adjacency[v][value]``, value d ends the game with v winning. numpy's
bounded integer sampling uses masked rejection, so there is no modulo bias.

``estimate`` splits the trials into fixed-size chunks. Chunk i is seeded by
the i-th child of ``SeedSequence(seed)``, so results depend only on
(board, trials, seed, chunk size) and never on the number of workers.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from config.settings import get_settings
from models.graph import Graph, VertexId
from models.outcomes import BranchCounts, EmpiricalDistribution, GameOutcome

logger = logging.getLogger(__name__)

MAX_SEED = 2**64
UNIFORMITY_ALPHA = 1e-4


def _neighbour_table(g: Graph) -> Tuple[np.ndarray, np.ndarray]:
    """Degrees and a padded (m x max_degree) neighbour table."""
    degrees = np.array([g.degree(v) for v in g.vertices()], dtype=np.int64)
    width = max(int(degrees.max()), 1)
    table = np.zeros((g.vertex_count, width), dtype=np.int64)
    for v in g.vertices():
        table[v, :g.degree(v)] = g.adjacency[v]
    return degrees, table


def play_game(g: Graph, rng: np.random.Generator) -> GameOutcome:
    """Play one game from ``g.start``."""
    v = g.start
    steps = 0
    while True:
        d = g.degree(v)
        choice = int(rng.integers(0, d + 1))
        if choice == d:
            return GameOutcome(winner=v, steps=steps)
        v = g.adjacency[v][choice]
        steps += 1


def _simulate_chunk(args: Tuple[np.ndarray, np.ndarray, int, int, np.random.SeedSequence]) -> Tuple[np.ndarray, int]:
    """
    Play ``trials`` games side by side; every round each unfinished game
    takes one draw.
    """
    degrees, table, start, trials, seed_seq = args
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    wins = np.zeros(len(degrees), dtype=np.int64)
    position = np.full(trials, start, dtype=np.int64)
    total_steps = 0
    while position.size:
        d = degrees[position]
        choice = rng.integers(0, d + 1)
        won = choice == d
        wins += np.bincount(position[won], minlength=len(degrees))
        moving = ~won
        position = table[position[moving], choice[moving]]
        total_steps += int(position.size)
    return wins, total_steps


def _chunk_sizes(trials: int, chunk_size: int) -> List[int]:
    full, rest = divmod(trials, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def estimate(
    g: Graph,
    trials: int,
    seed: int,
    workers: Optional[int] = None,
    chunk_size: Optional[int] = None,
) -> EmpiricalDistribution:
    """
    Estimate winning probabilities from ``trials`` seeded games.

    Args:
        g: board
        trials: number of games (>= 1)
        seed: 64-bit nonnegative seed
        workers: worker processes (default from settings); 1 runs inline
        chunk_size: games per independently seeded chunk (default from settings)
    """
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    if not 0 <= seed < MAX_SEED:
        raise ValueError(f"seed must be a 64-bit nonnegative integer, got {seed}")
    settings = get_settings()
    workers = workers or settings.mc_workers
    chunk_size = chunk_size or settings.mc_chunk_size

    degrees, table = _neighbour_table(g)
    sizes = _chunk_sizes(trials, chunk_size)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    tasks = [(degrees, table, g.start, size, s) for size, s in zip(sizes, seeds)]
    logger.debug("Monte Carlo on %s: %d trials in %d chunks, %d workers",
                 g.get_display_name(), trials, len(tasks), workers)

    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_simulate_chunk, tasks))
    else:
        results = [_simulate_chunk(task) for task in tasks]

    wins = np.zeros(g.vertex_count, dtype=np.int64)
    total_steps = 0
    for chunk_wins, chunk_steps in results:
        wins += chunk_wins
        total_steps += chunk_steps
    return EmpiricalDistribution(
        trials=trials,
        wins=[int(w) for w in wins],
        seed=seed,
        total_steps=total_steps,
        chunks=len(tasks),
    )


def sample_branches(g: Graph, v: VertexId, samples: int, seed: int) -> BranchCounts:
    """Draw the outcome at ``v`` ``samples`` times and tally the d+1 branches."""
    d = g.degree(v)
    rng = np.random.default_rng(seed)
    draws = rng.integers(0, d + 1, size=samples)
    return BranchCounts(vertex=v, counts=[int(c) for c in np.bincount(draws, minlength=d + 1)])


def chi_square_statistic(counts: Sequence[int]) -> float:
    """Pearson statistic of ``counts`` against the uniform distribution."""
    return float(stats.chisquare(counts).statistic)


def uniformity_p_value(counts: Sequence[int]) -> float:
    """
    Chi-square p-value of ``counts`` against uniform, with len(counts) - 1
    degrees of freedom. A single outcome is trivially uniform.
    """
    if len(counts) < 2:
        return 1.0
    return float(stats.chisquare(counts).pvalue)


def branches_are_uniform(branches: BranchCounts, alpha: float = UNIFORMITY_ALPHA) -> bool:
    return uniformity_p_value(branches.counts) > alpha
