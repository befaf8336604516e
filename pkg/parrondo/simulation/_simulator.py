import math

import numpy as np

from parrondo.analysis import policy_win_rate
from parrondo.games import win_vector
from parrondo.models import (
    BatchSummary,
    ComparisonReport,
    GameParams,
    GameTypes,
    Policy,
    PolicyTypes,
    SimResult,
)
from parrondo.settings.log import logger
from ._rng import stream_for

BLOCK_SIZE = 1 << 16


def select_game(
    policy: Policy, play_index: int, capital: int, params: GameParams, draw: float | None = None
) -> GameTypes:
    """Game played next; a random mixture needs its uniform ``draw``."""
    match policy.variant:
        case PolicyTypes.PURE_A:
            return GameTypes.A
        case PolicyTypes.PURE_B:
            return GameTypes.B
        case PolicyTypes.PATTERN:
            return policy.pattern.game_at(play_index)
        case PolicyTypes.CAPITAL_AWARE:
            return GameTypes.A if params.residue(capital) == 0 else GameTypes.B
        case PolicyTypes.RANDOM_MIX:
            if draw is None:
                raise ValueError("a random mixture needs a uniform draw")
            return GameTypes.A if draw < policy.gamma else GameTypes.B


def simulate(
    policy: Policy,
    params: GameParams,
    n_plays: int,
    seed: int,
    record_trajectory: bool = False,
    run_index: int = 0,
) -> SimResult:
    """Play ``n_plays`` rounds from zero profit.

    Each play draws one uniform for the coin; a random mixture first draws one
    more to pick the game. Identical arguments give identical results.
    """
    if n_plays < 1:
        raise ValueError(f"n_plays must be positive, got {n_plays}")
    rng = stream_for(seed, run_index)
    tables = {game: win_vector(params, game).per_state_win for game in (GameTypes.A, GameTypes.B)}
    mixing = policy.variant is PolicyTypes.RANDOM_MIX
    trajectory: list[int] | None = [] if record_trajectory else None

    capital, wins, played = 0, 0, 0
    while played < n_plays:
        size = min(BLOCK_SIZE, n_plays - played)
        # column 0 picks the game, column 1 tosses the coin
        draws = rng.random((size, 2)) if mixing else rng.random((size, 1))
        for index, row in enumerate(draws.tolist(), start=played):
            game = select_game(policy, index, capital, params, row[0] if mixing else None)
            if row[-1] < tables[game][params.residue(capital)]:
                capital += 1
                wins += 1
            else:
                capital -= 1
            if trajectory is not None:
                trajectory.append(capital)
        played += size

    return SimResult(
        n_plays=n_plays,
        seed=seed,
        run_index=run_index,
        final_profit=capital,
        wins=wins,
        profit_trajectory=None if trajectory is None else np.array(trajectory, dtype=np.int64),
    )


def batch(
    policy: Policy,
    params: GameParams,
    n_plays: int,
    n_runs: int,
    seed: int,
    record_trajectory: bool = False,
) -> BatchSummary:
    """Independent runs on streams derived from (seed, run index)."""
    if n_runs < 1:
        raise ValueError(f"n_runs must be positive, got {n_runs}")
    logger.debug(f"Batch {policy.label}: {n_runs} x {n_plays} plays, seed {seed}")

    results = {
        run_index: simulate(policy, params, n_plays, seed, record_trajectory, run_index)
        for run_index in range(n_runs)
    }
    runs = tuple(results[run_index] for run_index in sorted(results))
    per_play = np.array([run.profit_per_play for run in runs])
    return BatchSummary(
        n_plays=n_plays,
        n_runs=n_runs,
        seed=seed,
        mean_profit_per_play=float(per_play.mean()),
        std_profit_per_play=float(per_play.std(ddof=1)) if n_runs > 1 else 0.0,
        final_profits=tuple(run.final_profit for run in runs),
        runs=runs,
    )


def empirical_vs_analytic(
    policy: Policy, params: GameParams, n_plays: int, n_runs: int, seed: int
) -> ComparisonReport:
    analytic = policy_win_rate(policy, params).win_probability
    summary = batch(policy, params, n_plays, n_runs, seed)
    empirical = summary.empirical_win_rate
    z_score = (empirical - analytic) / math.sqrt(
        analytic * (1.0 - analytic) / summary.total_plays
    )
    logger.debug(f"{policy.label}: analytic {analytic:.6f}, empirical {empirical:.6f}, z {z_score:+.2f}")
    return ComparisonReport(
        policy=policy.label,
        analytic_rate=analytic,
        empirical_rate=empirical,
        z_score=z_score,
        total_plays=summary.total_plays,
    )


def transition_counts(trajectory: np.ndarray, modulus: int) -> np.ndarray:
    """Residue-to-residue transition counts of a profit path starting at 0."""
    residues = np.concatenate(([0], np.asarray(trajectory, dtype=np.int64))) % modulus
    counts = np.zeros((modulus, modulus), dtype=np.int64)
    np.add.at(counts, (residues[:-1], residues[1:]), 1)
    return counts
