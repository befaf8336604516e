from dataclasses import dataclass
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, computed_field

from .chain import ProbabilityVector


class WinRateResult(BaseModel):
    """Long-run one-play win probability of a chain."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    win_probability: float
    stationary_used: ProbabilityVector

    @computed_field
    @property
    def expected_profit_per_play(self) -> float:
        return 2.0 * self.win_probability - 1.0

    @property
    def is_winning(self) -> bool:
        return self.win_probability > 0.5


class ThresholdResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: float
    bracket: tuple[float, float]
    residual: float
    iterations: int
    gamma: float
    modulus: int


class SweepRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    alpha: float
    game: str
    win_probability: float
    profit_per_play: float


@dataclass(frozen=True, eq=False)
class SimResult:
    """Outcome of one seeded run; profit starts at 0 and moves by one euro per play."""

    n_plays: int
    seed: int
    run_index: int
    final_profit: int
    wins: int
    profit_trajectory: Optional[np.ndarray] = None

    @property
    def empirical_win_rate(self) -> float:
        return self.wins / self.n_plays

    @property
    def profit_per_play(self) -> float:
        return self.final_profit / self.n_plays

    def summary(self) -> dict[str, Any]:
        return {
            "run": self.run_index,
            "seed": self.seed,
            "n_plays": self.n_plays,
            "wins": self.wins,
            "final_profit": self.final_profit,
            "empirical_win_rate": self.empirical_win_rate,
        }

    def same_as(self, other: "SimResult") -> bool:
        if self.summary() != other.summary():
            return False
        if self.profit_trajectory is None or other.profit_trajectory is None:
            return self.profit_trajectory is other.profit_trajectory
        return bool(np.array_equal(self.profit_trajectory, other.profit_trajectory))


class BatchSummary(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n_plays: int
    n_runs: int
    seed: int
    mean_profit_per_play: float
    std_profit_per_play: float
    final_profits: tuple[int, ...]
    runs: tuple[SimResult, ...]

    @property
    def total_plays(self) -> int:
        return self.n_plays * self.n_runs

    @property
    def total_wins(self) -> int:
        return sum(run.wins for run in self.runs)

    @property
    def empirical_win_rate(self) -> float:
        return self.total_wins / self.total_plays


class ComparisonReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    policy: str
    analytic_rate: float
    empirical_rate: float
    z_score: float
    total_plays: int

    def within(self, bound: float) -> bool:
        return abs(self.z_score) < bound
