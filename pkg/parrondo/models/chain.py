from dataclasses import dataclass, field
from typing import Optional

import numpy as np


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.float64, copy=True)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    """Row-stochastic matrix; build it through ``validate_stochastic``."""

    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen(self.entries))

    @property
    def n_states(self) -> int:
        return self.entries.shape[0]

    @property
    def min_entry(self) -> float:
        return float(self.entries.min())

    def row(self, i: int) -> np.ndarray:
        return self.entries[i]

    def to_list(self) -> list[list[float]]:
        return self.entries.tolist()

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)


@dataclass(frozen=True, eq=False)
class ProbabilityVector:
    probs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "probs", _frozen(self.probs))

    @property
    def n_states(self) -> int:
        return self.probs.shape[0]

    def __len__(self) -> int:
        return self.n_states

    def __getitem__(self, i: int) -> float:
        return float(self.probs[i])

    def to_list(self) -> list[float]:
        return self.probs.tolist()

    def __array__(self, dtype=None, copy=None):
        return self.probs if dtype is None else self.probs.astype(dtype)


@dataclass(frozen=True)
class ConvergenceReport:
    """Spread diagnostics of an iterated chain.

    ``gaps[k]`` is the largest max-minus-min spread after ``k`` iterations.
    """

    iterations: int
    final_gap: float
    contraction_factor_bound: Optional[float] = None
    gaps: tuple[float, ...] = field(default_factory=tuple)
    method: str = "direct"
    residual: Optional[float] = None

    @property
    def is_nonincreasing(self) -> bool:
        return all(b <= a for a, b in zip(self.gaps, self.gaps[1:]))
