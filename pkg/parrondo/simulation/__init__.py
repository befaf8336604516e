from ._rng import stream_for
from ._simulator import (
    select_game,
    simulate,
    batch,
    empirical_vs_analytic,
    transition_counts,
)

__all__ = [
    "stream_for",
    "select_game",
    "simulate",
    "batch",
    "empirical_vs_analytic",
    "transition_counts",
]
