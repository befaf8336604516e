from ._rates import (
    LiftedChain,
    long_run_win_rate,
    game_win_rate,
    lifted_chain,
    marginal_residues,
    pattern_win_rate,
    policy_win_rate,
)
from ._threshold import (
    ROOT_TOL,
    FAIRNESS_TOL,
    critical_alpha,
    policy_sweep,
    alpha_sweep,
)

__all__ = [
    "LiftedChain",
    "long_run_win_rate",
    "game_win_rate",
    "lifted_chain",
    "marginal_residues",
    "pattern_win_rate",
    "policy_win_rate",
    "ROOT_TOL",
    "FAIRNESS_TOL",
    "critical_alpha",
    "policy_sweep",
    "alpha_sweep",
]
