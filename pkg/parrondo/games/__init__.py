from ._matrices import (
    select_coin,
    win_vector,
    game_a_matrix,
    game_b_matrix,
    mixture_matrix,
    optimal_policy_matrix,
    transition_matrix,
)
from ._closed_form import (
    closed_form_stationary_b,
    closed_form_stationary_mix,
    closed_form_win_rate_b,
    closed_form_win_rate_mix,
)

__all__ = [
    "select_coin",
    "win_vector",
    "game_a_matrix",
    "game_b_matrix",
    "mixture_matrix",
    "optimal_policy_matrix",
    "transition_matrix",
    "closed_form_stationary_b",
    "closed_form_stationary_mix",
    "closed_form_win_rate_b",
    "closed_form_win_rate_mix",
]
