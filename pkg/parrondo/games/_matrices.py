from typing import Optional

import numpy as np

from parrondo.markov import validate_stochastic
from parrondo.models import Coins, GameParams, GameTypes, TransitionMatrix, WinProbabilityVector


def select_coin(game: GameTypes, capital: int, modulus: int) -> Coins:
    """Coin tossed by a pure game at the given capital."""
    residue = capital % modulus
    match game:
        case GameTypes.A:
            return Coins.A
        case GameTypes.B:
            return Coins.ONE if residue == 0 else Coins.TWO
        case GameTypes.OPTIMAL:
            return Coins.A if residue == 0 else Coins.TWO
    raise ValueError(f"game {game.value!r} does not toss a single coin")


def _walk_matrix(per_state_win: tuple[float, ...]) -> TransitionMatrix:
    """+1 with the residue's win probability, -1 otherwise, both mod M."""
    modulus = len(per_state_win)
    entries = np.zeros((modulus, modulus))
    for i, p in enumerate(per_state_win):
        # for M = 2 both moves land on the same residue and the masses add up
        entries[i, (i + 1) % modulus] += p
        entries[i, (i - 1) % modulus] += 1.0 - p
    return validate_stochastic(entries)


def _pure_win_vector(params: GameParams, game: GameTypes) -> WinProbabilityVector:
    return WinProbabilityVector(
        per_state_win=tuple(
            params.coin_win(select_coin(game, residue, params.modulus))
            for residue in range(params.modulus)
        )
    )


def _check_gamma(gamma: Optional[float]) -> float:
    if gamma is None or not 0.0 <= gamma <= 1.0:
        raise ValueError("gamma out of range [0, 1]")
    return gamma


def win_vector(
    params: GameParams, game: GameTypes, gamma: Optional[float] = None
) -> WinProbabilityVector:
    """Per-residue probability of winning the next play."""
    if game is not GameTypes.MIXTURE:
        return _pure_win_vector(params, game)

    gamma = _check_gamma(gamma)
    a = np.array(_pure_win_vector(params, GameTypes.A).per_state_win)
    b = np.array(_pure_win_vector(params, GameTypes.B).per_state_win)
    return WinProbabilityVector(per_state_win=tuple((gamma * a + (1.0 - gamma) * b).tolist()))


def game_a_matrix(params: GameParams) -> TransitionMatrix:
    return _walk_matrix(_pure_win_vector(params, GameTypes.A).per_state_win)


def game_b_matrix(params: GameParams) -> TransitionMatrix:
    return _walk_matrix(_pure_win_vector(params, GameTypes.B).per_state_win)


def mixture_matrix(params: GameParams, gamma: float) -> TransitionMatrix:
    """Play A with probability gamma and B otherwise, elementwise mix of both kernels."""
    gamma = _check_gamma(gamma)
    if gamma == 1.0:
        return game_a_matrix(params)
    if gamma == 0.0:
        return game_b_matrix(params)
    return validate_stochastic(
        gamma * game_a_matrix(params).entries
        + (1.0 - gamma) * game_b_matrix(params).entries
    )


def optimal_policy_matrix(params: GameParams) -> TransitionMatrix:
    """Game A at residue 0, Game B elsewhere; coin 1 is never tossed."""
    entries = game_b_matrix(params).entries.copy()
    entries[0] = game_a_matrix(params).entries[0]
    return validate_stochastic(entries)


def transition_matrix(
    params: GameParams, game: GameTypes, gamma: Optional[float] = None
) -> TransitionMatrix:
    match game:
        case GameTypes.A:
            return game_a_matrix(params)
        case GameTypes.B:
            return game_b_matrix(params)
        case GameTypes.MIXTURE:
            return mixture_matrix(params, gamma)
        case GameTypes.OPTIMAL:
            return optimal_policy_matrix(params)
