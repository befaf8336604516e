from dataclasses import dataclass
from typing import Optional

import numpy as np

from parrondo.errors import DimensionMismatchError
from parrondo.games import transition_matrix, win_vector
from parrondo.markov import stationary, validate_distribution, validate_stochastic
from parrondo.markov._core import MatrixLike, _as_matrix
from parrondo.models import (
    GameParams,
    GameTypes,
    PatternPolicy,
    Policy,
    PolicyTypes,
    ProbabilityVector,
    TransitionMatrix,
    WinProbabilityVector,
    WinRateResult,
)


def long_run_win_rate(P: MatrixLike, wins: WinProbabilityVector) -> WinRateResult:
    """Total law of probabilities: sum of stationary weight times per-state win chance."""
    P = _as_matrix(P)
    if len(wins) != P.n_states:
        raise DimensionMismatchError(P.n_states, len(wins))

    w, _ = stationary(P)
    rate = float(np.dot(w.probs, np.asarray(wins.per_state_win)))
    return WinRateResult(win_probability=rate, stationary_used=w)


def game_win_rate(
    params: GameParams, game: GameTypes, gamma: Optional[float] = None
) -> WinRateResult:
    return long_run_win_rate(
        transition_matrix(params, game, gamma), win_vector(params, game, gamma)
    )


@dataclass(frozen=True)
class LiftedChain:
    """Time-homogeneous chain on (residue, pattern index) pairs.

    State ``(i, t)`` lives at index ``i * period + t``.
    """

    matrix: TransitionMatrix
    wins: WinProbabilityVector
    modulus: int
    period: int

    def index(self, residue: int, position: int) -> int:
        return residue * self.period + position


def lifted_chain(pattern: PatternPolicy, params: GameParams) -> LiftedChain:
    modulus, period = params.modulus, pattern.period
    kernels = {
        game: (transition_matrix(params, game).entries, win_vector(params, game))
        for game in {pattern.game_at(t) for t in range(period)}
    }

    entries = np.zeros((modulus * period, modulus * period))
    wins = np.zeros(modulus * period)
    for t in range(period):
        kernel, game_wins = kernels[pattern.game_at(t)]
        following = (t + 1) % period
        for i in range(modulus):
            source = i * period + t
            entries[source, following::period] = kernel[i]
            wins[source] = game_wins[i]

    return LiftedChain(
        matrix=validate_stochastic(entries),
        wins=WinProbabilityVector(per_state_win=tuple(wins.tolist())),
        modulus=modulus,
        period=period,
    )


def marginal_residues(distribution: ProbabilityVector, period: int, modulus: int) -> ProbabilityVector:
    """Collapse a lifted distribution onto capital residues."""
    return validate_distribution(distribution.probs.reshape(modulus, period).sum(axis=1))


def pattern_win_rate(pattern: PatternPolicy, params: GameParams) -> WinRateResult:
    chain = lifted_chain(pattern, params)
    return long_run_win_rate(chain.matrix, chain.wins)


def policy_win_rate(policy: Policy, params: GameParams) -> WinRateResult:
    """Analytic long-run win rate matching a simulation policy."""
    match policy.variant:
        case PolicyTypes.PURE_A:
            return game_win_rate(params, GameTypes.A)
        case PolicyTypes.PURE_B:
            return game_win_rate(params, GameTypes.B)
        case PolicyTypes.PATTERN:
            return pattern_win_rate(policy.pattern, params)
        case PolicyTypes.RANDOM_MIX:
            return game_win_rate(params, GameTypes.MIXTURE, policy.gamma)
        case PolicyTypes.CAPITAL_AWARE:
            return game_win_rate(params, GameTypes.OPTIMAL)
