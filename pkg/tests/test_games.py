import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from parrondo.games import (
    closed_form_stationary_b,
    closed_form_stationary_mix,
    closed_form_win_rate_b,
    closed_form_win_rate_mix,
    game_a_matrix,
    game_b_matrix,
    mixture_matrix,
    optimal_policy_matrix,
    select_coin,
    transition_matrix,
    win_vector,
)
from parrondo.markov import is_regular, stationary, validate_stochastic
from parrondo.models import Coins, GameParams, GameTypes

alphas = st.floats(min_value=0.0, max_value=0.0999)


def test_game_a_rows(params):
    P = game_a_matrix(params)
    np.testing.assert_allclose(P.row(0), [0.0, 0.495, 0.505], atol=1e-15)
    np.testing.assert_allclose(P.row(2), [0.495, 0.505, 0.0], atol=1e-15)


def test_game_b_rows(params):
    P = game_b_matrix(params)
    np.testing.assert_allclose(P.row(0), [0.0, 0.095, 0.905], atol=1e-15)
    np.testing.assert_allclose(P.row(1), [0.255, 0.0, 0.745], atol=1e-15)
    np.testing.assert_allclose(P.row(2), [0.745, 0.255, 0.0], atol=1e-15)


def test_game_b_modulus_four():
    P = game_b_matrix(GameParams(alpha=0.05, modulus=4))
    np.testing.assert_allclose(P.row(0), [0.0, 0.05, 0.0, 0.95], atol=1e-15)
    np.testing.assert_allclose(P.row(2), [0.0, 0.3, 0.0, 0.7], atol=1e-15)


def test_modulus_two_merges_both_moves():
    # +1 and -1 land on the same residue, so each row is a point mass
    params = GameParams(alpha=0.0, modulus=2)
    for game in (GameTypes.A, GameTypes.B):
        P = transition_matrix(params, game)
        np.testing.assert_array_equal(P.entries, [[0.0, 1.0], [1.0, 0.0]])


@pytest.mark.parametrize("modulus", [3, 4, 5, 7])
@pytest.mark.parametrize("game", [GameTypes.A, GameTypes.B, GameTypes.OPTIMAL])
def test_zero_diagonal(modulus, game):
    P = transition_matrix(GameParams(alpha=0.01, modulus=modulus), game)
    np.testing.assert_array_equal(np.diag(P.entries), np.zeros(modulus))


@pytest.mark.parametrize("modulus", [2, 3, 4, 5])
def test_game_a_uniform_stationary(modulus):
    w, _ = stationary(game_a_matrix(GameParams(alpha=0.03, modulus=modulus)))
    np.testing.assert_allclose(w.probs, np.full(modulus, 1.0 / modulus), atol=1e-10)


@pytest.mark.parametrize("gamma", [0.25, 0.5, 0.8])
def test_mixture_is_linear(params, gamma):
    mixed = mixture_matrix(params, gamma)
    expected = gamma * game_a_matrix(params).entries + (1 - gamma) * game_b_matrix(params).entries
    np.testing.assert_allclose(mixed.entries, expected, rtol=0, atol=1e-15)


def test_mixture_endpoints_are_exact(params):
    np.testing.assert_array_equal(mixture_matrix(params, 1.0).entries, game_a_matrix(params).entries)
    np.testing.assert_array_equal(mixture_matrix(params, 0.0).entries, game_b_matrix(params).entries)


def test_mixture_rejects_bad_gamma(params):
    with pytest.raises(ValueError, match="gamma out of range"):
        mixture_matrix(params, 1.5)
    with pytest.raises(ValueError):
        transition_matrix(params, GameTypes.MIXTURE)


def test_optimal_policy_matrix(params):
    P = optimal_policy_matrix(params)
    np.testing.assert_allclose(P.row(0), game_a_matrix(params).row(0), rtol=0, atol=1e-15)
    np.testing.assert_allclose(P.entries[1:], game_b_matrix(params).entries[1:], rtol=0, atol=1e-15)


@pytest.mark.parametrize("alpha", np.linspace(0.0, 0.099, 100).tolist())
def test_generated_matrices_are_regular(alpha):
    params = GameParams(alpha=alpha, modulus=3)
    for P in (
        game_a_matrix(params),
        game_b_matrix(params),
        mixture_matrix(params, 0.5),
        optimal_policy_matrix(params),
    ):
        assert validate_stochastic(P.entries).n_states == 3
        assert is_regular(P)


def test_win_vectors(params):
    assert win_vector(params, GameTypes.A).per_state_win == pytest.approx((0.495,) * 3)
    assert win_vector(params, GameTypes.B).per_state_win == pytest.approx((0.095, 0.745, 0.745))
    assert win_vector(params, GameTypes.MIXTURE, 0.5).per_state_win == pytest.approx(
        (0.295, 0.62, 0.62)
    )
    assert win_vector(params, GameTypes.OPTIMAL).per_state_win == pytest.approx(
        (0.495, 0.745, 0.745)
    )


@pytest.mark.parametrize(
    "game, capital, coin",
    [
        (GameTypes.A, 0, Coins.A),
        (GameTypes.A, 7, Coins.A),
        (GameTypes.B, 0, Coins.ONE),
        (GameTypes.B, -3, Coins.ONE),
        (GameTypes.B, -1, Coins.TWO),
        (GameTypes.B, 4, Coins.TWO),
        (GameTypes.OPTIMAL, 3, Coins.A),
        (GameTypes.OPTIMAL, -2, Coins.TWO),
    ],
)
def test_select_coin(game, capital, coin):
    assert select_coin(game, capital, 3) is coin


def test_select_coin_rejects_mixture():
    with pytest.raises(ValueError):
        select_coin(GameTypes.MIXTURE, 0, 3)


def test_negative_capital_residue():
    assert GameParams(alpha=0.0, modulus=3).residue(-1) == 2


@pytest.mark.parametrize(
    "kwargs, message",
    [
        ({"alpha": 0.1}, "alpha out of range [0, 0.1)"),
        ({"alpha": -0.01}, "alpha out of range"),
        ({"alpha": 0.0, "modulus": 1}, "modulus must be an integer >= 2"),
    ],
)
def test_game_params_validation(kwargs, message):
    with pytest.raises(ValidationError) as exc_info:
        GameParams(**kwargs)
    assert message in str(exc_info.value)


def test_closed_forms_at_zero_bias():
    np.testing.assert_allclose(
        closed_form_stationary_b(0.0).probs, [5 / 13, 2 / 13, 6 / 13], atol=1e-15
    )
    assert closed_form_win_rate_b(0.0) == pytest.approx(0.5, abs=1e-15)
    assert closed_form_win_rate_mix(0.0) == pytest.approx(727 / 1418, abs=1e-15)


def test_closed_forms_reject_out_of_range():
    with pytest.raises(ValueError):
        closed_form_win_rate_b(0.1)
    with pytest.raises(ValueError):
        closed_form_stationary_mix(-0.001)


@given(alphas)
@settings(max_examples=50)
def test_game_b_matches_closed_form(alpha):
    params = GameParams(alpha=alpha, modulus=3)
    w, _ = stationary(game_b_matrix(params))
    np.testing.assert_allclose(w.probs, closed_form_stationary_b(alpha).probs, rtol=0, atol=1e-10)


@given(alphas)
@settings(max_examples=50)
def test_mixture_matches_closed_form(alpha):
    params = GameParams(alpha=alpha, modulus=3)
    w, _ = stationary(mixture_matrix(params, 0.5))
    np.testing.assert_allclose(
        w.probs, closed_form_stationary_mix(alpha).probs, rtol=0, atol=1e-10
    )
