"""Acceptance suite behind ``parrondo verify``.

Analytic checks run at alpha = 0.005 and M = 3 whatever the flags say; only the
Monte Carlo block takes its seed and sample size from the config.
"""

from typing import Callable

import numpy as np

from parrondo.analysis import critical_alpha, game_win_rate, long_run_win_rate, policy_win_rate
from parrondo.errors import ParrondoError
from parrondo.games import (
    closed_form_stationary_b,
    closed_form_stationary_mix,
    closed_form_win_rate_mix,
    game_a_matrix,
    game_b_matrix,
    mixture_matrix,
    win_vector,
)
from parrondo.markov import evolve, is_irreducible, is_regular, matrix_power, stationary
from parrondo.models import CheckResult, GameParams, GameTypes, Policy, RunConfig
from parrondo.simulation import empirical_vs_analytic

VERIFY_ALPHA = 0.005
VERIFY_MODULUS = 3
Z_BOUND = 4.0
CRITICAL_ALPHA = 0.013109
CRITICAL_ALPHA_TOL = 1e-4

GRID = np.linspace(0.0, 0.099, 100)
GAME_A_ALPHAS = (0.0, 0.005, 0.05, 0.099)

BOOKSTORE = [[0.25, 0.5, 0.25], [0.0, 0.5, 0.5], [0.33, 0.33, 0.34]]
BOOKSTORE_SQUARED = [[0.145, 0.4575, 0.3975], [0.165, 0.415, 0.42], [0.1947, 0.4422, 0.3631]]


def _close(name: str, expected: float, got: float, tolerance: float) -> CheckResult:
    return CheckResult(
        name=name,
        expected=expected,
        got=got,
        tolerance=tolerance,
        passed=bool(abs(got - expected) <= tolerance),
    )


def _holds(name: str, expected: str, got: float | str, passed: bool) -> CheckResult:
    return CheckResult(name=name, expected=expected, got=got, passed=bool(passed))


def _max_deviation(alphas: np.ndarray, numeric: Callable, closed: Callable) -> float:
    worst = 0.0
    for alpha in alphas.tolist():
        w, _ = stationary(numeric(alpha))
        worst = max(worst, float(np.max(np.abs(w.probs - closed(alpha).probs))))
    return worst


def _game_a_checks() -> list[CheckResult]:
    checks = []
    for alpha in GAME_A_ALPHAS:
        params = GameParams(alpha=alpha, modulus=VERIFY_MODULUS)
        w, _ = stationary(game_a_matrix(params))
        deviation = float(np.max(np.abs(w.probs - 1.0 / VERIFY_MODULUS)))
        checks.append(_close(f"game A uniform stationary (alpha={alpha:g})", 0.0, deviation, 1e-10))
        rate = game_win_rate(params, GameTypes.A).win_probability
        checks.append(_close(f"game A win rate (alpha={alpha:g})", 0.5 - alpha, rate, 1e-12))
    return checks


def _game_b_checks() -> list[CheckResult]:
    def params(alpha: float) -> GameParams:
        return GameParams(alpha=alpha, modulus=VERIFY_MODULUS)

    deviation = _max_deviation(
        GRID, lambda alpha: game_b_matrix(params(alpha)), closed_form_stationary_b
    )
    rates = np.array(
        [
            long_run_win_rate(
                game_b_matrix(params(alpha)), win_vector(params(alpha), GameTypes.B)
            ).win_probability
            for alpha in GRID.tolist()
        ]
    )
    worst_losing = float(rates[GRID > 0].max())
    return [
        _close("game B stationary matches closed form", 0.0, deviation, 1e-10),
        _holds("game B losing for alpha > 0", "< 0.5", worst_losing, worst_losing < 0.5),
        _close("game B fair at alpha = 0", 0.5, float(rates[0]), 1e-12),
    ]


def _mixture_checks() -> list[CheckResult]:
    deviation = _max_deviation(
        GRID,
        lambda alpha: mixture_matrix(GameParams(alpha=alpha, modulus=VERIFY_MODULUS), 0.5),
        closed_form_stationary_mix,
    )
    params = GameParams(alpha=VERIFY_ALPHA, modulus=VERIFY_MODULUS)
    rate = game_win_rate(params, GameTypes.MIXTURE, 0.5).win_probability
    return [
        _close("mixture stationary matches closed form", 0.0, deviation, 1e-10),
        _close(
            f"mixture win rate (alpha={VERIFY_ALPHA:g})",
            closed_form_win_rate_mix(VERIFY_ALPHA),
            rate,
            1e-10,
        ),
    ]


def _threshold_check() -> CheckResult:
    try:
        found = critical_alpha(0.5, VERIFY_MODULUS).alpha
    except ParrondoError as exc:
        return _holds("critical alpha", f"{CRITICAL_ALPHA}", str(exc), False)
    return _close("critical alpha", CRITICAL_ALPHA, found, CRITICAL_ALPHA_TOL)


def _paradox_checks() -> list[CheckResult]:
    params = GameParams(alpha=VERIFY_ALPHA, modulus=VERIFY_MODULUS)
    signs = [
        ("A", False),
        ("B", False),
        ("pattern:AB", False),
        ("pattern:BBBA", False),
        ("pattern:AAB", True),
        ("pattern:ABB", True),
        ("mix:0.5", True),
    ]
    checks = []
    for spec, winning in signs:
        rate = policy_win_rate(Policy.parse(spec), params).win_probability
        expected = "> 0.5" if winning else "< 0.5"
        passed = rate > 0.5 if winning else rate < 0.5
        checks.append(_holds(f"paradox sign {spec}", expected, rate, passed))

    mix = policy_win_rate(Policy.random_mix(0.5), params).win_probability
    best = policy_win_rate(Policy.capital_aware(), params).win_probability
    checks.append(_holds("optimal beats mixture", f"> {mix!r}", best, best > mix))
    return checks


def _bookstore_checks() -> list[CheckResult]:
    step = evolve([0.0, 0.5, 0.5], BOOKSTORE, 1)
    squared = matrix_power(BOOKSTORE, 2)
    two_cycle = [[0.0, 1.0], [1.0, 0.0]]
    return [
        _close(
            "bookstore one-step distribution",
            0.0,
            float(np.max(np.abs(step.probs - np.array([0.165, 0.415, 0.42])))),
            1e-12,
        ),
        _close(
            "bookstore two-step matrix",
            0.0,
            float(np.max(np.abs(squared.entries - np.array(BOOKSTORE_SQUARED)))),
            1e-12,
        ),
        _holds(
            "two-cycle irreducible but not regular",
            "irreducible, not regular",
            f"irreducible={is_irreducible(two_cycle)}, regular={is_regular(two_cycle)}",
            is_irreducible(two_cycle) and not is_regular(two_cycle),
        ),
    ]


def _monte_carlo_checks(config: RunConfig) -> list[CheckResult]:
    params = GameParams(alpha=VERIFY_ALPHA, modulus=VERIFY_MODULUS)
    policies = [
        Policy.pure_a(),
        Policy.pure_b(),
        Policy.periodic("AAB"),
        Policy.random_mix(0.5),
        Policy.capital_aware(),
    ]
    checks = []
    for policy in policies:
        report = empirical_vs_analytic(policy, params, config.n_plays, config.n_runs, config.seed)
        checks.append(
            CheckResult(
                name=f"monte carlo {policy.label}",
                expected=0.0,
                got=report.z_score,
                tolerance=Z_BOUND,
                passed=report.within(Z_BOUND),
            )
        )
    return checks


def run_checks(config: RunConfig) -> list[CheckResult]:
    """Every acceptance check, in report order."""
    return [
        *_game_a_checks(),
        *_game_b_checks(),
        *_mixture_checks(),
        _threshold_check(),
        *_paradox_checks(),
        *_bookstore_checks(),
        *_monte_carlo_checks(config),
    ]
