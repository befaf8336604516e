from typing import Iterable

import numpy as np
from pydantic import ValidationError
from scipy.optimize import bisect

from parrondo.errors import NoSignChangeError, NotMonotoneError, ParrondoError, SweepError
from parrondo.models import ALPHA_MAX, GameParams, GameTypes, Policy, SweepRow, ThresholdResult
from parrondo.settings.log import logger
from ._rates import game_win_rate, policy_win_rate

ROOT_TOL = 1e-7
FAIRNESS_TOL = 1e-12
MONOTONE_GRID_POINTS = 50
ALPHA_UPPER = float(np.nextafter(ALPHA_MAX, 0.0))


def _excess(alpha: float, gamma: float, modulus: int) -> float:
    params = GameParams(alpha=alpha, modulus=modulus)
    return game_win_rate(params, GameTypes.MIXTURE, gamma).win_probability - 0.5


def critical_alpha(gamma: float = 0.5, modulus: int = 3, tol: float = ROOT_TOL) -> ThresholdResult:
    """Bias at which the gamma-mixture stops being a winning game."""
    if not 0.0 <= gamma <= 1.0:
        raise ValueError("gamma out of range [0, 1]")
    if modulus < 2:
        raise ValueError("modulus must be an integer >= 2")
    if not tol > 0:
        raise ValueError("tol must be positive")

    low, high = 0.0, ALPHA_UPPER
    f_low, f_high = _excess(low, gamma, modulus), _excess(high, gamma, modulus)
    crosses = (f_low > FAIRNESS_TOL and f_high < -FAIRNESS_TOL) or (
        f_low < -FAIRNESS_TOL and f_high > FAIRNESS_TOL
    )
    if not crosses:
        raise NoSignChangeError(f_low, f_high)

    grid = np.linspace(low, high, MONOTONE_GRID_POINTS)
    excess = np.array([_excess(float(alpha), gamma, modulus) for alpha in grid])
    rising = np.flatnonzero(np.diff(excess) >= 0)
    if rising.size:
        raise NotMonotoneError(float(grid[rising[0] + 1]))

    root, info = bisect(
        _excess, low, high, args=(gamma, modulus), xtol=tol, full_output=True
    )
    bracket = (max(low, root - tol), min(high, root + tol))
    residual = _excess(root, gamma, modulus)
    logger.debug(
        f"critical alpha {root:.9f} for gamma={gamma} M={modulus} "
        f"after {info.iterations} bisections, residual {residual:.3e}"
    )
    return ThresholdResult(
        alpha=root,
        bracket=bracket,
        residual=residual,
        iterations=info.iterations,
        gamma=gamma,
        modulus=modulus,
    )


def policy_sweep(policy: Policy, modulus: int, grid: Iterable[float]) -> list[SweepRow]:
    """One row per alpha, in grid order."""
    rows = []
    for alpha in grid:
        try:
            result = policy_win_rate(policy, GameParams(alpha=alpha, modulus=modulus))
        except (ValidationError, ParrondoError, ValueError) as exc:
            raise SweepError(alpha, exc) from exc
        rows.append(
            SweepRow(
                alpha=alpha,
                game=policy.label,
                win_probability=result.win_probability,
                profit_per_play=result.expected_profit_per_play,
            )
        )
    return rows


def alpha_sweep(gamma: float, modulus: int, grid: Iterable[float]) -> list[SweepRow]:
    return policy_sweep(Policy.random_mix(gamma), modulus, grid)
