"""Rational-function results for M = 3 (and gamma = 1/2 for the mixture).

Polynomials are evaluated as written; they are only valid on 0 <= alpha < 0.1.
"""

from parrondo.markov import validate_distribution
from parrondo.models import ALPHA_MAX, ProbabilityVector


def _check_alpha(alpha: float) -> float:
    if not 0.0 <= alpha < ALPHA_MAX:
        raise ValueError(f"alpha out of range [0, {ALPHA_MAX})")
    return alpha


def closed_form_stationary_b(alpha: float) -> ProbabilityVector:
    a = _check_alpha(alpha)
    denominator = 240 * a**2 - 16 * a + 169
    return validate_distribution(
        [
            5 * (16 * a**2 - 8 * a + 13) / denominator,
            2 * (40 * a**2 + 6 * a + 13) / denominator,
            2 * (40 * a**2 + 6 * a + 39) / denominator,
        ]
    )


def closed_form_stationary_mix(alpha: float) -> ProbabilityVector:
    a = _check_alpha(alpha)
    denominator = 960 * a**2 - 32 * a + 709
    return validate_distribution(
        [
            (320 * a**2 - 80 * a + 245) / denominator,
            (320 * a**2 + 24 * a + 180) / denominator,
            (320 * a**2 + 24 * a + 284) / denominator,
        ]
    )


def closed_form_win_rate_b(alpha: float) -> float:
    a = _check_alpha(alpha)
    return (-240 * a**3 + 144 * a**2 - 155 * a + 84.5) / (240 * a**2 - 16 * a + 169)


def closed_form_win_rate_mix(alpha: float) -> float:
    a = _check_alpha(alpha)
    return (-1920 * a**3 + 1056 * a**2 - 1406 * a + 727) / (1920 * a**2 - 64 * a + 1418)
