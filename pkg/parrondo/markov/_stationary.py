from dataclasses import replace
from typing import Sequence

import numpy as np

from parrondo.errors import (
    ContractionViolationError,
    DimensionMismatchError,
    NotIrreducibleError,
    SingularSystemError,
    ZeroEntryError,
)
from parrondo.models import ConvergenceReport, ProbabilityVector, TransitionMatrix
from parrondo.settings.log import logger
from ._classify import is_regular, strong_components
from ._core import MatrixLike, _as_matrix, lazy_chain, validate_distribution, validate_stochastic

RESIDUAL_TOL = 1e-10
POWER_MAX_ITERATIONS = 100_000
POWER_GAP_TOL = 1e-12


def _spread(columns: np.ndarray) -> float:
    return float(np.max(columns.max(axis=0) - columns.min(axis=0)))


def _residual(w: np.ndarray, P: TransitionMatrix) -> float:
    return float(np.max(np.abs(w @ P.entries - w)))


def _contraction_bound(P: TransitionMatrix) -> float | None:
    d = P.min_entry
    return 1.0 - 2.0 * d if d > 0 else None


def _direct_solve(P: TransitionMatrix) -> tuple[np.ndarray, float]:
    """Solve (P^T - I) w = 0 with the last equation replaced by sum(w) = 1."""
    n = P.n_states
    system = P.entries.T - np.eye(n)
    system[-1, :] = 1.0
    rhs = np.zeros(n)
    rhs[-1] = 1.0

    try:
        w = np.linalg.solve(system, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(f"direct solve failed: {exc}") from exc

    if not np.all(np.isfinite(w)) or w.min() < -RESIDUAL_TOL:
        raise SingularSystemError("direct solve returned a non-probability vector")
    w = np.clip(w, 0.0, None)
    w /= w.sum()

    residual = _residual(w, P)
    if residual > RESIDUAL_TOL:
        raise SingularSystemError(f"direct solve residual {residual:.3e} too large")
    return w, residual


def power_iteration(
    P: MatrixLike,
    max_iterations: int = POWER_MAX_ITERATIONS,
    tol: float = POWER_GAP_TOL,
) -> tuple[ProbabilityVector, ConvergenceReport]:
    """Iterate Y <- P Y from the identity until the columns of P^k flatten.

    Only valid for regular chains; the rows of P^k then approach the fixed vector.
    """
    P = _as_matrix(P)
    if not is_regular(P):
        raise SingularSystemError("power iteration needs a regular chain")

    powers = np.eye(P.n_states)
    gaps = [_spread(powers)]
    iterations = 0
    while gaps[-1] > tol:
        if iterations >= max_iterations:
            raise SingularSystemError(
                f"power iteration stalled at gap {gaps[-1]:.3e} after {iterations} steps"
            )
        powers = P.entries @ powers
        iterations += 1
        gaps.append(_spread(powers))

    limit_row = powers.mean(axis=0)
    w = validate_distribution(limit_row / limit_row.sum())
    report = ConvergenceReport(
        iterations=iterations,
        final_gap=gaps[-1],
        contraction_factor_bound=_contraction_bound(P),
        gaps=tuple(gaps),
        method="power",
        residual=_residual(w.probs, P),
    )
    return w, report


def stationary(P: MatrixLike) -> tuple[ProbabilityVector, ConvergenceReport]:
    """Unique fixed probability vector w = wP of an irreducible chain."""
    P = _as_matrix(P)
    n_components, _ = strong_components(P)
    if n_components != 1:
        raise NotIrreducibleError(n_components)

    try:
        w, residual = _direct_solve(P)
        report = ConvergenceReport(
            iterations=0,
            final_gap=0.0,
            contraction_factor_bound=_contraction_bound(P),
            method="direct",
            residual=residual,
        )
        return validate_distribution(w), report
    except SingularSystemError as exc:
        logger.warning(f"Stationary direct solve degenerate, falling back: {exc}")

    if is_regular(P):
        return power_iteration(P)

    # periodic chain: iterate the lazy chain, which shares its fixed vector
    w, report = power_iteration(lazy_chain(P))
    return w, replace(report, method="lazy-power", residual=_residual(w.probs, P))


def limit_matrix(P: MatrixLike) -> TransitionMatrix:
    """Limit W of P^n for a regular chain: every row is the fixed vector."""
    w, _ = stationary(P)
    return validate_stochastic(np.tile(w.probs, (w.n_states, 1)))


def contraction_diagnostics(
    P: MatrixLike, y: Sequence[float] | np.ndarray, steps: int
) -> ConvergenceReport:
    """Track M_k - m_k of y <- P y against the (1 - 2d)^k envelope."""
    P = _as_matrix(P)
    y = np.array(y, dtype=np.float64)
    if y.shape != (P.n_states,):
        raise DimensionMismatchError(P.n_states, y.size)
    if steps < 1:
        raise ValueError(f"steps must be positive, got {steps}")
    if np.any(P.entries <= 0):
        i, j = (int(k) for k in np.argwhere(P.entries <= 0)[0])
        raise ZeroEntryError(i, j)

    factor = 1.0 - 2.0 * P.min_entry
    initial = float(y.max() - y.min())
    slack = 1e-12 * max(1.0, initial)
    gaps = [initial]
    for k in range(1, steps + 1):
        y = P.entries @ y
        gap = float(y.max() - y.min())
        bound = factor**k * initial
        if gap > bound + slack:
            raise ContractionViolationError(k, gap, bound)
        gaps.append(gap)

    return ConvergenceReport(
        iterations=steps,
        final_gap=gaps[-1],
        contraction_factor_bound=factor,
        gaps=tuple(gaps),
        method="contraction",
    )
