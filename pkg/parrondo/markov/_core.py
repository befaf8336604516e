from typing import Sequence

import numpy as np

from parrondo.errors import (
    DimensionMismatchError,
    NegativeEntryError,
    NonFiniteEntryError,
    NonSquareError,
    ProbabilitySumError,
    RowSumError,
)
from parrondo.models import ProbabilityVector, TransitionMatrix

ROW_SUM_TOL = 1e-12

MatrixLike = TransitionMatrix | np.ndarray | Sequence[Sequence[float]]
VectorLike = ProbabilityVector | np.ndarray | Sequence[float]


def _first_index(mask: np.ndarray) -> tuple[int, ...]:
    return tuple(int(k) for k in np.argwhere(mask)[0])


def validate_stochastic(raw: MatrixLike) -> TransitionMatrix:
    """Check a square row-stochastic matrix and re-normalize row sum noise."""
    entries = np.array(raw, dtype=np.float64)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.size == 0:
        raise NonSquareError(entries.shape)

    if not np.all(np.isfinite(entries)):
        i, j = _first_index(~np.isfinite(entries))
        raise NonFiniteEntryError(i, j)
    if np.any(entries < 0):
        i, j = _first_index(entries < 0)
        raise NegativeEntryError(i, j, float(entries[i, j]))

    sums = entries.sum(axis=1)
    for i, total in enumerate(sums):
        if abs(total - 1.0) > ROW_SUM_TOL:
            raise RowSumError(i, float(total))

    drifted = sums != 1.0
    if np.any(drifted):
        entries[drifted] /= sums[drifted, None]
    return TransitionMatrix(entries=entries)


def validate_distribution(raw: VectorLike) -> ProbabilityVector:
    probs = np.array(raw, dtype=np.float64)
    if probs.ndim != 1 or probs.size == 0:
        raise DimensionMismatchError(1, probs.ndim)
    if not np.all(np.isfinite(probs)):
        raise NonFiniteEntryError(int(np.argmin(np.isfinite(probs))), None)
    if np.any(probs < 0):
        i = int(np.argmax(probs < 0))
        raise NegativeEntryError(i, None, float(probs[i]))

    total = probs.sum()
    if abs(total - 1.0) > ROW_SUM_TOL:
        raise ProbabilitySumError(float(total))
    if total != 1.0:
        probs /= total
    return ProbabilityVector(probs=probs)


def _as_matrix(P: MatrixLike) -> TransitionMatrix:
    return P if isinstance(P, TransitionMatrix) else validate_stochastic(P)


def _as_distribution(q: VectorLike) -> ProbabilityVector:
    return q if isinstance(q, ProbabilityVector) else validate_distribution(q)


def _renormalized(entries: np.ndarray) -> np.ndarray:
    entries /= entries.sum(axis=1, keepdims=True)
    return entries


def matrix_power(P: MatrixLike, n: int) -> TransitionMatrix:
    """n-step transition probabilities P^n by repeated squaring.

    Rows are renormalized after every product, so row sums stay within the
    validation tolerance for any n.
    """
    P = _as_matrix(P)
    if n < 0:
        raise ValueError(f"power must be nonnegative, got {n}")

    result = np.eye(P.n_states)
    square = P.entries.copy()
    while n:
        if n & 1:
            result = _renormalized(result @ square)
        n >>= 1
        if n:
            square = _renormalized(square @ square)
    return validate_stochastic(result)


def evolve(q: VectorLike, P: MatrixLike, n: int) -> ProbabilityVector:
    """Distribution after n steps, q P^n, one vector-matrix product per step."""
    P = _as_matrix(P)
    q = _as_distribution(q)
    if n < 0:
        raise ValueError(f"steps must be nonnegative, got {n}")
    if q.n_states != P.n_states:
        raise DimensionMismatchError(P.n_states, q.n_states)

    current = q.probs.copy()
    for _ in range(n):
        current = current @ P.entries
    return validate_distribution(current)


def lazy_chain(P: MatrixLike) -> TransitionMatrix:
    """(I + P) / 2: same fixed vectors as P, regular whenever P is irreducible."""
    P = _as_matrix(P)
    return validate_stochastic(0.5 * (np.eye(P.n_states) + P.entries))


def is_fixed_vector(w: VectorLike, P: MatrixLike, tol: float = 1e-10) -> bool:
    P = _as_matrix(P)
    w = np.asarray(w, dtype=np.float64)
    return bool(np.max(np.abs(w @ P.entries - w)) <= tol)
