import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from parrondo.models import TransitionMatrix
from ._core import MatrixLike, _as_matrix


def positivity_pattern(P: TransitionMatrix) -> np.ndarray:
    return P.entries > 0


def strong_components(P: MatrixLike) -> tuple[int, np.ndarray]:
    """Strongly connected components of the graph i -> j whenever P[i, j] > 0."""
    P = _as_matrix(P)
    graph = csr_matrix(positivity_pattern(P).astype(np.int8))
    return connected_components(graph, directed=True, connection="strong")


def is_irreducible(P: MatrixLike) -> bool:
    n_components, _ = strong_components(P)
    return n_components == 1


def wielandt_bound(n_states: int) -> int:
    return (n_states - 1) ** 2 + 1


def first_positive_power(P: MatrixLike, max_power: int | None = None) -> int | None:
    """Smallest k with P^k entrywise positive, searched on boolean patterns."""
    P = _as_matrix(P)
    if max_power is None:
        max_power = wielandt_bound(P.n_states)

    pattern = positivity_pattern(P)
    reach = pattern.copy()
    for k in range(1, max_power + 1):
        if reach.all():
            return k
        # boolean matmul is OR-of-ANDs, no underflow
        reach = reach @ pattern
    return None


def is_regular(P: MatrixLike) -> bool:
    P = _as_matrix(P)
    if not is_irreducible(P):
        return False
    return first_positive_power(P) is not None
