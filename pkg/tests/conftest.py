import numpy as np
import pytest

from parrondo.models import GameParams

BOOKSTORE = [[0.25, 0.5, 0.25], [0.0, 0.5, 0.5], [0.33, 0.33, 0.34]]
TWO_CYCLE = [[0.0, 1.0], [1.0, 0.0]]


@pytest.fixture
def bookstore() -> np.ndarray:
    return np.array(BOOKSTORE)


@pytest.fixture
def two_cycle() -> np.ndarray:
    return np.array(TWO_CYCLE)


@pytest.fixture
def params() -> GameParams:
    """Bias and modulus used throughout the paradox examples."""
    return GameParams(alpha=0.005, modulus=3)
