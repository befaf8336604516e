import numpy as np

from parrondo.models import SEED_MAX


def stream_for(seed: int, run_index: int = 0) -> np.random.Generator:
    """PCG64 generator for one run.

    The (seed, run_index) pair goes through numpy's SeedSequence hash, so
    neighbouring seeds and run indices give unrelated streams.
    """
    if not 0 <= seed < SEED_MAX:
        raise ValueError("seed must be a 64-bit unsigned integer")
    if run_index < 0:
        raise ValueError(f"run index must be nonnegative, got {run_index}")
    sequence = np.random.SeedSequence(seed, spawn_key=(run_index,))
    return np.random.Generator(np.random.PCG64(sequence))
