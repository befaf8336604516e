class ParrondoError(Exception):
    """Base class for every error raised by the package."""


class StochasticMatrixError(ParrondoError, ValueError):
    """Input does not describe a valid stochastic matrix or distribution."""


class NonSquareError(StochasticMatrixError):
    def __init__(self, shape: tuple[int, ...]):
        self.shape = shape
        super().__init__(f"transition matrix must be square, got shape {shape}")


class NegativeEntryError(StochasticMatrixError):
    def __init__(self, i: int, j: int | None, value: float):
        self.i, self.j, self.value = i, j, value
        where = f"({i}, {j})" if j is not None else f"({i})"
        super().__init__(f"negative entry {value!r} at {where}")


class NonFiniteEntryError(StochasticMatrixError):
    def __init__(self, i: int, j: int | None):
        self.i, self.j = i, j
        where = f"({i}, {j})" if j is not None else f"({i})"
        super().__init__(f"non-finite entry at {where}")


class RowSumError(StochasticMatrixError):
    def __init__(self, i: int, total: float):
        self.i, self.total = i, total
        super().__init__(f"row {i} sums to {total!r}, expected 1")


class ProbabilitySumError(StochasticMatrixError):
    def __init__(self, total: float):
        self.total = total
        super().__init__(f"probabilities sum to {total!r}, expected 1")


class DimensionMismatchError(StochasticMatrixError):
    def __init__(self, expected: int, got: int):
        self.expected, self.got = expected, got
        super().__init__(f"dimension mismatch: expected {expected}, got {got}")


class NotIrreducibleError(ParrondoError):
    def __init__(self, n_components: int):
        self.n_components = n_components
        super().__init__(
            f"chain is not irreducible ({n_components} strongly connected components)"
        )


class SingularSystemError(ParrondoError):
    """The stationary linear system is numerically degenerate."""


class ZeroEntryError(ParrondoError):
    def __init__(self, i: int, j: int):
        self.i, self.j = i, j
        super().__init__(f"matrix has a zero entry at ({i}, {j})")


class ContractionViolationError(ParrondoError):
    def __init__(self, step: int, gap: float, bound: float):
        self.step, self.gap, self.bound = step, gap, bound
        super().__init__(f"gap {gap!r} at step {step} exceeds bound {bound!r}")


class NoSignChangeError(ParrondoError):
    def __init__(self, low: float, high: float):
        self.low, self.high = low, high
        super().__init__(
            f"win rate never crosses 0.5 on the bracket (f(lo)={low!r}, f(hi)={high!r})"
        )


class NotMonotoneError(ParrondoError):
    def __init__(self, alpha: float):
        self.alpha = alpha
        super().__init__(f"win rate is not strictly decreasing near alpha={alpha!r}")


class SweepError(ParrondoError):
    def __init__(self, alpha: float, cause: Exception):
        self.alpha, self.cause = alpha, cause
        super().__init__(f"sweep failed at alpha={alpha!r}: {cause}")


class PolicySpecError(ParrondoError, ValueError):
    """Policy string does not follow the policy grammar."""


class ConfigError(ParrondoError, ValueError):
    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(message)
