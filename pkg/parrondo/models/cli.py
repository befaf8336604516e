from enum import Enum
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, field_validator

from .game import ALPHA_MAX

SEED_MAX = 2**64


class Commands(str, Enum):
    ANALYZE = "analyze"
    THRESHOLD = "threshold"
    SIMULATE = "simulate"
    SWEEP = "sweep"
    VERIFY = "verify"


class OutputFormats(str, Enum):
    CSV = "csv"
    JSON = "json"


class RunConfig(BaseModel):
    """Validated flag set of one command invocation."""

    model_config = ConfigDict(frozen=True)

    command: Commands
    alpha: float = 0.005
    modulus: int = 3
    gamma: float = 0.5
    policy_spec: str = "A"
    n_plays: int = 50_000
    n_runs: int = 1
    seed: int = 20240101
    output_format: OutputFormats = OutputFormats.CSV
    output_path: Optional[Path] = None
    tol: float = 1e-7
    trajectory: bool = False
    every: int = 1
    patterns: tuple[str, ...] = ()
    policies: Optional[str] = None
    grid: tuple[float, ...] = ()

    @field_validator("alpha")
    @classmethod
    def check_alpha(cls, v: float) -> float:
        if not 0.0 <= v < ALPHA_MAX:
            raise ValueError(f"alpha out of range [0, {ALPHA_MAX})")
        return v

    @field_validator("grid")
    @classmethod
    def check_grid(cls, v: tuple[float, ...]) -> tuple[float, ...]:
        for alpha in v:
            if not 0.0 <= alpha < ALPHA_MAX:
                raise ValueError(f"grid value {alpha!r} out of range [0, {ALPHA_MAX})")
        return v

    @field_validator("modulus")
    @classmethod
    def check_modulus(cls, v: int) -> int:
        if v < 2:
            raise ValueError("modulus must be an integer >= 2")
        return v

    @field_validator("gamma")
    @classmethod
    def check_gamma(cls, v: float) -> float:
        if not 0.0 <= v <= 1.0:
            raise ValueError("gamma out of range [0, 1]")
        return v

    @field_validator("n_plays", "n_runs", "every")
    @classmethod
    def check_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    @field_validator("seed")
    @classmethod
    def check_seed(cls, v: int) -> int:
        if not 0 <= v < SEED_MAX:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return v

    @field_validator("tol")
    @classmethod
    def check_tol(cls, v: float) -> float:
        if not v > 0:
            raise ValueError("tol must be positive")
        return v

    def echo(self) -> dict[str, Any]:
        return self.model_dump(mode="json", exclude={"output_path"})


class CheckResult(BaseModel):
    """One line of the verification report."""

    model_config = ConfigDict(frozen=True)

    name: str
    expected: float | str
    got: float | str
    tolerance: Optional[float] = None
    passed: bool
