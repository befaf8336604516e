from .chain import TransitionMatrix, ProbabilityVector, ConvergenceReport
from .game import GameParams, GameTypes, Coins, WinProbabilityVector, ALPHA_MAX
from .policy import Policy, PolicyTypes, PatternPolicy
from .result import (
    WinRateResult,
    ThresholdResult,
    SweepRow,
    SimResult,
    BatchSummary,
    ComparisonReport,
)
from .cli import RunConfig, CheckResult, Commands, OutputFormats, SEED_MAX

__all__ = [
    "TransitionMatrix",
    "ProbabilityVector",
    "ConvergenceReport",
    "GameParams",
    "GameTypes",
    "Coins",
    "WinProbabilityVector",
    "ALPHA_MAX",
    "Policy",
    "PolicyTypes",
    "PatternPolicy",
    "WinRateResult",
    "ThresholdResult",
    "SweepRow",
    "SimResult",
    "BatchSummary",
    "ComparisonReport",
    "RunConfig",
    "CheckResult",
    "Commands",
    "OutputFormats",
    "SEED_MAX",
]
