from typing import Any, Callable

import numpy as np

from parrondo.analysis import (
    critical_alpha,
    lifted_chain,
    long_run_win_rate,
    marginal_residues,
    policy_sweep,
    policy_win_rate,
)
from parrondo.errors import ConfigError
from parrondo.models import (
    BatchSummary,
    Commands,
    GameParams,
    Policy,
    PolicyTypes,
    RunConfig,
)
from parrondo.settings.log import logger
from parrondo.simulation import batch
from ._output import emit, json_document
from ._verify import run_checks

RATE_COLUMNS = ["game", "win_probability", "profit_per_play"]
THRESHOLD_COLUMNS = [
    "gamma",
    "modulus",
    "alpha",
    "bracket_low",
    "bracket_high",
    "residual",
    "iterations",
]
TRAJECTORY_COLUMNS = ["policy", "run", "play_index", "profit"]
SUMMARY_COLUMNS = ["policy", "run", "seed", "n_plays", "wins", "final_profit", "empirical_win_rate"]
SWEEP_COLUMNS = ["alpha", "game", "win_probability", "profit_per_play"]
CHECK_COLUMNS = ["name", "expected", "got", "tolerance", "passed"]


def _params(config: RunConfig) -> GameParams:
    return GameParams(alpha=config.alpha, modulus=config.modulus)


def _rate_row(policy: Policy, params: GameParams) -> dict[str, Any]:
    if policy.variant is PolicyTypes.PATTERN:
        chain = lifted_chain(policy.pattern, params)
        result = long_run_win_rate(chain.matrix, chain.wins)
        occupancy = marginal_residues(result.stationary_used, chain.period, chain.modulus)
    else:
        result = policy_win_rate(policy, params)
        occupancy = result.stationary_used

    row = {
        "game": policy.label,
        "win_probability": result.win_probability,
        "profit_per_play": result.expected_profit_per_play,
    }
    row.update({f"stationary_{i}": p for i, p in enumerate(occupancy.to_list())})
    return row


def cmd_analyze(config: RunConfig) -> int:
    params = _params(config)
    policies = [
        Policy.pure_a(),
        Policy.pure_b(),
        Policy.random_mix(config.gamma),
        Policy.capital_aware(),
        *(Policy.parse(f"pattern:{pattern}") for pattern in config.patterns),
    ]
    rows = [_rate_row(policy, params) for policy in policies]
    emit(config, RATE_COLUMNS + [f"stationary_{i}" for i in range(params.modulus)], rows)
    return 0


def cmd_threshold(config: RunConfig) -> int:
    result = critical_alpha(config.gamma, config.modulus, config.tol)
    low, high = result.bracket
    row = {
        "gamma": result.gamma,
        "modulus": result.modulus,
        "alpha": result.alpha,
        "bracket_low": low,
        "bracket_high": high,
        "residual": result.residual,
        "iterations": result.iterations,
    }
    emit(config, THRESHOLD_COLUMNS, [row])
    return 0


def _thinned(label: str, summary: BatchSummary, every: int) -> list[dict[str, Any]]:
    """Every k-th recorded point of each run; the final play is always kept."""
    rows = []
    for run in summary.runs:
        indices = np.arange(every - 1, run.n_plays, every)
        if indices.size == 0 or indices[-1] != run.n_plays - 1:
            indices = np.append(indices, run.n_plays - 1)
        for index, profit in zip(indices.tolist(), run.profit_trajectory[indices].tolist()):
            rows.append(
                {"policy": label, "run": run.run_index, "play_index": index + 1, "profit": profit}
            )
    return rows


def _parse_policies(specs: str) -> list[Policy]:
    policies = [Policy.parse(spec) for spec in specs.split(",") if spec.strip()]
    if not policies:
        raise ConfigError("policies", "no policy given")
    return policies


def cmd_simulate(config: RunConfig) -> int:
    """Run every requested policy on the same seed, one block of rows per policy."""
    rows, summaries = [], []
    for policy in _parse_policies(config.policy_spec):
        summary = batch(
            policy,
            _params(config),
            config.n_plays,
            config.n_runs,
            config.seed,
            record_trajectory=config.trajectory,
        )
        logger.debug(
            f"{policy.label}: mean profit per play {summary.mean_profit_per_play:+.6f} "
            f"over {summary.n_runs} run(s)"
        )
        if config.trajectory:
            rows.extend(_thinned(policy.label, summary, config.every))
        else:
            rows.extend({"policy": policy.label, **run.summary()} for run in summary.runs)
        summaries.append(
            {
                "policy": policy.label,
                "n_runs": summary.n_runs,
                "total_plays": summary.total_plays,
                "empirical_win_rate": summary.empirical_win_rate,
                "mean_profit_per_play": summary.mean_profit_per_play,
                "std_profit_per_play": summary.std_profit_per_play,
            }
        )

    columns = TRAJECTORY_COLUMNS if config.trajectory else SUMMARY_COLUMNS
    emit(config, columns, rows, json_document(config, rows, summaries=summaries))
    return 0


def cmd_sweep(config: RunConfig) -> int:
    if not config.grid:
        raise ConfigError("grid", "grid must contain at least one alpha")
    policies = _parse_policies(config.policies or f"A,B,mix:{config.gamma:g},optimal")

    rows = [
        row.model_dump()
        for alpha in config.grid
        for policy in policies
        for row in policy_sweep(policy, config.modulus, [alpha])
    ]
    emit(config, SWEEP_COLUMNS, rows)
    return 0


def cmd_verify(config: RunConfig) -> int:
    checks = run_checks(config)
    failed = [check.name for check in checks if not check.passed]
    rows = [check.model_dump() for check in checks]
    emit(config, CHECK_COLUMNS, rows, json_document(config, rows, passed=not failed))

    if failed:
        logger.error(f"{len(failed)} of {len(checks)} checks failed: {', '.join(failed)}")
        return 1
    logger.info(f"All {len(checks)} checks passed")
    return 0


COMMANDS: dict[Commands, Callable[[RunConfig], int]] = {
    Commands.ANALYZE: cmd_analyze,
    Commands.THRESHOLD: cmd_threshold,
    Commands.SIMULATE: cmd_simulate,
    Commands.SWEEP: cmd_sweep,
    Commands.VERIFY: cmd_verify,
}
