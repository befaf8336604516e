from typing import Optional, Sequence

from pydantic import ValidationError

from parrondo.errors import (
    ConfigError,
    ParrondoError,
    PolicySpecError,
    StochasticMatrixError,
)
from parrondo.models import Commands
from parrondo.settings.log import logger
from ._commands import COMMANDS, cmd_analyze, cmd_simulate, cmd_sweep, cmd_threshold, cmd_verify
from ._parser import build_config, build_parser
from ._verify import run_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_NO_RESULT = 3


def _describe(exc: ValidationError) -> str:
    messages = []
    for error in exc.errors():
        field = ".".join(str(part) for part in error["loc"]) or exc.title
        messages.append(f"{field}: {error['msg'].removeprefix('Value error, ')}")
    return "; ".join(messages)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID_INPUT

    try:
        config = build_config(args)
        return COMMANDS[Commands(config.command)](config)
    except ValidationError as exc:
        logger.error(_describe(exc))
        return EXIT_INVALID_INPUT
    except ConfigError as exc:
        logger.error(f"{exc.field}: {exc}")
        return EXIT_INVALID_INPUT
    except (PolicySpecError, StochasticMatrixError) as exc:
        logger.error(str(exc))
        return EXIT_INVALID_INPUT
    except OSError as exc:
        logger.error(f"output_path: cannot write {exc.filename}: {exc.strerror}")
        return EXIT_INVALID_INPUT
    except ParrondoError as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        return EXIT_NO_RESULT


__all__ = [
    "main",
    "build_parser",
    "build_config",
    "run_checks",
    "cmd_analyze",
    "cmd_threshold",
    "cmd_simulate",
    "cmd_sweep",
    "cmd_verify",
    "EXIT_OK",
    "EXIT_VERIFY_FAILED",
    "EXIT_INVALID_INPUT",
    "EXIT_NO_RESULT",
]
