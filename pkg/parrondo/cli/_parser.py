import argparse
from pathlib import Path

import numpy as np

from parrondo.errors import ConfigError
from parrondo.models import Commands, OutputFormats, RunConfig
from parrondo.version import __version__

DEFAULT_SEED = 20240101


def _common(output_format: str = OutputFormats.CSV.value) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=0.005, help="coin bias (default: 0.005)")
    common.add_argument("--modulus", type=int, default=3, help="capital modulus M (default: 3)")
    common.add_argument("--gamma", type=float, default=0.5, help="weight of game A in the mixture")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="64-bit unsigned seed")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormats],
        default=output_format,
    )
    common.add_argument("--output", dest="output_path", type=Path, default=None, help="write to file")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parrondo",
        description="Markov-chain analysis and Monte Carlo simulation of Parrondo's coin games.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s analyze --alpha 0.005 --modulus 3 --gamma 0.5
  %(prog)s threshold --gamma 0.5
  %(prog)s simulate --policy pattern:AAB --policy mix:0.5 --n-plays 50000 --trajectory --every 100
  %(prog)s sweep --grid 0,0.005,0.013109 --policies mix:0.5
  %(prog)s verify
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser(
        Commands.ANALYZE.value, parents=[_common()], help="stationary win rates of every game"
    )
    analyze.add_argument(
        "--pattern", dest="patterns", action="append", default=[], help="extra periodic pattern, e.g. AAB"
    )

    threshold = commands.add_parser(
        Commands.THRESHOLD.value, parents=[_common()], help="critical alpha of the mixture"
    )
    threshold.add_argument("--tol", type=float, default=1e-7, help="root tolerance (default: 1e-7)")

    simulate = commands.add_parser(
        Commands.SIMULATE.value, parents=[_common()], help="seeded Monte Carlo runs"
    )
    simulate.add_argument(
        "--policy",
        dest="policy_spec",
        action="append",
        default=None,
        help="A | B | pattern:<AB..> | mix:<gamma> | optimal (repeat to compare policies)",
    )
    simulate.add_argument("--n-plays", type=int, default=50_000)
    simulate.add_argument("--n-runs", type=int, default=1)
    simulate.add_argument("--trajectory", action="store_true", help="emit the profit path")
    simulate.add_argument("--every", type=int, default=1, help="keep every k-th trajectory point")

    sweep = commands.add_parser(
        Commands.SWEEP.value, parents=[_common()], help="win rates over an alpha grid"
    )
    sweep.add_argument("--start", type=float, default=0.0)
    sweep.add_argument("--stop", type=float, default=0.09)
    sweep.add_argument("--steps", type=int, default=10)
    sweep.add_argument("--grid", default=None, help="explicit comma separated alpha values")
    sweep.add_argument("--policies", default=None, help="comma separated policies (default: A,B,mix:<gamma>,optimal)")

    verify = commands.add_parser(
        Commands.VERIFY.value,
        parents=[_common(OutputFormats.JSON.value)],
        help="run the acceptance checks",
    )
    verify.add_argument("--n-plays", type=int, default=200_000)
    verify.add_argument("--n-runs", type=int, default=5)

    return parser


def _grid(args: argparse.Namespace) -> tuple[float, ...]:
    if args.grid is not None:
        try:
            return tuple(float(item) for item in args.grid.split(",") if item.strip())
        except ValueError:
            raise ConfigError("grid", f"invalid grid {args.grid!r}") from None
    if args.steps < 1:
        raise ConfigError("steps", "steps must be a positive integer")
    return tuple(np.linspace(args.start, args.stop, args.steps).tolist())


def build_config(args: argparse.Namespace) -> RunConfig:
    """Turn parsed flags into a validated RunConfig."""
    values = {
        key: value
        for key, value in vars(args).items()
        if key in RunConfig.model_fields and value is not None
    }
    if args.command == Commands.SWEEP.value:
        values["grid"] = _grid(args)
    if "policy_spec" in values:
        values["policy_spec"] = ",".join(values["policy_spec"])
    if "patterns" in values:
        values["patterns"] = tuple(values["patterns"])
    return RunConfig(**values)
