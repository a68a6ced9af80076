"""experiment and rate."""

import argparse

from common.errors import InvalidArgumentError
from experiment.config import LabConfig
from experiment.runner import run_experiment, run_rate_table
from experiment.schemas import ExperimentRow, RateRow


def int_list(value: str) -> list[int]:
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}")


def experiment(args: argparse.Namespace, config: LabConfig) -> list[ExperimentRow]:
    if args.mols:
        config.experiment = config.experiment.model_copy(update={"use_mols": True})
    return run_experiment(args.d, args.t, args.seed, config)


def rate(args: argparse.Namespace, config: LabConfig) -> list[RateRow]:
    if args.n_max < args.d:
        raise InvalidArgumentError(f"--n-max must be >= d={args.d}, got {args.n_max}")
    return run_rate_table(args.d, list(range(args.d, args.n_max + 1)), config)


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = subparsers.add_parser(
        "experiment", parents=[common], help="scc of K_t(d) against its bounds, one row per t"
    )
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=int_list, required=True, help="comma-separated, e.g. 8,16,32")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mols", action="store_true", help="use the Latin-square family when t <= d + 1")
    p.set_defaults(handler=experiment)

    p = subparsers.add_parser("rate", parents=[common], help="(1/n) log N(n, d) for n = d..n-max")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(handler=rate)
