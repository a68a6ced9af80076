"""bounds and chain-check."""

import argparse
from pathlib import Path

from bounds.chain import chain_check_family
from bounds.classical import bound_report
from bounds.schemas import BoundReport, ChainReport
from cli.commands import read_json
from experiment.config import LabConfig
from partitions.schemas import FamilyPayload


def bounds(args: argparse.Namespace, config: LabConfig) -> BoundReport:
    return bound_report(args.t, args.d)


def chain_check(args: argparse.Namespace, config: LabConfig) -> ChainReport:
    family = FamilyPayload.model_validate(read_json(Path(args.family))).to_family()
    return chain_check_family(family, exact_limit=config.bounds.exact_argument_limit)


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = subparsers.add_parser("bounds", parents=[common], help="closed-form bounds for K_t(d)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=bounds)

    p = subparsers.add_parser(
        "chain-check", parents=[common], help="evaluate the lower-bound chain on a family"
    )
    p.add_argument("--family", required=True, help="family JSON file")
    p.set_defaults(handler=chain_check)
