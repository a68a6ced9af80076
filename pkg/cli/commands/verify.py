"""verify-family and verify-cover."""

import argparse
from pathlib import Path

from cli.commands import read_json
from covers.schemas import CoverPayload, CoverReport
from covers.verification import verify_cover
from experiment.config import LabConfig
from graphs.io import load_graph
from partitions.qi import verify_family_property
from partitions.schemas import FamilyPayload, FamilyReport


def verify_family(args: argparse.Namespace, config: LabConfig) -> FamilyReport:
    family = FamilyPayload.model_validate(read_json(Path(args.family))).to_family()
    return verify_family_property(family)


def verify_cover_file(args: argparse.Namespace, config: LabConfig) -> CoverReport:
    g = load_graph(Path(args.graph))
    cover = CoverPayload.model_validate(read_json(Path(args.cover))).to_cover()
    return verify_cover(g, cover)


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = subparsers.add_parser(
        "verify-family", parents=[common], help="check the disjointness property of a family"
    )
    p.add_argument("--family", "--file", dest="family", required=True, help="family JSON file")
    p.set_defaults(handler=verify_family)

    p = subparsers.add_parser("verify-cover", parents=[common], help="check a clique cover")
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--cover", required=True, help="cover JSON file")
    p.set_defaults(handler=verify_cover_file)
