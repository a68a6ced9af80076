"""construct and exact-n."""

import argparse
import logging
from pathlib import Path

from pydantic import BaseModel

from common.errors import InvalidArgumentError
from experiment.config import LabConfig
from partitions.constructions import mols_family, random_qi_family
from partitions.enumeration import maximum_qi_family
from partitions.schemas import FamilyPayload

logger = logging.getLogger(__name__)


class ExactNOutput(BaseModel):
    n: int
    d: int
    N: int
    family: FamilyPayload


def construct(args: argparse.Namespace, config: LabConfig) -> FamilyPayload:
    if args.d is None:
        raise InvalidArgumentError("--d is required")
    if args.kind == "mols":
        family = mols_family(args.d)
    else:
        if args.n is None or args.t is None:
            raise InvalidArgumentError("--kind random needs --n and --t")
        family = random_qi_family(args.n, args.d, args.t, args.seed, config=config.partitions)

    payload = family.to_payload()
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(payload.model_dump_json())
        logger.info("[CONSTRUCT] wrote %d rows to %s", payload.t, out)
    return payload


def exact_n(args: argparse.Namespace, config: LabConfig) -> ExactNOutput:
    family = maximum_qi_family(args.n, args.d, config.partitions)
    return ExactNOutput(n=args.n, d=args.d, N=family.t, family=family.to_payload())


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = subparsers.add_parser(
        "construct", parents=[common], help="build a qualitatively independent family"
    )
    p.add_argument("--kind", choices=["random", "mols"], default="random")
    p.add_argument("--n", type=int, help="ground set size (random)")
    p.add_argument("--d", type=int, help="classes per partition")
    p.add_argument("--t", type=int, help="target number of partitions (random)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="also write the family JSON to this file")
    p.set_defaults(handler=construct)

    p = subparsers.add_parser("exact-n", parents=[common], help="N(n, d) by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=exact_n)
