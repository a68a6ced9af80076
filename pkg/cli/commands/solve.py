"""solve and greedy."""

import argparse
from pathlib import Path

from pydantic import BaseModel

from covers.greedy import greedy_cover
from covers.schemas import CoverMode, CoverPayload, Objective
from covers.solver import solve_cover
from covers.verification import cover_count, cover_weight
from experiment.config import LabConfig
from graphs.io import load_graph


class SolveOutput(BaseModel):
    optimum: int
    objective: Objective
    mode: CoverMode
    nodes: int
    witness: CoverPayload


class GreedyOutput(BaseModel):
    weight: int
    count: int
    cover: CoverPayload


def solve(args: argparse.Namespace, config: LabConfig) -> SolveOutput:
    g = load_graph(Path(args.graph))
    result = solve_cover(g, Objective(args.objective), CoverMode(args.mode), config.solver)
    return SolveOutput(
        optimum=result.optimum,
        objective=result.objective,
        mode=result.mode,
        nodes=result.nodes_explored,
        witness=CoverPayload.from_cover(result.witness),
    )


def greedy(args: argparse.Namespace, config: LabConfig) -> GreedyOutput:
    cover = greedy_cover(load_graph(Path(args.graph)))
    return GreedyOutput(
        weight=cover_weight(cover), count=cover_count(cover), cover=CoverPayload.from_cover(cover)
    )


def register(subparsers: argparse._SubParsersAction, common: argparse.ArgumentParser) -> None:
    p = subparsers.add_parser("solve", parents=[common], help="exact cc/cp/scc/scp of a graph")
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--objective", choices=[o.value for o in Objective], default=Objective.WEIGHT.value)
    p.add_argument("--mode", choices=[m.value for m in CoverMode], default=CoverMode.COVER.value)
    p.set_defaults(handler=solve)

    p = subparsers.add_parser("greedy", parents=[common], help="greedy clique cover of a graph")
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.set_defaults(handler=greedy)
