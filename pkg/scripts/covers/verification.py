"""Cover checks and cover arithmetic."""

from itertools import combinations

from common.errors import InvalidArgumentError
from covers.schemas import CliqueCover, CoverMode, CoverReport
from graphs.schemas import Graph


def cover_weight(c: CliqueCover) -> int:
    return sum(clique.size for clique in c.cliques)


def cover_count(c: CliqueCover) -> int:
    return len(c.cliques)


def verify_cover(g: Graph, c: CliqueCover) -> CoverReport:
    """Check completeness of each clique, coverage of every edge and, in partition mode, uniqueness."""
    multiplicity: dict[tuple[int, int], int] = {}
    non_edges: list[tuple[int, int]] = []

    for clique in c.cliques:
        if clique.vertices[-1] >= g.n:
            raise InvalidArgumentError(
                f"clique {list(clique.vertices)} references a vertex outside 0..{g.n - 1}"
            )
        for pair in combinations(clique.vertices, 2):
            if g.has_edge(*pair):
                multiplicity[pair] = multiplicity.get(pair, 0) + 1
            elif pair not in non_edges:
                non_edges.append(pair)

    uncovered = [e for e in g.edges() if e not in multiplicity]
    multiply_covered = sorted(pair for pair, count in multiplicity.items() if count > 1)

    valid = not uncovered and not non_edges
    if c.mode == CoverMode.PARTITION and multiply_covered:
        valid = False

    return CoverReport(
        valid=valid,
        uncovered=uncovered,
        multiply_covered=multiply_covered,
        non_edges=sorted(non_edges),
    )


def is_partition_cover(g: Graph, c: CliqueCover) -> bool:
    report = verify_cover(g, c.model_copy(update={"mode": CoverMode.PARTITION}))
    return report.valid
