"""Clique covers <-> set intersection representations.

A cover gives a representation by labelling each vertex with the cliques that
contain it; a representation gives a cover because the carriers of any one
label are pairwise adjacent. Both directions preserve weight.
"""

from itertools import combinations

from common.errors import InvalidArgumentError
from covers.schemas import CliqueCover, CoverMode
from covers.verification import verify_cover
from graphs.schemas import Clique, Graph
from representation.schemas import Representation, RepresentationReport


def cover_to_representation(g: Graph, c: CliqueCover) -> Representation:
    report = verify_cover(g, c)
    if not report.valid:
        raise InvalidArgumentError(
            f"not a valid {c.mode.value}: uncovered={report.uncovered}, "
            f"non_edges={report.non_edges}, multiply_covered={report.multiply_covered}"
        )
    rows: list[set[int]] = [set() for _ in range(g.n)]
    for label, clique in enumerate(c.cliques):
        for v in clique.vertices:
            rows[v].add(label)
    return Representation(labels=tuple(frozenset(row) for row in rows))


def intersection_graph(r: Representation) -> Graph:
    edges = [(u, v) for u, v in combinations(range(r.n), 2) if r.labels[u] & r.labels[v]]
    return Graph.from_edges(r.n, edges)


def is_partition_representation(r: Representation) -> bool:
    return all(len(a & b) <= 1 for a, b in combinations(r.labels, 2))


def representation_to_cover(r: Representation) -> tuple[Graph, CliqueCover]:
    """Intersection graph plus one clique per label carried by >= 2 vertices."""
    carriers: dict[int, list[int]] = {}
    for v, row in enumerate(r.labels):
        for label in row:
            carriers.setdefault(label, []).append(v)

    cliques = tuple(
        Clique(vertices=tuple(carriers[label]))
        for label in sorted(carriers)
        if len(carriers[label]) >= 2
    )
    mode = CoverMode.PARTITION if is_partition_representation(r) else CoverMode.COVER
    return intersection_graph(r), CliqueCover(cliques=cliques, mode=mode)


def verify_representation(g: Graph, r: Representation) -> RepresentationReport:
    if r.n != g.n:
        raise InvalidArgumentError(
            f"representation labels {r.n} vertices, graph has {g.n}"
        )
    wrong = [
        (u, v)
        for u, v in combinations(range(g.n), 2)
        if bool(r.labels[u] & r.labels[v]) != g.has_edge(u, v)
    ]
    return RepresentationReport(valid=not wrong, wrong_pairs=wrong)


def representation_weight(r: Representation) -> int:
    return r.weight


def universe_size(r: Representation) -> int:
    return r.universe_size
