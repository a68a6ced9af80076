"""Partition families <-> clique covers of K_t(d).

Cell A_i^j is vertex i*d + j of K_t(d). A ground element x becomes the clique
of cells containing it, and a clique k of a cover becomes ground element k
of every cell it touches. Elements lying in a single cell give a one-vertex
clique, which covers no edge and is dropped.
"""

from common.errors import InvalidArgumentError
from covers.schemas import CliqueCover, CoverMode
from covers.verification import verify_cover
from graphs.generators import balanced_multipartite
from graphs.schemas import Clique, Graph
from partitions.qi import verify_family_property
from partitions.schemas import DPartition, PartitionFamily


def family_to_cover(f: PartitionFamily) -> tuple[Graph, CliqueCover]:
    if f.t == 0:
        raise InvalidArgumentError("an empty family has no multipartite graph")
    report = verify_family_property(f)
    if not report.valid:
        raise InvalidArgumentError(
            f"family property fails ({len(report.violations)} violations, "
            f"first {report.violations[0].model_dump()})"
        )

    g = balanced_multipartite(f.t, f.d)
    cliques: list[Clique] = []
    for x in range(f.ground_n):
        vertices = tuple(
            i * f.d + j
            for i, row in enumerate(f.rows)
            for j, block in enumerate(row.classes)
            if x in block
        )
        if len(vertices) >= 2:
            cliques.append(Clique(vertices=vertices))

    cover = CliqueCover(cliques=tuple(cliques), mode=CoverMode.COVER)
    if not verify_cover(g, cover).multiply_covered:
        cover = cover.model_copy(update={"mode": CoverMode.PARTITION})
    return g, cover


def cover_to_family(t: int, d: int, c: CliqueCover) -> PartitionFamily:
    g = balanced_multipartite(t, d)
    report = verify_cover(g, c)
    if not report.valid:
        raise InvalidArgumentError(
            f"not a valid cover of K_{t}({d}): uncovered={report.uncovered}, "
            f"non_edges={report.non_edges}"
        )

    ground_n = len(c.cliques)
    cells = [[set() for _ in range(d)] for _ in range(t)]
    for k, clique in enumerate(c.cliques):
        for v in clique.vertices:
            cells[v // d][v % d].add(k)

    rows = tuple(DPartition.from_classes(ground_n, row) for row in cells)
    return PartitionFamily(ground_n=ground_n, d=d, rows=rows)
