"""Greedy cover heuristic: best ratio of newly covered edges to clique size."""

import logging

from covers.schemas import CliqueCover, CoverMode
from graphs.cliques import iter_clique_masks
from graphs.schemas import Clique, Graph

logger = logging.getLogger(__name__)


def greedy_selection(edge_masks: list[int], sizes: list[int], full: int) -> list[int]:
    """Indices of the chosen candidates; ties go to the earliest candidate."""
    uncovered = full
    chosen: list[int] = []
    while uncovered:
        best = -1
        best_new = 0
        best_size = 1
        for index, (edges, size) in enumerate(zip(edge_masks, sizes)):
            new = (edges & uncovered).bit_count()
            # new/size > best_new/best_size without division
            if new * best_size > best_new * size:
                best, best_new, best_size = index, new, size
        chosen.append(best)
        uncovered &= ~edge_masks[best]
    return chosen


def clique_edge_masks(
    g: Graph, clique_masks: list[int]
) -> tuple[list[tuple[int, int]], list[int]]:
    """Edge list of g and, per clique, the bitmask of edge indices it contains."""
    edges = g.edges()
    index = {edge: k for k, edge in enumerate(edges)}
    masks: list[int] = []
    for mask in clique_masks:
        members = Clique.from_mask(mask).vertices
        em = 0
        for a, u in enumerate(members):
            for v in members[a + 1:]:
                em |= 1 << index[(u, v)]
        masks.append(em)
    return edges, masks


def greedy_cover(g: Graph) -> CliqueCover:
    if g.edge_count == 0:
        return CliqueCover(cliques=(), mode=CoverMode.COVER)

    clique_masks = list(iter_clique_masks(g, 2))
    edges, edge_masks = clique_edge_masks(g, clique_masks)
    sizes = [m.bit_count() for m in clique_masks]

    chosen = greedy_selection(edge_masks, sizes, (1 << len(edges)) - 1)
    cover = CliqueCover(
        cliques=tuple(Clique.from_mask(clique_masks[i]) for i in chosen),
        mode=CoverMode.COVER,
    )
    logger.debug(
        "[GREEDY] %d cliques, weight %d over %d candidates",
        len(chosen), sum(sizes[i] for i in chosen), len(clique_masks),
    )
    return cover
