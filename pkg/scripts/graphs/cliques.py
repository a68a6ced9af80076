"""Exhaustive clique enumeration.

Every clique (maximal or not) is listed: optimal weighted covers may use
non-maximal cliques. Output order is lexicographic on sorted vertex tuples,
which is the preorder of extending a clique by strictly larger vertices.
The search space is exponential; n around 24 is the practical ceiling.
"""

from collections.abc import Iterator

from common.errors import InvalidArgumentError
from graphs.schemas import Clique, Graph


def iter_clique_masks(g: Graph, min_size: int) -> Iterator[int]:
    """Yield clique bitmasks of size >= min_size in lexicographic order."""
    if not 1 <= min_size <= g.n:
        raise InvalidArgumentError(f"min_size must be in 1..{g.n}, got {min_size}")

    adjacency = g.adjacency

    def extend(mask: int, size: int, candidates: int) -> Iterator[int]:
        if size >= min_size:
            yield mask
        while candidates:
            if size + candidates.bit_count() < min_size:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            # only larger vertices keep the tuple sorted
            yield from extend(mask | low, size + 1, candidates & adjacency[v])

    for v in range(g.n):
        higher = adjacency[v] >> (v + 1) << (v + 1)
        yield from extend(1 << v, 1, higher)


def enumerate_cliques(g: Graph, min_size: int) -> list[Clique]:
    return [Clique.from_mask(mask) for mask in iter_clique_masks(g, min_size)]


def clique_number(g: Graph) -> int:
    return max(mask.bit_count() for mask in iter_clique_masks(g, 1))
