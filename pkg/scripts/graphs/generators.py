"""Graph constructors."""

from collections.abc import Sequence

from common.errors import InvalidArgumentError
from graphs.schemas import Graph


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; part k occupies one contiguous vertex block, in the given order."""
    if not sizes:
        raise InvalidArgumentError("complete_multipartite needs at least one part")
    if any(s < 1 for s in sizes):
        raise InvalidArgumentError(f"part sizes must be >= 1, got {list(sizes)}")

    n = sum(sizes)
    everything = (1 << n) - 1
    rows: list[int] = []
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        rows.extend([everything & ~block] * size)
        start += size
    return Graph(n=n, adjacency=tuple(rows))


def balanced_multipartite(t: int, d: int) -> Graph:
    """K_t(d); vertex i*d + j is cell j of part i."""
    if t < 1 or d < 1:
        raise InvalidArgumentError(f"K_t(d) needs t, d >= 1, got t={t}, d={d}")
    return complete_multipartite([d] * t)


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidArgumentError(f"graph needs at least one vertex, got n={n}")
    return Graph(n=n, adjacency=(0,) * n)


def complete_graph(n: int) -> Graph:
    return complete_multipartite([1] * n) if n >= 1 else empty_graph(n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])
