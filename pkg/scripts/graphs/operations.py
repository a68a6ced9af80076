from graphs.schemas import Graph


def complement(g: Graph) -> Graph:
    everything = (1 << g.n) - 1
    rows = tuple(everything & ~mask & ~(1 << v) for v, mask in enumerate(g.adjacency))
    return Graph(n=g.n, adjacency=rows)


def max_degree(g: Graph) -> int:
    return max(mask.bit_count() for mask in g.adjacency)
