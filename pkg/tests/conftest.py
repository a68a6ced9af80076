"""Shared fixtures for tests."""

import sys
from pathlib import Path

import pytest

# Make scripts/ importable (same as the CLI does at runtime)
SCRIPTS_DIR = Path(__file__).parent.parent / "scripts"
if str(SCRIPTS_DIR) not in sys.path:
    sys.path.insert(0, str(SCRIPTS_DIR))

from graphs.generators import balanced_multipartite, complete_graph, complete_multipartite  # noqa: E402
from graphs.schemas import Graph  # noqa: E402


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def k22() -> Graph:
    """C4 as K_{2,2}: parts {0,1} and {2,3}."""
    return complete_multipartite([2, 2])


@pytest.fixture
def cycle4() -> Graph:
    """C4 as the cycle 0-1-2-3-0."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def path3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def k32() -> Graph:
    """K_3(2)."""
    return balanced_multipartite(3, 2)


@pytest.fixture
def small_atlas():
    """networkx atlas graphs with 1..6 vertices."""
    import networkx as nx

    return [G for G in nx.graph_atlas_g() if 1 <= G.number_of_nodes() <= 6]


def _thin_family(f, seed: int):
    """Drop seeded elements from cells of f while the family property still holds."""
    import numpy as np

    from partitions.qi import verify_family_property
    from partitions.schemas import DPartition, PartitionFamily

    def build(cells):
        rows = tuple(DPartition.from_classes(f.ground_n, row) for row in cells)
        return PartitionFamily(ground_n=f.ground_n, d=f.d, rows=rows)

    rng = np.random.default_rng(seed)
    cells = [[set(block) for block in row.classes] for row in f.rows]
    slots = [(i, j, x) for i, row in enumerate(cells) for j, block in enumerate(row) for x in sorted(block)]
    target = 1 + seed % 5
    removed = 0
    for k in rng.permutation(len(slots)):
        i, j, x = slots[k]
        cells[i][j].discard(x)
        if verify_family_property(build(cells)).valid:
            removed += 1
            if removed == target:
                break
        else:
            cells[i][j].add(x)
    return build(cells)


@pytest.fixture(scope="session")
def partial_families():
    """200 seeded families with the family property that are not full partitions."""
    from partitions.constructions import random_qi_family

    families = []
    seed = 0
    while len(families) < 200:
        d = 2 + seed % 2
        n = 10 + seed % 7 if d == 2 else 14 + seed % 5
        f = random_qi_family(n, d, 2 + seed % 7, seed)
        if f.t >= 2:
            thinned = _thin_family(f, seed)
            if not thinned.is_full:
                families.append(thinned)
        seed += 1
    return families
