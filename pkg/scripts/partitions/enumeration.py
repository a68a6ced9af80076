"""Exact N(n, d) by exhaustive enumeration.

Vertices of the compatibility graph are the full d-partitions of [n] with
class order forgotten; edges join qualitatively independent pairs. N(n, d)
is its clique number.

Every partition gets a weight such that the weights of any independent
family sum to at most 1. Let B be the class holding element 0:
  - d = 2: the other class A is, together with its family, an intersecting
    antichain on the other n - 1 = m elements, so the inequality for those
    families applies: 1/C(m - 1, |A| - 1) when |A| <= m/2, else 1/C(m, |A|);
  - d >= 3: the pairs (A, B - {0}) for the smallest class A != B satisfy the
    two-families hypothesis, giving 1/C(|A| + |B| - 1, |A|).
The cheapest weights bound the clique size from above. A greedy clique taken
in weight order that reaches this bound is maximum; otherwise networkx runs
the exact maximum clique search. The d = 2 bound is always met, so binary
values are immediate up to the enumeration budget; d = 3 relies on the
search, which stays at desk scale up to n around 9.
"""

import logging
from collections.abc import Iterator
from fractions import Fraction
from functools import cache
from math import comb

import networkx as nx

from common.errors import InvalidArgumentError, ResourceLimitError
from partitions.config import PartitionsConfig
from partitions.constructions import family_from_masks
from partitions.qi import masks_independent
from partitions.schemas import PartitionFamily

logger = logging.getLogger(__name__)


@cache
def count_d_partitions(n: int, d: int) -> int:
    """Stirling number of the second kind S(n, d)."""
    if n == d:
        return 1
    if d == 0 or d > n:
        return 0
    return d * count_d_partitions(n - 1, d) + count_d_partitions(n - 1, d - 1)


def iter_d_partitions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Class bitmasks of every d-partition of [n], classes ordered by minimum element."""
    block_of = [0] * n

    def place(x: int, used: int) -> Iterator[tuple[int, ...]]:
        if used + (n - x) < d:
            return
        if x == n:
            masks = [0] * d
            for element, block in enumerate(block_of):
                masks[block] |= 1 << element
            yield tuple(masks)
            return
        for block in range(min(used + 1, d)):
            block_of[x] = block
            yield from place(x + 1, max(used, block + 1))

    yield from place(0, 0)


def family_weight_bound(masks: tuple[int, ...], n: int) -> Fraction:
    """Weight of one partition; an independent family has total weight <= 1."""
    zero_class = next(c for c in masks if c & 1)
    others = [c.bit_count() for c in masks if not c & 1]
    if len(masks) == 2:
        m, a = n - 1, others[0]
        return Fraction(1, comb(m - 1, a - 1) if 2 * a <= m else comb(m, a))
    a = min(others)
    return Fraction(1, comb(a + zero_class.bit_count() - 1, a))


def clique_size_bound(weights: list[Fraction]) -> int:
    total, size = Fraction(0), 0
    for w in sorted(weights):
        if total + w > 1:
            break
        total += w
        size += 1
    return size


def _greedy_clique(candidates: list[tuple[int, ...]], order: list[int]) -> list[int]:
    chosen: list[int] = []
    for k in order:
        if all(masks_independent(candidates[k], candidates[c]) for c in chosen):
            chosen.append(k)
    return chosen


def _search_clique(candidates: list[tuple[int, ...]]) -> list[int]:
    G = nx.Graph()
    G.add_nodes_from(range(len(candidates)))
    G.add_edges_from(
        (a, b)
        for a in range(len(candidates))
        for b in range(a + 1, len(candidates))
        if masks_independent(candidates[a], candidates[b])
    )
    clique, _ = nx.max_weight_clique(G, weight=None)
    return clique


def maximum_qi_family(
    n: int, d: int, config: PartitionsConfig | None = None
) -> PartitionFamily:
    if d < 1 or n < d:
        raise InvalidArgumentError(f"need 1 <= d <= n, got n={n}, d={d}")

    config = config or PartitionsConfig()
    total = count_d_partitions(n, d)
    if total > config.enumeration_budget:
        raise ResourceLimitError(
            f"{total} {d}-partitions of a {n}-set exceed the enumeration budget "
            f"of {config.enumeration_budget}"
        )

    candidates = list(iter_d_partitions(n, d))
    if d == 1:
        clique, certified = [0], True
    else:
        weights = [family_weight_bound(c, n) for c in candidates]
        order = sorted(range(len(candidates)), key=lambda k: (weights[k], k))
        clique = _greedy_clique(candidates, order)
        certified = len(clique) == clique_size_bound(weights)
        if not certified:
            clique = _search_clique(candidates)

    logger.info(
        "[EXACT-N] N(%d,%d) = %d over %d partitions (%s)",
        n, d, len(clique), len(candidates), "weight bound met" if certified else "clique search",
    )
    return family_from_masks(n, d, [candidates[k] for k in sorted(clique)])


def exact_N(n: int, d: int, config: PartitionsConfig | None = None) -> int:
    return maximum_qi_family(n, d, config).t
