"""Brute-force intersection number, independent of the cover solver.

Tries label counts k = 0, 1, 2, ... and every k-subset of admissible label
carriers. A carrier is a vertex set whose members are pairwise adjacent (any
other set would create a false adjacency); enlarging a carrier inside the
graph never breaks a representation, so only inclusion-maximal carriers are
tried. Carriers come from a scan over all 2^n vertex subsets.
"""

from itertools import combinations

from common.errors import ResourceLimitError
from graphs.schemas import Graph

ORACLE_MAX_N = 7


def _admissible(g: Graph, subset: int) -> bool:
    rest = subset
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if (subset & ~low) & ~g.adjacency[v]:
            return False
    return True


def _pairs(subset: int, n: int) -> int:
    """Bitmask over pair slots u*n+v of the pairs inside subset."""
    members = [v for v in range(subset.bit_length()) if subset >> v & 1]
    mask = 0
    for u, v in combinations(members, 2):
        mask |= 1 << (u * n + v)
    return mask


def brute_force_intersection_number(g: Graph, max_n: int = ORACLE_MAX_N) -> int:
    if g.n > max_n:
        raise ResourceLimitError(f"intersection-number oracle limited to n <= {max_n}, got n={g.n}")

    target = 0
    for u, v in g.edges():
        target |= 1 << (u * g.n + v)
    if not target:
        return 0

    admissible = [s for s in range(1, 1 << g.n) if s.bit_count() >= 2 and _admissible(g, s)]
    maximal = [s for s in admissible if not any(s != o and s & o == s for o in admissible)]
    coverage = [_pairs(s, g.n) for s in maximal]

    for k in range(1, len(maximal) + 1):
        for chosen in combinations(coverage, k):
            union = 0
            for pairs in chosen:
                union |= pairs
            if union == target:
                return k
    raise RuntimeError("maximal carriers failed to cover every edge")
