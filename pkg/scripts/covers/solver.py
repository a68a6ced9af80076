"""Exact clique cover / partition search.

Branch and bound over all cliques of size >= 2:
  - branch on the uncovered edge lying in the fewest usable cliques,
    trying larger cliques first, then lexicographic order;
  - prune with an admissible bound on the cost of covering the remaining
    edges: a clique through v covers at most omega - 1 edges at v, so v
    lies in at least ceil(uncovered_degree(v) / (omega - 1)) more cliques.
The incumbent starts as the edge-by-edge partition (valid in both modes),
improved by the greedy cover in cover mode.

Once the optimum is known, a second pass walks clique sets in increasing
lexicographic order of their sorted clique indices under the same bound, so
the witness is the lexicographically least optimal cover. Clique indices
follow enumeration order.
"""

import logging

from common.errors import ResourceLimitError
from covers.config import SolverConfig
from covers.greedy import clique_edge_masks, greedy_selection
from covers.schemas import (
    CliqueCover,
    CoverMode,
    GraphParameters,
    Objective,
    SolveResult,
)
from graphs.cliques import iter_clique_masks
from graphs.schemas import Clique, Graph

logger = logging.getLogger(__name__)


class CoverSolver:
    """One search instance; holds all mutable search state."""

    def __init__(
        self,
        g: Graph,
        objective: Objective = Objective.WEIGHT,
        mode: CoverMode = CoverMode.COVER,
        config: SolverConfig | None = None,
    ) -> None:
        self._g = g
        self._objective = Objective(objective)
        self._mode = CoverMode(mode)
        self._config = config or SolverConfig()
        self._nodes = 0
        self._best_value = 0
        self._best: list[int] = []

    def solve(self) -> SolveResult:
        g = self._g
        if g.n > self._config.limit_n:
            raise ResourceLimitError(
                f"exact solver limited to n <= {self._config.limit_n}, got n={g.n}"
            )

        if g.edge_count == 0:
            return self._result(0, [], [])

        self._clique_masks = list(iter_clique_masks(g, 2))
        edges, self._edge_masks = clique_edge_masks(g, self._clique_masks)
        self._sizes = [m.bit_count() for m in self._clique_masks]
        self._costs = self._sizes if self._objective == Objective.WEIGHT else [1] * len(self._sizes)
        full = (1 << len(edges)) - 1

        omega = max(self._sizes)
        self._reach = omega - 1
        self._incident = [0] * g.n
        for k, (u, v) in enumerate(edges):
            self._incident[u] |= 1 << k
            self._incident[v] |= 1 << k

        self._by_edge: list[list[int]] = [[] for _ in edges]
        for c, em in enumerate(self._edge_masks):
            rest = em
            while rest:
                low = rest & -rest
                self._by_edge[low.bit_length() - 1].append(c)
                rest ^= low
        for candidates in self._by_edge:
            candidates.sort(key=lambda c: (-self._sizes[c], c))
        self._edge_order = sorted(range(len(edges)), key=lambda k: (len(self._by_edge[k]), k))

        self._seed_incumbent(edges, full)
        self._nodes = 0
        self._search(full, 0, [])
        self._last_clique = [max(candidates) for candidates in self._by_edge]
        self._lex_search(full, 0, -1, [])

        logger.info(
            "[SOLVE] %s/%s optimum %d on n=%d, %d edges, %d cliques, %d nodes",
            self._objective.value, self._mode.value, self._best_value,
            g.n, len(edges), len(self._clique_masks), self._nodes,
        )
        return self._result(self._best_value, self._best, self._clique_masks)

    def _seed_incumbent(self, edges: list[tuple[int, int]], full: int) -> None:
        pair_index = {m: c for c, m in enumerate(self._clique_masks) if m.bit_count() == 2}
        self._best = [pair_index[1 << u | 1 << v] for u, v in edges]
        self._best_value = sum(self._costs[c] for c in self._best)

        if self._mode == CoverMode.COVER:
            chosen = greedy_selection(self._edge_masks, self._sizes, full)
            value = sum(self._costs[c] for c in chosen)
            if value < self._best_value:
                self._best, self._best_value = chosen, value

    def _lower_bound(self, uncovered: int) -> int:
        """A clique through v covers at most omega - 1 of v's edges."""
        per_vertex = [
            -(-(uncovered & inc).bit_count() // self._reach) for inc in self._incident
        ]
        if self._objective == Objective.WEIGHT:
            return sum(per_vertex)
        edges_per_clique = self._reach * (self._reach + 1) // 2
        return max(max(per_vertex), -(-uncovered.bit_count() // edges_per_clique))

    def _usable(self, c: int, uncovered: int) -> bool:
        if self._mode == CoverMode.PARTITION:
            return self._edge_masks[c] & uncovered == self._edge_masks[c]
        return True

    def _branch_edge(self, uncovered: int) -> tuple[int, list[int]]:
        if self._mode == CoverMode.COVER:
            for k in self._edge_order:
                if uncovered >> k & 1:
                    return k, self._by_edge[k]

        best_edge, best_options = -1, []
        rest = uncovered
        while rest:
            low = rest & -rest
            k = low.bit_length() - 1
            rest ^= low
            options = [c for c in self._by_edge[k] if self._usable(c, uncovered)]
            if best_edge < 0 or len(options) < len(best_options):
                best_edge, best_options = k, options
                if not options:
                    break
        return best_edge, best_options

    def _search(self, uncovered: int, value: int, chosen: list[int]) -> None:
        self._nodes += 1
        if not uncovered:
            if value < self._best_value:
                self._best_value = value
                self._best = list(chosen)
            return
        if value + self._lower_bound(uncovered) >= self._best_value:
            return

        _, options = self._branch_edge(uncovered)
        for c in options:
            chosen.append(c)
            self._search(uncovered & ~self._edge_masks[c], value + self._costs[c], chosen)
            chosen.pop()

    def _lex_search(self, uncovered: int, value: int, last: int, chosen: list[int]) -> bool:
        """Depth-first over increasing clique indices; the first cover completed is lex-least."""
        self._nodes += 1
        if not uncovered:
            self._best = list(chosen)
            return True
        if value + self._lower_bound(uncovered) > self._best_value:
            return False

        # skipping past an edge's last clique would leave it uncovered for good
        ceiling = len(self._clique_masks) - 1
        rest = uncovered
        while rest:
            low = rest & -rest
            ceiling = min(ceiling, self._last_clique[low.bit_length() - 1])
            rest ^= low

        for c in range(last + 1, ceiling + 1):
            edge_mask = self._edge_masks[c]
            cost = self._costs[c]
            if not edge_mask & uncovered or not self._usable(c, uncovered):
                continue
            if value + cost > self._best_value:
                continue
            chosen.append(c)
            if self._lex_search(uncovered & ~edge_mask, value + cost, c, chosen):
                return True
            chosen.pop()
        return False

    def _result(self, optimum: int, chosen: list[int], clique_masks: list[int]) -> SolveResult:
        witness = CliqueCover(
            cliques=tuple(Clique.from_mask(clique_masks[c]) for c in sorted(chosen)),
            mode=self._mode,
        )
        return SolveResult(
            optimum=optimum,
            witness=witness,
            nodes_explored=self._nodes,
            objective=self._objective,
            mode=self._mode,
        )


def solve_cover(
    g: Graph,
    objective: Objective = Objective.WEIGHT,
    mode: CoverMode = CoverMode.COVER,
    config: SolverConfig | None = None,
) -> SolveResult:
    return CoverSolver(g, objective, mode, config).solve()


def solve_all(g: Graph, config: SolverConfig | None = None) -> GraphParameters:
    def optimum(objective: Objective, mode: CoverMode) -> int:
        return solve_cover(g, objective, mode, config).optimum

    return GraphParameters(
        cc=optimum(Objective.COUNT, CoverMode.COVER),
        cp=optimum(Objective.COUNT, CoverMode.PARTITION),
        scc=optimum(Objective.WEIGHT, CoverMode.COVER),
        scp=optimum(Objective.WEIGHT, CoverMode.PARTITION),
    )
