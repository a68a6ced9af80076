"""Test the exact cover solver, the greedy heuristic and cover verification."""

import networkx as nx
import pytest

from bounds.classical import egp_bound, katona_tarjan_bound
from common.errors import ResourceLimitError
from covers.config import SolverConfig
from covers.greedy import clique_edge_masks, greedy_cover
from covers.schemas import CliqueCover, CoverMode, Objective
from covers.solver import solve_all, solve_cover
from covers.verification import cover_count, cover_weight, is_partition_cover, verify_cover
from graphs.cliques import iter_clique_masks
from graphs.generators import balanced_multipartite, complete_graph, empty_graph
from graphs.io import from_networkx
from graphs.schemas import Graph
from representation.oracle import brute_force_intersection_number


def _cover(*cliques, mode=CoverMode.COVER) -> CliqueCover:
    return CliqueCover.from_vertex_lists([list(c) for c in cliques], mode)


def _exhaustive_optimum(g: Graph, objective: Objective, mode: CoverMode) -> int:
    """Cheapest clique set covering every edge, by relaxation over covered-edge subsets."""
    masks = list(iter_clique_masks(g, 2))
    edges, edge_masks = clique_edge_masks(g, masks)
    costs = [m.bit_count() if objective == Objective.WEIGHT else 1 for m in masks]
    full = (1 << len(edges)) - 1
    unreachable = 2 * len(edges) + 1
    best = [unreachable] * (full + 1)
    best[0] = 0
    # covered sets only grow, so increasing order relaxes each state after its predecessors
    for covered in range(full + 1):
        value = best[covered]
        if value == unreachable:
            continue
        for em, cost in zip(edge_masks, costs):
            if mode == CoverMode.PARTITION and em & covered:
                continue
            grown = covered | em
            if grown != covered and value + cost < best[grown]:
                best[grown] = value + cost
    return best[full]


class TestSolveCover:

    def test_triangle_is_one_clique(self, k3):
        result = solve_cover(k3, Objective.WEIGHT, CoverMode.COVER)
        assert result.optimum == 3
        assert result.witness.vertex_lists() == [[0, 1, 2]]

    def test_four_cycle_weight(self, k22):
        assert solve_cover(k22).optimum == 8

    def test_four_cycle_count(self, k22):
        assert solve_cover(k22, Objective.COUNT).optimum == 4

    def test_k32_cover_and_partition(self, k32):
        assert solve_cover(k32, Objective.WEIGHT, CoverMode.COVER).optimum == 12
        assert solve_cover(k32, Objective.WEIGHT, CoverMode.PARTITION).optimum == 12

    @pytest.mark.parametrize("t,d,expected", [(2, 2, 8), (3, 2, 12), (4, 3, 36)])
    def test_equality_cases(self, t, d, expected):
        g = balanced_multipartite(t, d)
        for mode in CoverMode:
            result = solve_cover(g, Objective.WEIGHT, mode)
            assert result.optimum == expected
            assert verify_cover(g, result.witness).valid
            assert cover_weight(result.witness) == expected

    def test_witness_matches_optimum(self, path3):
        for objective in Objective:
            for mode in CoverMode:
                result = solve_cover(path3, objective, mode)
                assert verify_cover(path3, result.witness).valid
                witness = result.witness
                value = cover_weight(witness) if objective == Objective.WEIGHT else cover_count(witness)
                assert value == result.optimum
                assert result.witness.mode == mode

    def test_edgeless_graph(self):
        result = solve_cover(empty_graph(3))
        assert result.optimum == 0
        assert result.witness.cliques == ()

    def test_deterministic_witness(self, k32):
        first = solve_cover(k32, Objective.COUNT, CoverMode.PARTITION)
        second = solve_cover(k32, Objective.COUNT, CoverMode.PARTITION)
        assert first.witness == second.witness

    def test_witness_is_lexicographically_least(self):
        # cliques in enumeration order: 01, 012, 02, 023, 03, 12, 23
        g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
        cases = {
            (Objective.COUNT, CoverMode.PARTITION): (3, [[0, 1], [0, 2, 3], [1, 2]]),
            (Objective.WEIGHT, CoverMode.PARTITION): (7, [[0, 1], [0, 2, 3], [1, 2]]),
            (Objective.COUNT, CoverMode.COVER): (2, [[0, 1, 2], [0, 2, 3]]),
            (Objective.WEIGHT, CoverMode.COVER): (6, [[0, 1, 2], [0, 2, 3]]),
        }
        for (objective, mode), (optimum, cliques) in cases.items():
            result = solve_cover(g, objective, mode)
            assert result.optimum == optimum
            assert result.witness.vertex_lists() == cliques

    def test_scale_limit(self):
        with pytest.raises(ResourceLimitError):
            solve_cover(complete_graph(21))

    def test_configurable_limit(self):
        with pytest.raises(ResourceLimitError):
            solve_cover(complete_graph(4), config=SolverConfig(limit_n=3))

    def test_solve_all(self, k3, k22):
        assert solve_all(k3).model_dump() == {"cc": 1, "cp": 1, "scc": 3, "scp": 3}
        assert solve_all(k22).model_dump() == {"cc": 4, "cp": 4, "scc": 8, "scp": 8}


class TestSmallGraphProperties:

    def test_optimum_matches_exhaustive_search(self, small_atlas):
        for G in small_atlas:
            if G.number_of_edges() == 0:
                continue
            g = from_networkx(G)
            for objective in Objective:
                for mode in CoverMode:
                    expected = _exhaustive_optimum(g, objective, mode)
                    assert solve_cover(g, objective, mode).optimum == expected

    def test_cover_never_beats_partition(self, small_atlas):
        for G in small_atlas:
            if G.number_of_edges() == 0:
                continue
            g = from_networkx(G)
            p = solve_all(g)
            assert p.scc <= p.scp
            assert p.cc <= p.cp
            assert p.scc <= katona_tarjan_bound(g.n)
            assert p.cc <= egp_bound(g.n)

    def test_greedy_is_never_better_than_exact(self, small_atlas):
        for G in small_atlas:
            if G.number_of_edges() == 0:
                continue
            g = from_networkx(G)
            cover = greedy_cover(g)
            assert verify_cover(g, cover).valid
            assert cover_weight(cover) >= solve_cover(g).optimum

    def test_intersection_number_equals_clique_cover_number(self, small_atlas):
        checked = 0
        for G in small_atlas:
            if G.number_of_nodes() < 2 or not nx.is_connected(G):
                continue
            g = from_networkx(G)
            assert solve_cover(g, Objective.COUNT).optimum == brute_force_intersection_number(g)
            checked += 1
        assert checked == 142


class TestClassicalTightness:

    def test_k22_intersection_number(self, k22):
        assert brute_force_intersection_number(k22) == egp_bound(4) == 4

    def test_four_cycle_sigma_cover(self, cycle4):
        assert solve_cover(cycle4).optimum == katona_tarjan_bound(4) == 8


class TestGreedyCover:

    def test_complete_graph_single_clique(self):
        cover = greedy_cover(complete_graph(4))
        assert cover.vertex_lists() == [[0, 1, 2, 3]]

    def test_four_cycle_uses_edges(self, k22):
        assert cover_weight(greedy_cover(k22)) == 8

    def test_k32_matches_optimum(self, k32):
        assert cover_weight(greedy_cover(k32)) == 12

    def test_edgeless(self):
        assert greedy_cover(empty_graph(2)).cliques == ()


class TestVerifyCover:

    def test_valid_triangle(self, k3):
        assert verify_cover(k3, _cover((0, 1, 2))).valid

    def test_uncovered_edges(self, cycle4):
        report = verify_cover(cycle4, _cover((0, 1), (1, 2)))
        assert not report.valid
        assert report.uncovered == [(0, 3), (2, 3)]

    def test_multiply_covered_in_partition_mode(self, k3):
        report = verify_cover(k3, _cover((0, 1, 2), (0, 1), mode=CoverMode.PARTITION))
        assert not report.valid
        assert report.multiply_covered == [(0, 1)]

    def test_overlap_allowed_in_cover_mode(self, k3):
        report = verify_cover(k3, _cover((0, 1, 2), (0, 1)))
        assert report.valid
        assert report.multiply_covered == [(0, 1)]
        assert not is_partition_cover(k3, _cover((0, 1, 2), (0, 1)))

    def test_non_edge_reported(self, cycle4):
        report = verify_cover(cycle4, _cover((0, 1), (1, 2), (2, 3), (0, 3), (0, 2)))
        assert not report.valid
        assert report.non_edges == [(0, 2)]

    def test_weights(self):
        assert cover_weight(_cover((0, 1, 2))) == 3
        assert cover_weight(_cover((0, 1), (1, 2), (2, 3), (0, 3))) == 8
        assert cover_weight(CliqueCover()) == 0

    def test_rejects_single_vertex_clique(self):
        with pytest.raises(ValueError):
            _cover((0,))
