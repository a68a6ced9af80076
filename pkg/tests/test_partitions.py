"""Test d-partitions, the family property, constructions and exact N(n, d)."""

from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from pydantic import ValidationError

from common.errors import InvalidArgumentError, ResourceLimitError, UnsupportedError
from covers.schemas import CoverMode
from covers.verification import cover_weight, verify_cover
from partitions.config import PartitionsConfig
from partitions.constructions import is_prime_power, mols_family, random_qi_family
from partitions.conversion import cover_to_family, family_to_cover
from partitions.enumeration import (
    clique_size_bound,
    count_d_partitions,
    exact_N,
    family_weight_bound,
    iter_d_partitions,
    maximum_qi_family,
)
from partitions.qi import (
    complete_family,
    family_weight,
    is_qualitatively_independent,
    verify_family_property,
)
from partitions.schemas import DPartition, FamilyPayload, PartitionFamily


def _part(n: int, *classes) -> DPartition:
    return DPartition.from_classes(n, [list(c) for c in classes])


def _family(n: int, d: int, *rows) -> PartitionFamily:
    return PartitionFamily(ground_n=n, d=d, rows=tuple(_part(n, *row) for row in rows))


def _pairwise_qi(f: PartitionFamily) -> bool:
    return all(is_qualitatively_independent(p, q) for p, q in combinations(f.rows, 2))


class TestQualitativeIndependence:

    def test_crossing_splits(self):
        assert is_qualitatively_independent(_part(4, {0, 1}, {2, 3}), _part(4, {0, 2}, {1, 3}))

    def test_identical_partitions(self):
        p = _part(4, {0, 1}, {2, 3})
        assert not is_qualitatively_independent(p, p)

    def test_disjoint_singletons(self):
        assert not is_qualitatively_independent(_part(4, {0}, {1, 2, 3}), _part(4, {1}, {0, 2, 3}))

    def test_rejects_partial(self):
        partial = _part(4, {0}, {1})
        assert partial.partial
        with pytest.raises(InvalidArgumentError):
            is_qualitatively_independent(partial, _part(4, {0, 1}, {2, 3}))

    def test_rejects_ground_mismatch(self):
        with pytest.raises(InvalidArgumentError):
            is_qualitatively_independent(_part(4, {0, 1}, {2, 3}), _part(3, {0}, {1, 2}))


class TestFamilyProperty:

    def test_crossing_rows(self):
        assert verify_family_property(_family(4, 2, ({0, 1}, {2, 3}), ({0, 2}, {1, 3}))).valid

    def test_swapped_singletons(self):
        report = verify_family_property(_family(2, 2, ({0}, {1}), ({1}, {0})))
        assert not report.valid
        kinds = {(v.i, v.j, v.i2, v.j2): v.kind for v in report.violations}
        assert kinds[(0, 0, 1, 0)] == "should-intersect"

    def test_empty_cell_is_a_violation(self):
        f = _family(3, 2, ({0, 1}, ()), ({0}, {1}))
        assert not verify_family_property(f).valid

    def test_agrees_with_pairwise_independence(self):
        full = [p for p in iter_d_partitions(5, 2)]
        families = [
            PartitionFamily(
                ground_n=5,
                d=2,
                rows=tuple(
                    DPartition(
                        ground_n=5,
                        classes=tuple(frozenset(x for x in range(5) if m >> x & 1) for m in masks),
                    )
                    for masks in pair
                ),
            )
            for pair in combinations(full, 2)
        ]
        for f in families:
            assert verify_family_property(f).valid == _pairwise_qi(f)

    def test_random_families_are_valid(self):
        for seed in range(5):
            f = random_qi_family(12, 3, 8, seed)
            assert verify_family_property(f).valid
            assert _pairwise_qi(f)


class TestCompleteFamily:

    def test_extends_last_class(self):
        f = _family(5, 2, ({0, 1}, {2, 3}), ({0, 2}, {1, 3, 4}))
        completed = complete_family(f)
        assert completed.rows[0].classes == (frozenset({0, 1}), frozenset({2, 3, 4}))
        assert completed.rows[1].classes == f.rows[1].classes
        assert completed.is_full
        assert _pairwise_qi(completed)

    def test_full_family_trimmed_to_used_elements(self):
        f = _family(6, 2, ({0, 1}, {2, 3}), ({0, 2}, {1, 3, 4}))
        completed = complete_family(f)
        assert completed.ground_n == 5

    def test_relabels_gaps(self):
        f = _family(6, 2, ({0, 5}, {2, 3}), ({0, 2}, {3, 5}))
        completed = complete_family(f)
        assert completed.ground_n == 4
        assert completed.rows[0].class_lists() == [[0, 3], [1, 2]]

    def test_never_shrinks_cells(self):
        f = _family(5, 2, ({0, 1}, {2, 3}), ({0, 2}, {1, 3, 4}), ({0, 3}, {1, 2, 4}))
        assert verify_family_property(f).valid
        completed = complete_family(f)
        for row, done in zip(f.rows, completed.rows):
            assert all(a <= b for a, b in zip(row.classes, done.classes))
        assert verify_family_property(completed).valid
        assert completed.rows[0].classes[1] == frozenset({2, 3, 4})

    def test_seeded_partial_families_complete_to_independent_rows(self, partial_families):
        for f in partial_families:
            completed = complete_family(f)
            used = set().union(*(block for row in f.rows for block in row.classes))
            assert completed.ground_n == len(used)
            assert completed.is_full
            assert _pairwise_qi(completed)
            for row, done in zip(f.rows, completed.rows):
                assert [len(block) for block in row.classes[:-1]] == [
                    len(block) for block in done.classes[:-1]
                ]

    def test_relabelling_shifts_classes(self):
        # X = {1, 2, 3} is relabelled to {0, 1, 2}
        completed = complete_family(_family(4, 2, ({1}, {2, 3})))
        assert completed.ground_n == 3
        assert completed.rows[0].class_lists() == [[0], [1, 2]]

        completed = complete_family(_family(5, 2, ({1, 2}, {3, 4}), ({1, 3}, {2, 4})))
        assert completed.rows[0].class_lists() == [[0, 1], [2, 3]]
        assert completed.rows[1].class_lists() == [[0, 2], [1, 3]]

    def test_rejects_invalid_family(self):
        with pytest.raises(InvalidArgumentError):
            complete_family(_family(2, 2, ({0}, {1}), ({1}, {0})))


class TestRandomFamily:

    def test_four_points_reach_three_rows(self):
        sizes = [random_qi_family(4, 2, 3, seed).t for seed in range(20)]
        assert max(sizes) == 3
        assert all(s <= 3 for s in sizes)

    def test_d_points_give_one_row(self):
        assert random_qi_family(3, 3, 2, seed=0).t == 1

    def test_pairwise_independent(self):
        f = random_qi_family(20, 2, 16, seed=1)
        assert f.t <= 16
        assert _pairwise_qi(f)

    def test_deterministic(self):
        assert random_qi_family(12, 2, 10, seed=9) == random_qi_family(12, 2, 10, seed=9)

    def test_rejects_small_ground_set(self):
        with pytest.raises(InvalidArgumentError):
            random_qi_family(2, 3, 2, seed=0)

    def test_rejects_d_below_two(self):
        with pytest.raises(InvalidArgumentError):
            random_qi_family(4, 1, 2, seed=0)


class TestMolsFamily:

    def test_order_two(self):
        f = mols_family(2)
        keys = sorted(row.canonical_key() for row in f.rows)
        assert keys == [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]

    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_classes_meet_in_one_point(self, d):
        f = mols_family(d)
        assert f.t == d + 1
        for p, q in combinations(f.rows, 2):
            assert all(len(a & b) == 1 for a in p.classes for b in q.classes)

    def test_rejects_composite(self):
        with pytest.raises(UnsupportedError):
            mols_family(4)

    def test_rejects_small_d(self):
        with pytest.raises(InvalidArgumentError):
            mols_family(1)

    def test_weights(self):
        assert family_weight(mols_family(2)) == 12
        assert family_weight(mols_family(3)) == 36
        assert family_weight(PartitionFamily(ground_n=0, d=2)) == 0

    def test_prime_powers(self):
        assert [q for q in range(2, 17) if is_prime_power(q)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


class TestExactN:

    @pytest.mark.parametrize("n,expected", [(4, 3), (5, 4)])
    def test_small_binary_values(self, n, expected):
        assert exact_N(n, 2) == expected

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_d_points(self, d):
        assert exact_N(d, d) == 1

    def test_binary_formula_and_monotone(self):
        values = [exact_N(n, 2) for n in range(2, 13)]
        assert values == [comb(n - 1, (n + 1) // 2) for n in range(2, 13)]
        assert values == sorted(values)

    @pytest.mark.parametrize("n,d", [(10, 2), (11, 2), (12, 3)])
    def test_independent_families_fit_the_weight_bound(self, n, d):
        for seed in range(10):
            f = random_qi_family(n, d, 20, seed)
            assert sum(family_weight_bound(row.masks, n) for row in f.rows) <= 1

    def test_grid_family_fits_the_weight_bound(self):
        f = mols_family(3)
        assert sum(family_weight_bound(row.masks, f.ground_n) for row in f.rows) <= 1

    def test_clique_size_bound(self):
        assert clique_size_bound([Fraction(1, 3)] * 4) == 3
        assert clique_size_bound([Fraction(1, 2), Fraction(1, 4), Fraction(1, 4), Fraction(1, 8)]) == 3
        assert clique_size_bound([]) == 0

    def test_binary_bound_is_met(self):
        weights = [family_weight_bound(p, 6) for p in iter_d_partitions(6, 2)]
        assert clique_size_bound(weights) == exact_N(6, 2) == 10

    def test_witness_is_independent(self):
        f = maximum_qi_family(6, 2)
        assert f.t == 10
        assert _pairwise_qi(f)

    def test_budget(self):
        with pytest.raises(ResourceLimitError):
            exact_N(6, 2, PartitionsConfig(enumeration_budget=10))

    def test_counts(self):
        assert count_d_partitions(4, 2) == 7
        assert count_d_partitions(5, 3) == 25
        assert len(set(iter_d_partitions(5, 3))) == 25

    def test_rejects_d_above_n(self):
        with pytest.raises(InvalidArgumentError):
            exact_N(2, 3)


class TestFamilyToCover:

    def test_mols_two_covers_k32(self):
        g, cover = family_to_cover(mols_family(2))
        assert (g.n, g.edge_count) == (6, 12)
        assert verify_cover(g, cover).valid
        assert cover_weight(cover) == 12
        assert cover.mode == CoverMode.PARTITION

    def test_mols_three_gives_equality_case(self):
        g, cover = family_to_cover(mols_family(3))
        assert g.n == 12
        assert verify_cover(g, cover).valid
        assert cover_weight(cover) == 36

    def test_single_row_drops_singletons(self):
        g, cover = family_to_cover(_family(3, 3, ({0}, {1}, {2})))
        assert g.edge_count == 0
        assert cover.cliques == ()

    def test_weight_matches_family_weight(self):
        for seed in range(5):
            f = random_qi_family(10, 2, 6, seed)
            if f.t < 2:
                continue
            g, cover = family_to_cover(f)
            assert verify_cover(g, cover).valid
            assert cover_weight(cover) == family_weight(f)

    def test_rejects_invalid_family(self):
        with pytest.raises(InvalidArgumentError):
            family_to_cover(_family(2, 2, ({0}, {1}), ({1}, {0})))

    def test_cover_back_to_family(self):
        f = mols_family(3)
        _, cover = family_to_cover(f)
        back = cover_to_family(4, 3, cover)
        assert verify_family_property(back).valid
        assert family_weight(back) == family_weight(f) == 36


class TestFamilySchemas:

    def test_full_partition_must_cover(self):
        with pytest.raises(ValidationError):
            DPartition(ground_n=4, classes=(frozenset({0}), frozenset({1})))

    def test_classes_must_be_disjoint(self):
        with pytest.raises(ValidationError):
            DPartition(ground_n=3, classes=(frozenset({0, 1}), frozenset({1, 2})), partial=True)

    def test_payload_shape(self):
        with pytest.raises(ValidationError):
            FamilyPayload(n=4, t=2, d=2, rows=[[[0, 1], [2, 3]]])

    def test_payload_round_trip(self):
        f = mols_family(3)
        assert f.to_payload().to_family() == f
