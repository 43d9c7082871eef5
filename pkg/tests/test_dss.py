"""DSS engine tests: frozen examples, incremental/full equivalence, and
agreement with the naive hash-set oracle."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arlabel.dss import (
    MAX_TOTAL,
    DssSet,
    SumBitset,
    can_extend,
    enumerate_dss_sets,
    is_dss,
    subset_sum_collision,
    sum_bitset,
)
from conftest import naive_is_dss


class TestIsDss:
    def test_powers_of_two(self):
        assert is_dss({1, 2, 4, 8}) is True

    def test_small_collision(self):
        assert is_dss({1, 2, 3}) is False

    def test_conway_guy_four(self):
        assert is_dss({3, 5, 6, 7}) is True

    def test_empty_is_trivially_dss(self):
        assert is_dss([]) is True

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate"):
            is_dss([2, 2, 3])

    def test_rejects_non_positive(self):
        with pytest.raises(ValueError, match="positive"):
            is_dss([0, 1])
        with pytest.raises(ValueError, match="positive"):
            is_dss([-3, 1])

    def test_rejects_overflowing_total(self):
        with pytest.raises(OverflowError):
            is_dss([2**62, 2**62 - 1, 2])

    def test_exhaustive_agreement_with_naive_oracle(self):
        universe = list(range(1, 12))
        for mask in range(1, 1 << len(universe)):
            elems = [universe[i] for i in range(len(universe)) if mask >> i & 1]
            assert is_dss(elems) == naive_is_dss(elems), elems

    @settings(max_examples=150)
    @given(st.sets(st.integers(min_value=1, max_value=300), min_size=1, max_size=12))
    def test_random_agreement_with_naive_oracle(self, elems):
        assert is_dss(elems) == naive_is_dss(elems)

    @settings(max_examples=100)
    @given(st.data())
    def test_subsets_of_dss_sets_are_dss(self, data):
        elems = data.draw(
            st.sets(st.integers(min_value=1, max_value=500), min_size=1, max_size=10)
        )
        if not is_dss(elems):
            return
        subset = data.draw(st.sets(st.sampled_from(sorted(elems))))
        assert is_dss(subset) is True


class TestSumBitset:
    def test_empty_set_has_only_sum_zero(self):
        bs = sum_bitset([])
        assert bs.bits == 1
        assert bs.total == 0
        assert bs.popcount() == 1

    def test_two_elements_all_sums(self):
        bs = sum_bitset([1, 2])
        assert bs.bits == 0b1111  # sums 0, 1, 2, 3
        assert bs.total == 3

    def test_collision_shows_in_popcount(self):
        bs = sum_bitset([1, 2, 3])
        assert sorted(
            s for s in range(bs.total + 1) if bs.bits >> s & 1
        ) == [0, 1, 2, 3, 4, 5, 6]
        assert bs.popcount() == 7 < 2**3

    def test_bit_zero_always_set_and_top_bit_is_total(self):
        for elems in ([], [4], [1, 2, 4], [3, 5, 6, 7]):
            bs = sum_bitset(elems)
            assert bs.bits & 1
            assert bs.bits.bit_length() - 1 == bs.total

    def test_popcount_is_power_iff_dss(self):
        universe = list(range(1, 11))
        for mask in range(1 << len(universe)):
            elems = [universe[i] for i in range(len(universe)) if mask >> i & 1]
            bs = sum_bitset(elems)
            assert (bs.popcount() == 1 << len(elems)) == is_dss(elems)

    def test_extended_matches_rebuild(self):
        base = sum_bitset([3, 5, 6])
        assert base.extended(7) == sum_bitset([3, 5, 6, 7])


class TestCanExtend:
    def test_collision_with_existing_sum(self):
        assert can_extend(sum_bitset([1, 2]), 3) is False

    def test_clean_extension(self):
        assert can_extend(sum_bitset([1, 2]), 4) is True

    def test_conway_guy_step(self):
        assert can_extend(sum_bitset([3, 5, 6]), 7) is True

    def test_rejects_non_positive_label(self):
        with pytest.raises(ValueError):
            can_extend(sum_bitset([1, 2]), 0)

    def test_exhaustive_incremental_vs_full(self):
        # Every S within {1..10} and every label up to 64: extending the
        # bitmap agrees with deciding the extended set from scratch.
        universe = list(range(1, 11))
        for mask in range(1 << len(universe)):
            elems = [universe[i] for i in range(len(universe)) if mask >> i & 1]
            if not is_dss(elems):
                continue
            bs = sum_bitset(elems)
            for label in range(1, 65):
                if label in elems:
                    continue
                assert can_extend(bs, label) == is_dss(elems + [label])


class TestEnumerate:
    def test_all_pairs_are_dss(self):
        sets = enumerate_dss_sets(2, 3)
        assert [s.elements for s in sets] == [(1, 2), (1, 3), (2, 3)]

    def test_unique_four_element_set_under_seven(self):
        sets = enumerate_dss_sets(4, 7)
        assert [s.elements for s in sets] == [(3, 5, 6, 7)]

    def test_two_five_element_sets_under_thirteen(self):
        # Expected values were frozen from the naive-oracle enumeration in
        # test_agreement_with_naive_enumeration below.
        sets = enumerate_dss_sets(5, 13)
        assert [s.elements for s in sets] == [
            (3, 6, 11, 12, 13),
            (6, 9, 11, 12, 13),
        ]
        assert len(set(sets[0].elements) & set(sets[1].elements)) == 4

    def test_agreement_with_naive_enumeration(self):
        from itertools import combinations

        for size, cap in [(2, 5), (3, 8), (4, 9), (5, 13)]:
            naive = [
                c for c in combinations(range(1, cap + 1), size) if naive_is_dss(c)
            ]
            assert [s.elements for s in enumerate_dss_sets(size, cap)] == naive

    def test_sorted_and_duplicate_free(self):
        sets = [s.elements for s in enumerate_dss_sets(3, 10)]
        assert sets == sorted(set(sets))
        assert all(is_dss(s) for s in sets)

    def test_size_above_cap_rejected(self):
        with pytest.raises(ValueError):
            enumerate_dss_sets(4, 3)
        with pytest.raises(ValueError):
            enumerate_dss_sets(0, 3)


class TestDssSet:
    def test_sorts_input(self):
        assert DssSet((7, 3, 6, 5)).elements == (3, 5, 6, 7)

    def test_rejects_collisions(self):
        with pytest.raises(ValueError, match="not a distinct-subset-sum"):
            DssSet((1, 2, 3))

    def test_largest_and_container_protocol(self):
        ds = DssSet((3, 5, 6, 7))
        assert ds.largest == 7
        assert 5 in ds and 4 not in ds
        assert len(ds) == 4
        assert list(ds) == [3, 5, 6, 7]

    def test_bitset_roundtrip(self):
        ds = DssSet((1, 2, 4))
        assert ds.bitset() == sum_bitset([1, 2, 4])
        assert ds.bitset().popcount() == 8


class TestSubsetSumCollision:
    def test_none_for_dss(self):
        assert subset_sum_collision((1, 2, 4)) is None

    def test_simple_collision(self):
        a, b = subset_sum_collision((1, 2, 3))
        assert a == (0, 1) and b == (2,)

    def test_duplicate_values_collide(self):
        a, b = subset_sum_collision((5, 5))
        assert a == (0,) and b == (1,)

    @settings(max_examples=200)
    @given(st.lists(st.integers(min_value=1, max_value=60), min_size=1, max_size=10))
    def test_certificates_revalidate(self, values):
        result = subset_sum_collision(tuple(values))
        if result is None:
            assert len(set(values)) == len(values)
            assert naive_is_dss(values)
            return
        a, b = result
        assert a != b
        assert not set(a) & set(b)
        assert sum(values[i] for i in a) == sum(values[i] for i in b)


def test_max_total_guard_is_64_bit():
    assert MAX_TOTAL == 2**63 - 1
    with pytest.raises(OverflowError):
        SumBitset.empty().extended(3).extended(MAX_TOTAL)
