"""ES-sequence tests: analytic bounds, the Conway-Guy construction, and the
exact search on the fast range."""

from __future__ import annotations

import math

import pytest

from arlabel.dss import is_dss
from arlabel.es import (
    BOUND_ONLY,
    COMPUTED,
    KNOWN,
    KNOWN_ES,
    EsRecord,
    conway_guy_set,
    conway_guy_u,
    erdos_counting_lb,
    erdos_moser_lb,
    es,
    es_table,
)


class TestCountingBound:
    def test_base(self):
        assert erdos_counting_lb(1) == 1

    def test_nine(self):
        assert erdos_counting_lb(9) == 57  # ceil(511 / 9)

    def test_five(self):
        assert erdos_counting_lb(5) == 7  # ceil(31 / 5)

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            erdos_counting_lb(0)
        with pytest.raises(OverflowError):
            erdos_counting_lb(63)

    def test_below_known_values(self):
        for n, value in KNOWN_ES.items():
            assert erdos_counting_lb(n) <= value

    def test_exceeds_six_n_beyond_nine(self):
        # The slack the wheel construction relies on: more than 6j labels
        # are available at every rim length j from 7 on.
        for j in (7, 8, 9):
            assert KNOWN_ES[j] > 6 * j
        for j in range(9, 31):
            assert erdos_counting_lb(j) > 6 * j


class TestMoserBound:
    def test_examples(self):
        assert erdos_moser_lb(1) == 1
        assert erdos_moser_lb(5) == 4  # ceil(32 / (4*sqrt(5))) = ceil(3.577..)
        assert erdos_moser_lb(10) == 81  # ceil(1024 / (4*sqrt(10))) = ceil(80.95..)

    def test_exact_ceiling_property(self):
        # Returned k is the exact ceiling of 2^n / (4 sqrt n): one smaller
        # fails the squared inequality, k itself satisfies it.
        for n in range(1, 40):
            k = erdos_moser_lb(n)
            assert 16 * n * k * k >= 4**n
            if k > 1:
                assert 16 * n * (k - 1) * (k - 1) < 4**n

    def test_matches_float_evaluation(self):
        for n in range(1, 30):
            assert erdos_moser_lb(n) == math.ceil(2**n / (4 * math.sqrt(n)))

    def test_below_known_values(self):
        for n, value in KNOWN_ES.items():
            assert erdos_moser_lb(n) <= value


class TestConwayGuy:
    def test_sequence_prefix(self):
        assert [conway_guy_u(n) for n in range(12)] == [
            0, 1, 2, 4, 7, 13, 24, 44, 84, 161, 309, 594,
        ]

    def test_matches_known_es(self):
        for n, value in KNOWN_ES.items():
            assert conway_guy_u(n) == value

    def test_set_examples(self):
        assert conway_guy_set(1).elements == (1,)
        assert conway_guy_set(4).elements == (3, 5, 6, 7)
        assert conway_guy_set(4).largest == 7
        assert conway_guy_set(6).largest == 24

    def test_sets_dss_up_to_twenty(self):
        for n in range(1, 21):
            ds = conway_guy_set(n)
            assert len(ds) == n
            assert ds.largest == conway_guy_u(n)
            assert is_dss(ds.elements)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            conway_guy_u(-1)
        with pytest.raises(ValueError):
            conway_guy_set(0)


class TestEsSearch:
    def test_first_six_values(self):
        for n in range(1, 7):
            rec = es(n, budget_s=30)
            assert rec.status == COMPUTED
            assert rec.value == KNOWN_ES[n]
            assert rec.lower == rec.upper == rec.value

    def test_witness_invariants(self):
        for n in range(1, 7):
            rec = es(n, budget_s=30)
            w = rec.witness
            assert w is not None and len(w) == n
            assert w.largest == rec.value
            assert is_dss(w.elements)

    def test_value_within_analytic_sandwich(self):
        for n in range(1, 7):
            rec = es(n, budget_s=30)
            assert rec.value >= max(erdos_counting_lb(n), erdos_moser_lb(n))
            assert rec.value <= conway_guy_u(n)

    def test_strictly_monotone(self):
        values = [es(n, budget_s=30).value for n in range(1, 7)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_deterministic_witness(self):
        a = es(5, budget_s=30)
        b = es(5, budget_s=30)
        assert a == b

    def test_timeout_degrades_to_interval(self):
        rec = es(9, budget_s=0.05)
        assert rec.status == BOUND_ONLY
        assert rec.value is None
        assert rec.witness is None
        # everything below ES(8)+1 = 85 is refuted analytically up front
        assert 85 <= rec.lower <= 161
        assert rec.upper == 161

    def test_rejects_bad_budget(self):
        with pytest.raises(ValueError):
            es(3, budget_s=0)


class TestEsTable:
    def test_small_table_is_computed(self):
        table = es_table(3, budget_s=30)
        assert [table.records[n].value for n in (1, 2, 3)] == [1, 2, 4]
        assert all(table.records[n].status == COMPUTED for n in (1, 2, 3))

    def test_medium_table_computes_through_seven(self):
        table = es_table(7, budget_s=300)
        assert [table.records[n].value for n in range(1, 8)] == [1, 2, 4, 7, 13, 24, 44]
        assert all(table.records[n].status == COMPUTED for n in range(1, 8))
        for n in range(1, 8):
            assert table.records[n].witness.largest == table.records[n].value

    def test_known_fallback_under_tiny_budget(self):
        table = es_table(9, budget_s=0.05)
        rec = table.records[9]
        assert rec.value == 161
        assert rec.status in (COMPUTED, KNOWN)
        if rec.status == KNOWN:
            assert rec.witness is not None
            assert rec.witness.largest == 161

    def test_beyond_known_range_is_bound_only(self):
        table = es_table(12, budget_s=0.05)
        for n in (10, 11, 12):
            rec = table.records[n]
            assert rec.status == BOUND_ONLY
            assert rec.value is None
            assert rec.lower >= erdos_counting_lb(n)
            assert rec.upper == conway_guy_u(n)
        # the chained bound through ES(9) = 161 beats the counting bound at 10
        assert table.records[10].lower >= 162

    def test_record_value_property(self):
        rec = EsRecord(3, COMPUTED, 4, 4, conway_guy_set(3))
        assert rec.value == 4
        rec = EsRecord(10, BOUND_ONLY, 162, 309, None)
        assert rec.value is None
