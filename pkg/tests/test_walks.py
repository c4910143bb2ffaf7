import io
import math

import pytest
from hypothesis import given, settings, strategies as st

from gesselwalks.exact import catalan
from gesselwalks.walks import (
    WalkTable,
    build_f_matrix,
    count_walks,
    dump_walk_table,
    f_entry,
    f_tilde,
    load_walk_table,
    reachable,
    shortest_walk,
)
from oracles import F_MATRIX_14, GESSEL_NUMBERS, brute_count


class TestReachable:
    def test_examples(self):
        assert reachable(3, 1, 0)
        assert not reachable(3, 0, 0)  # parity
        assert not reachable(2, 0, 2)  # cone
        assert not reachable(2, 3, 0)  # too far east
        assert not reachable(1, -1, 0)

    def test_origin(self):
        assert reachable(0, 0, 0)
        assert not reachable(0, 0, 1)


class TestCountWalks:
    def test_base_cases(self):
        assert count_walks(0, 0, 0) == 1
        assert count_walks(0, 1, 0) == 0
        assert count_walks(2, 0, 0) == 2
        assert count_walks(4, 0, 0) == 11
        assert count_walks(2, 0, 1) == 1

    def test_gessel_sequence(self):
        for n, expected in enumerate(GESSEL_NUMBERS):
            assert count_walks(2 * n, 0, 0) == expected

    def test_against_brute_enumeration(self):
        # full check of every endpoint for small m against the step-tree oracle
        for m in range(9):
            for n1 in range(m + 1):
                for n2 in range((n1 + m) // 2 + 1):
                    assert count_walks(m, n1, n2) == brute_count(m, n1, n2)

    def test_brute_spot_check_m10(self):
        assert count_walks(10, 2, 1) == brute_count(10, 2, 1)

    def test_recurrence_holds(self):
        for m in range(1, 16):
            for n1 in range(m + 1):
                for n2 in range((n1 + m) // 2 + 1):
                    assert count_walks(m, n1, n2) == (
                        count_walks(m - 1, n1 + 1, n2)
                        + count_walks(m - 1, n1 - 1, n2)
                        + count_walks(m - 1, n1 + 1, n2 + 1)
                        + count_walks(m - 1, n1 - 1, n2 - 1)
                    )

    def test_support_exactness(self):
        # positivity holds on the entire support box, not just necessity
        for m in range(21):
            for n1 in range(m + 2):
                for n2 in range((n1 + m) // 2 + 2):
                    positive = count_walks(m, n1, n2) > 0
                    assert positive == reachable(m, n1, n2)

    def test_out_of_support_is_zero(self):
        assert count_walks(3, 0, 0) == 0
        assert count_walks(5, 1, 4) == 0
        assert count_walks(2, -1, 0) == 0


class TestWalkTable:
    def test_layer_zero(self):
        t = WalkTable(0)
        assert t.value(0, 0, 0) == 1
        assert t.value(0, 1, 0) == 0

    def test_values_nonnegative(self):
        t = WalkTable(12)
        assert all(v >= 0 for _, _, _, v in t.nonzero_records())

    def test_extend_is_idempotent(self):
        t = WalkTable(6)
        t.extend(6)
        t.extend(4)
        assert t.m_max == 6
        assert t.value(6, 0, 0) == 85

    def test_dropped_layers(self):
        t = WalkTable(8, keep_layers=False)
        assert t.value(8, 0, 0) == 782
        with pytest.raises(ValueError):
            t.value(6, 0, 0)

    def test_out_of_range(self):
        t = WalkTable(2)
        with pytest.raises(ValueError):
            t.value(3, 0, 0)

    def test_dump_load_round_trip(self):
        t = WalkTable(9)
        buf = io.StringIO()
        wrote = dump_walk_table(t, buf)
        assert wrote == sum(1 for _ in t.nonzero_records())
        buf.seek(0)
        back = load_walk_table(buf)
        assert back.m_max == 9
        for m in range(10):
            for n1 in range(m + 1):
                for n2 in range((n1 + m) // 2 + 1):
                    assert back.value(m, n1, n2) == t.value(m, n1, n2)


class TestShortestWalk:
    def test_examples(self):
        assert shortest_walk(3, 2) == (3, 3)
        assert shortest_walk(1, 2) == (3, 2)

    def test_horizontal_axis(self):
        for n in range(13):
            assert shortest_walk(n, 0) == (n, 1)
            assert count_walks(n, n, 0) == 1

    def test_vertical_axis_catalan(self):
        for n in range(13):
            assert shortest_walk(0, n) == (2 * n, catalan(n))
            assert count_walks(2 * n, 0, n) == catalan(n)

    def test_against_dp_square(self):
        for n1 in range(13):
            for n2 in range(13):
                length, count = shortest_walk(n1, n2)
                assert count_walks(length, n1, n2) == count
                if length >= 2:
                    assert count_walks(length - 2, n1, n2) == 0

    def test_diagonal_consistency(self):
        # the two branch formulas must agree where both apply
        for n in range(13):
            east_branch = math.comb(n, n)
            vertical_branch = (
                (n + 1) * math.comb(n + 1, n + 1) // (n + 1)
            )
            assert east_branch == vertical_branch == shortest_walk(n, n)[1]
            assert shortest_walk(n, n)[0] == n


class TestFTilde:
    def test_shifted_origin(self):
        for n in range(8):
            assert f_tilde(2 * n + 1, 0, 0) == count_walks(2 * n, 0, 0)

    def test_interior_zero(self):
        assert f_tilde(1, 1, 1) == 0
        assert f_tilde(5, 2, 3) == 0

    def test_vertical_example(self):
        assert f_tilde(3, 0, 1) == 3

    def test_vertical_sum_rule(self):
        for m in range(1, 12):
            for n2 in range(m):
                assert f_tilde(m, 0, n2) == count_walks(m - 1, 0, n2) + count_walks(
                    m - 1, 0, n2 - 1
                )

    def test_horizontal_shift_rule(self):
        for m in range(1, 12):
            for n1 in range(m):
                assert f_tilde(m, n1, 0) == count_walks(m - 1, n1, 0)

    def test_step_zero(self):
        assert f_tilde(0, 0, 0) == 0
        assert f_tilde(0, 2, 0) == 0

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            f_tilde(-1, 0, 0)
        with pytest.raises(ValueError):
            f_tilde(2, -1, 0)


class TestFMatrix:
    def test_matches_frozen_block(self):
        fm = build_f_matrix(13)
        for i in range(14):
            for j in range(14):
                assert fm.entry(i, j) == F_MATRIX_14[i][j], (i, j)

    def test_f_entry_matches_frozen_block(self):
        for i in range(14):
            for j in range(14):
                assert f_entry(i, j) == F_MATRIX_14[i][j]

    def test_small_block_examples(self):
        fm = build_f_matrix(5)
        assert fm.entry(3, 3) == 2
        assert fm.entry(5, 5) == 11
        assert all(fm.entry(0, j) == 0 for j in range(6))

    def test_even_rows_vanish(self):
        fm = build_f_matrix(16)
        for i in range(0, 17, 2):
            assert all(fm.entry(i, j) == 0 for j in range(17))

    def test_packing_definition(self):
        for i in range(12):
            for j in range(12):
                if i <= j:
                    assert f_entry(i, j) == f_tilde(i, 0, j - i)
                if i >= j:
                    assert f_entry(i, j) == f_tilde(j, i - j, 0)

    def test_rejects_negative_size(self):
        with pytest.raises(ValueError):
            build_f_matrix(-1)


@settings(max_examples=30, deadline=None)
@given(
    m=st.integers(min_value=0, max_value=8),
    n1=st.integers(min_value=0, max_value=8),
    n2=st.integers(min_value=0, max_value=8),
)
def test_count_matches_brute_random(m, n1, n2):
    assert count_walks(m, n1, n2) == brute_count(m, n1, n2)
