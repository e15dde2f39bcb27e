"""Tests for frieze entries, rows and the three ways of computing them."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.frieze import (
    FriezeGrid,
    bareiss_determinant,
    continuant,
    cyclic_pair_excluding_subsets,
    entry,
    entry_determinant,
    entry_pair_excluding,
    grid_for,
    iter_linear_masks,
    pair_excluding_subsets,
    rows,
    signed_subset_sum,
)
from src.models import (
    FriezeType,
    IndexOutOfRangeError,
    NotInfiniteTypeError,
    QuidditySequence,
    SubsetLimitError,
)
from src.quiddity import classify

Q = QuidditySequence.of

PUBLISHED_ROWS = [
    (2, 3, 4, 2, 4),
    (5, 11, 7, 7, 7),
    (17, 18, 19, 24, 12),
    (61, 31, 65, 41, 29),
    (104, 105, 106, 111, 99),
]

infinite_sequences = (
    st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=7)
    .map(lambda xs: QuidditySequence(tuple(xs)))
    .filter(lambda q: classify(q) is FriezeType.INFINITE)
)


# ==================== Entry Tests ====================


class TestEntry:
    def test_boundary_rows(self):
        q = Q(2, 3, 3)
        assert entry(q, 2, 0) == 0
        assert entry(q, 2, 1) == 1
        assert entry(q, 2, 2) == 3

    def test_anchored_value(self):
        assert entry(Q(2, 3, 3), 2, 3) == 8

    def test_above_zero_row_rejected(self):
        with pytest.raises(IndexOutOfRangeError):
            entry(Q(2, 3, 3), 3, 0)

    def test_periodic(self):
        q = Q(2, 3, 4, 2, 4)
        assert entry(q, 1, 7) == entry(q, 6, 12)

    def test_grid_is_shared(self):
        q = Q(2, 3, 4, 2, 4)
        assert grid_for(q) is grid_for(Q(2, 3, 4, 2, 4))

    def test_diamond(self):
        grid = FriezeGrid(Q(2, 3, 4, 2, 4))
        assert all(grid.diamond_holds(i, j) for i in range(1, 6) for j in range(i, i + 12))

    def test_window(self):
        assert FriezeGrid(Q(2, 3, 4)).window(3, 4) == (4, 2, 3, 4)


# ==================== Determinant Tests ====================


class TestDeterminant:
    def test_bareiss_small(self):
        assert bareiss_determinant([[2, 1], [1, 3]]) == 5
        assert bareiss_determinant([]) == 1

    def test_bareiss_needs_pivot_swap(self):
        assert bareiss_determinant([[0, 1], [1, 0]]) == -1

    def test_continuant(self):
        assert continuant(()) == 1
        assert continuant((4, 2, 3, 4)) == 61

    def test_entry_determinant(self):
        q = Q(2, 3, 4, 2, 4)
        assert entry_determinant(q, 0, 3) == 61

    def test_empty_window_rejected(self):
        with pytest.raises(IndexOutOfRangeError):
            entry_determinant(Q(2, 3), 2, 1)


# ==================== Subset Tests ====================


class TestSubsets:
    def test_linear_counts_are_fibonacci(self):
        assert [len(pair_excluding_subsets(n)) for n in range(0, 8)] == [1, 1, 2, 3, 5, 8, 13, 21]

    def test_cyclic_counts(self):
        assert [len(cyclic_pair_excluding_subsets(n)) for n in range(1, 7)] == [1, 2, 4, 6, 11, 17]

    def test_cyclic_count_identity(self):
        for n in range(2, 15):
            linear = len(pair_excluding_subsets(n))
            shorter = len(pair_excluding_subsets(n - 2))
            assert len(cyclic_pair_excluding_subsets(n)) - linear == shorter - (n % 2 == 0)

    def test_masks_are_distinct(self):
        masks = list(iter_linear_masks(6))
        assert len(masks) == len(set(masks)) == 13

    def test_exclusions(self):
        family = pair_excluding_subsets(4)
        assert sorted(family.exclusions(mask) for mask in family.masks) == [0, 1, 1, 1, 2]

    def test_masks_of_pair(self):
        assert set(pair_excluding_subsets(2).masks) == {0b11, 0}

    def test_signed_sum(self):
        assert signed_subset_sum([3, 4], pair_excluding_subsets(2).masks) == 11

    def test_window_limit(self):
        q = Q(2, 3, 4, 2, 4)
        assert entry_pair_excluding(q, 1, 4, window_limit=4) == entry(q, 1, 4)
        with pytest.raises(SubsetLimitError):
            entry_pair_excluding(q, 1, 9, window_limit=4)

    @settings(max_examples=60)
    @given(infinite_sequences, st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=9))
    def test_three_methods_agree(self, q, i, length):
        j = i + length
        assert entry(q, i, j) == entry_determinant(q, i, j) == entry_pair_excluding(q, i, j)


# ==================== Rows Tests ====================


class TestRows:
    def test_published_rows(self):
        table = rows(Q(2, 3, 4, 2, 4), 5)
        assert [tuple(row) for row in table.rows] == PUBLISHED_ROWS

    def test_row_two_multiset(self):
        table = rows(Q(2, 3, 3), 2)
        assert sorted(table.rows[1]) == [5, 5, 8]

    def test_render_has_zero_and_one_rows(self):
        text = rows(Q(2, 3, 3), 2).render().splitlines()
        assert text[0].split() == ["0", "0", "0"]
        assert text[1].split() == ["1", "1", "1"]
        assert len(text) == 4

    def test_to_json(self):
        assert rows(Q(3), 2).to_json() == {"quiddity": [3], "rows": [[3], [8]]}

    def test_rejects_finite(self):
        with pytest.raises(NotInfiniteTypeError):
            rows(Q(1, 1, 1), 3)

    def test_rejects_bad_depth(self):
        with pytest.raises(ValueError):
            rows(Q(2, 3, 3), 0)

    @settings(max_examples=40)
    @given(infinite_sequences)
    def test_rows_are_positive(self, q):
        table = rows(q, 2 * len(q) + 2)
        assert all(value > 0 for row in table.rows for value in row)
