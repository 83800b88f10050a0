import pytest

from mstd import (
    DeltaProfile,
    IntSet,
    cardinality_bounds,
    difference_table,
    diffset,
    equal_diff_pairs,
    equal_sum_pairs,
    gaps,
    insertion_delta,
)
from conftest import A1, naive_equal_diff_pairs, naive_equal_sum_pairs


def I(n):
    return IntSet(tuple(range(n)))


class TestGaps:
    def test_minimal_set(self, a1_set):
        assert gaps(a1_set).gaps == (2, 1, 1, 3, 4, 1, 2)

    def test_small(self):
        assert gaps(IntSet((0, 1, 2))).gaps == (1, 1)
        assert gaps(IntSet((0, 5))).gaps == (5,)

    def test_requires_two_elements(self):
        with pytest.raises(ValueError):
            gaps(IntSet((7,)))

    def test_gap_sum_is_diameter(self, a1_set):
        assert gaps(a1_set).diameter == a1_set.diameter


class TestDifferenceTable:
    def test_triple(self):
        assert difference_table(IntSet((0, 1, 3))).rows == ((1, 3), (2,))

    def test_size5(self):
        t = difference_table(IntSet((0, 1, 2, 4, 5)))
        assert t.rows == ((1, 2, 4, 5), (1, 3, 4), (2, 3), (1,))

    def test_pair(self):
        assert difference_table(IntSet((0, 7))).rows == ((7,),)

    def test_entries_match_positive_diffset(self, a1_set):
        entries = set(difference_table(a1_set).entries())
        positive = {x for x in diffset(a1_set) if x > 0}
        assert entries == positive

    def test_row1_multiplicity_count(self, a1_set):
        n = len(a1_set)
        assert len(difference_table(a1_set).entries()) == n * (n - 1) // 2

    def test_render_is_triangular(self):
        text = difference_table(IntSet((0, 1, 3))).render()
        lines = text.splitlines()
        assert lines[0].split() == ["0", "1", "3"]
        assert lines[1].split() == ["2"]


class TestEqualPairs:
    @pytest.mark.parametrize(
        "els,want_diff",
        [((0, 1, 2), 1), ((0, 1, 3), 0), ((0, 1, 2, 3), 4)],
    )
    def test_equal_diff_examples(self, els, want_diff):
        assert equal_diff_pairs(IntSet(els)) == want_diff
        assert naive_equal_diff_pairs(els) == want_diff

    @pytest.mark.parametrize(
        "els,want_sum",
        [((0, 1, 2), 1), ((0, 1, 3, 7), 0), ((0, 1, 2, 3), 3)],
    )
    def test_equal_sum_examples(self, els, want_sum):
        assert equal_sum_pairs(IntSet(els)) == want_sum
        assert naive_equal_sum_pairs(els) == want_sum

    def test_minimal_set_counts(self, a1_set):
        assert equal_sum_pairs(a1_set) == naive_equal_sum_pairs(A1) == 13
        assert equal_diff_pairs(a1_set) == naive_equal_diff_pairs(A1) == 21


class TestBounds:
    @pytest.mark.parametrize("n,want", [(4, (10, 13)), (5, (15, 21)), (1, (1, 1))])
    def test_values(self, n, want):
        assert cardinality_bounds(n) == want

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            cardinality_bounds(0)


class TestInsertionDelta:
    def test_close_insertion(self):
        assert insertion_delta(I(5), 6) == DeltaProfile(3, 2)

    def test_far_insertion(self):
        assert insertion_delta(I(5), 9) == DeltaProfile(6, 5)

    def test_singleton(self):
        assert insertion_delta(IntSet((0,)), 1) == DeltaProfile(2, 1)

    def test_rejects_member(self):
        with pytest.raises(ValueError):
            insertion_delta(I(5), 3)

    def test_exactness_sweep(self):
        # inserting (n-1)+k into {0..n-1} gives exactly k+1 sums, k differences
        for n in range(2, 21):
            for k in range(1, n):
                assert insertion_delta(I(n), (n - 1) + k) == DeltaProfile(k + 1, k)
