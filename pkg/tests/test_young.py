import itertools

import pytest
from hypothesis import given, strategies as st

from signcrystal.errors import ValidationError
from signcrystal.young import (
    BoxRef,
    Multipartition,
    addable_corners,
    check_partition,
    content,
    multipartitions_of,
    multipartitions_up_to,
    partitions_of,
    removable_corners,
)

partition_lists = st.lists(st.integers(min_value=1, max_value=9), max_size=6).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


class TestPartitionValidation:
    def test_trims_trailing_zeros(self):
        assert check_partition([3, 1, 0, 0]) == (3, 1)

    def test_rejects_increase(self):
        with pytest.raises(ValidationError):
            check_partition([1, 2])

    def test_rejects_negative(self):
        with pytest.raises(ValidationError):
            check_partition([3, -1])


class TestCorners:
    def test_removable(self):
        assert removable_corners((3, 1)) == [(1, 3), (2, 1)]
        assert removable_corners(()) == []
        assert removable_corners((2, 2)) == [(2, 2)]

    def test_addable(self):
        assert addable_corners((3, 1)) == [(1, 4), (2, 2), (3, 1)]
        assert addable_corners(()) == [(1, 1)]
        assert addable_corners((2, 2)) == [(1, 3), (3, 1)]

    def test_contents_distinct_and_interleaved(self):
        for n in range(11):
            for p in partitions_of(n):
                removable = removable_corners(p)
                addable = addable_corners(p)
                rem_contents = [c - r for r, c in removable]
                add_contents = [c - r for r, c in addable]
                assert len(set(rem_contents)) == len(rem_contents)
                assert len(set(add_contents)) == len(add_contents)
                assert not set(rem_contents) & set(add_contents)
                # by content the kinds alternate, starting and ending addable
                labelled = sorted(
                    [(c, "a") for c in add_contents] + [(c, "r") for c in rem_contents]
                )
                kinds = [kind for _, kind in labelled]
                assert kinds[0] == kinds[-1] == "a"
                assert all(a != b for a, b in zip(kinds, kinds[1:]))

    def test_subset_removal_valid(self):
        for n in range(9):
            for p in partitions_of(n):
                removable = removable_corners(p)
                for take in range(len(removable) + 1):
                    for subset in itertools.combinations(removable, take):
                        rows = list(p)
                        for r, _ in subset:
                            rows[r - 1] -= 1
                        check_partition(rows)


class TestBoxContent:
    def test_values(self):
        assert content(BoxRef(0, 1, 1)) == 0
        assert content(BoxRef(0, 2, 1)) == -1
        assert content(BoxRef(0, 1, 3)) == 2


class TestMultipartition:
    def test_add(self):
        m = Multipartition(((2,), ()))
        assert m.add_box(BoxRef(1, 1, 1)) == Multipartition(((2,), (1,)))

    def test_remove(self):
        m = Multipartition(((2,), (1,)))
        assert m.remove_box(BoxRef(1, 1, 1)) == Multipartition(((2,), ()))

    def test_add_rejects_non_addable(self):
        with pytest.raises(ValidationError):
            Multipartition(((2,),)).add_box(BoxRef(0, 1, 1))

    def test_remove_rejects_non_removable(self):
        with pytest.raises(ValidationError):
            Multipartition(((2,),)).remove_box(BoxRef(0, 1, 1))

    def test_component_out_of_range(self):
        with pytest.raises(ValidationError):
            Multipartition(((2,),)).add_box(BoxRef(1, 1, 1))

    def test_roundtrip_exhaustive(self):
        for ell in (1, 2):
            for m in multipartitions_up_to(ell, 6):
                for box in m.addable_boxes:
                    assert m.add_box(box).remove_box(box) == m
                for box in m.removable_boxes:
                    assert m.remove_box(box).add_box(box) == m

    def test_size_and_boxes(self):
        m = Multipartition(((3, 1), (2,)))
        assert m.size == 6
        assert len(list(m.boxes())) == 6

    def test_from_lists_both_shapes(self):
        bare = Multipartition.from_lists([[3, 1], []])
        wrapped = Multipartition.from_lists({"components": [[3, 1], []]})
        assert bare == wrapped
        assert bare.to_lists() == [[3, 1], []]

    def test_from_lists_rejects_garbage(self):
        with pytest.raises(ValidationError):
            Multipartition.from_lists({"components": [[1]], "extra": 1})
        with pytest.raises(ValidationError):
            Multipartition.from_lists("nope")
        with pytest.raises(ValidationError):
            Multipartition.from_lists([[1, 2]])

    @given(st.lists(partition_lists, min_size=1, max_size=3))
    def test_lists_roundtrip(self, comps):
        m = Multipartition(tuple(comps))
        assert Multipartition.from_lists(m.to_lists()) == m


class TestEnumeration:
    def test_partition_counts(self):
        assert len(list(partitions_of(8))) == 22
        assert list(partitions_of(0)) == [()]

    def test_multipartition_count(self):
        assert len(list(multipartitions_of(2, 3))) == 10

    def test_up_to_is_sorted_by_size(self):
        sizes = [m.size for m in multipartitions_up_to(2, 4)]
        assert sizes == sorted(sizes)

    def test_distinct(self):
        nodes = list(multipartitions_up_to(3, 4))
        assert len(nodes) == len(set(nodes))
