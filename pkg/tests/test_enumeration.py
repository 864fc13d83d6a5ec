import pytest
from src.solver.enumeration import (
    count_bounded_families,
    disjoint_families,
    first_faces,
    is_maximal,
    restricted_growth_strings,
    rgs_prefixes,
    rgs_to_blocks,
    set_partitions,
    stirling2,
)


class TestSetPartitions:
    """Test restricted-growth enumeration of set partitions"""

    def test_small_case_in_order(self):
        assert list(restricted_growth_strings(3, 2)) == [(0, 0, 1), (0, 1, 0), (0, 1, 1)]

    def test_blocks(self):
        assert rgs_to_blocks((0, 1, 0, 2), 3) == ((0, 2), (1,), (3,))
        assert next(set_partitions(5, 2)) == ((0, 1, 2, 3), (4,))

    @pytest.mark.parametrize("n,r", [(1, 1), (4, 2), (5, 3), (6, 4), (7, 3), (7, 7)])
    def test_count_matches_stirling(self, n, r):
        strings = list(restricted_growth_strings(n, r))
        assert len(strings) == stirling2(n, r)
        assert len(set(strings)) == len(strings)
        assert strings == sorted(strings)

    def test_impossible_sizes(self):
        assert list(restricted_growth_strings(2, 3)) == []
        assert list(restricted_growth_strings(0, 1)) == []

    def test_blocks_are_nonempty_partitions(self):
        for blocks in set_partitions(6, 3):
            assert all(blocks)
            assert sorted(v for block in blocks for v in block) == list(range(6))
            assert [block[0] for block in blocks] == sorted(block[0] for block in blocks)

    @pytest.mark.parametrize("n,r", [(6, 2), (7, 3), (8, 4)])
    def test_prefixes_split_the_space(self, n, r):
        """Concatenating the prefix subspaces gives the full enumeration in order"""
        merged = []
        for prefix in rgs_prefixes(n, r, 4):
            merged.extend(restricted_growth_strings(n, r, prefix))
        assert merged == list(restricted_growth_strings(n, r))

    def test_invalid_prefix(self):
        assert list(restricted_growth_strings(4, 2, (0, 2))) == []
        assert list(restricted_growth_strings(4, 2, (1,))) == []

    def test_stirling_values(self):
        assert stirling2(5, 2) == 15
        assert stirling2(6, 3) == 90
        assert stirling2(3, 4) == 0
        assert stirling2(0, 0) == 1


class TestDisjointFamilies:
    """Test enumeration of bounded disjoint face families"""

    @pytest.mark.parametrize("n,r,max_size", [(4, 2, 1), (4, 2, 2), (5, 2, 3), (6, 3, 2), (5, 3, 5)])
    def test_count_matches_closed_form(self, n, r, max_size):
        families = list(disjoint_families(n, r, max_size))
        assert len(families) == count_bounded_families(n, r, max_size)
        assert len(set(families)) == len(families)

    def test_canonical_order(self):
        families = list(disjoint_families(3, 2, 2))
        assert families[0] == ((0, 1), (2,))
        for family in families:
            minima = [face[0] for face in family]
            assert minima == sorted(minima)
            assert all(len(face) <= 2 for face in family)

    def test_allows_filter(self):
        families = list(disjoint_families(4, 2, 4, allows=lambda face: len(face) != 2))
        assert families
        assert all(len(face) != 2 for family in families for face in family)

    def test_first_face_restriction(self):
        everything = list(disjoint_families(5, 2, 2))
        merged = []
        for face in first_faces(5, 2, 2):
            merged.extend(disjoint_families(5, 2, 2, first=face))
        assert merged == everything

    def test_too_few_vertices(self):
        assert list(disjoint_families(2, 3, 2)) == []
        assert count_bounded_families(2, 3, 2) == 0

    def test_closed_form_values(self):
        # Two disjoint singletons or edges from four points.
        assert count_bounded_families(4, 2, 1) == 6
        assert count_bounded_families(4, 2, 2) == 6 + 12 + 3

    def test_is_maximal(self):
        def grow_to_two(family, index, vertex):
            return len(family[index]) < 2

        assert is_maximal(((0, 1), (2, 3)), 5, grow_to_two) is True
        assert is_maximal(((0,), (2, 3)), 5, grow_to_two) is False
        assert is_maximal(((0,), (1,)), 2, grow_to_two) is True
