import pytest
from pydantic import ValidationError
from src.core.errors import TverbergInputError
from src.theorems.bounds import (
    BoundSet,
    admissible,
    bound_Nc,
    gvkf_condition_original,
    gvkf_condition_sharpened,
    is_prime,
    is_prime_power,
    jwise_condition,
    min_dimension_bound,
    non_uniform_top_faces,
    sarkaria_size,
    tverberg_number,
    type_b_min_colors,
)


class TestBoundSet:
    """Test theorem parameter validation"""

    def test_valid(self):
        params = BoundSet(r=3, d=2, j=2)
        assert params.k is None

    def test_j_at_most_r(self):
        with pytest.raises(ValidationError, match="2 <= j <= r"):
            BoundSet(r=2, j=3)

    def test_s_at_most_r(self):
        with pytest.raises(ValidationError, match="0 <= s <= r"):
            BoundSet(r=2, s=3)

    def test_unknown_fields_rejected(self):
        with pytest.raises(ValidationError):
            BoundSet(r=2, q=1)

    def test_require(self):
        with pytest.raises(TverbergInputError, match="Missing parameters: d, k"):
            BoundSet(r=2).require("r", "d", "k")


class TestCalculators:
    """Test the numeric hypotheses"""

    def test_constraint_bound(self):
        assert bound_Nc(3, 2, 1) == 8
        assert bound_Nc(2, 1, 0) == 2
        assert tverberg_number(3, 2) == 6

    def test_constraint_bound_rejects_negative_c(self):
        with pytest.raises(TverbergInputError):
            bound_Nc(3, 2, -1)

    def test_ranges(self):
        with pytest.raises(TverbergInputError, match="r must be at least 2"):
            tverberg_number(1, 2)
        with pytest.raises(TverbergInputError, match="d must be at least 1"):
            tverberg_number(2, 0)

    def test_min_dimension_bound(self):
        assert min_dimension_bound(3, 3) == 2
        assert min_dimension_bound(2, 3) == 2
        assert min_dimension_bound(2, 2) == 1

    def test_original_condition(self):
        assert gvkf_condition_original(2, 2, 2, 1, 4) == 0
        for N in range(20):
            assert gvkf_condition_original(3, 3, 3, 2, N) is None

    def test_original_condition_needs_k_below_d(self):
        with pytest.raises(TverbergInputError, match="k < d"):
            gvkf_condition_original(2, 2, 2, 2, 4)

    def test_sharpened_condition(self):
        assert gvkf_condition_sharpened(3, 3, 3, 2, 5) is True
        assert gvkf_condition_sharpened(3, 3, 3, 2, 4) is False
        assert gvkf_condition_sharpened(3, 3, 3, 1, 5) is False

    def test_original_implies_sharpened(self):
        for r in range(2, 6):
            for j in range(2, r + 1):
                for d in range(1, 5):
                    for k in range(d):
                        for N in range(25):
                            if gvkf_condition_original(r, j, d, k, N) is not None:
                                assert gvkf_condition_sharpened(r, j, d, k, N), (r, j, d, k, N)

    def test_jwise_condition(self):
        assert jwise_condition(3, 3, 2, 3) is True
        assert jwise_condition(3, 3, 2, 2) is False

    def test_jwise_condition_range(self):
        with pytest.raises(TverbergInputError, match="2 <= j <= r"):
            jwise_condition(2, 3, 2, 5)

    def test_sarkaria_size(self):
        assert sarkaria_size(3, 2, 3) == 10
        assert sarkaria_size(3, 3, 3) == 5

    def test_non_uniform_top_faces(self):
        assert non_uniform_top_faces(5, 2, 2, 1) == 1
        assert non_uniform_top_faces(1, 3, 0, 0) == 0

    def test_type_b_colors(self):
        assert type_b_min_colors(3, 2) == 3

    @pytest.mark.parametrize("dims,d,expected", [
        ([2, 1], 3, True),
        ([1, 1], 3, False),
        ([0, 3], 3, False),
        ([2, 2, 2], 2, True),
    ])
    def test_admissible(self, dims, d, expected):
        assert admissible(dims, d) is expected

    def test_admissible_needs_two_entries(self):
        with pytest.raises(TverbergInputError):
            admissible([1], 2)

    @pytest.mark.parametrize("n,expected", [
        (2, True), (4, True), (7, True), (8, True), (9, True),
        (1, False), (6, False), (12, False),
    ])
    def test_prime_power(self, n, expected):
        assert is_prime_power(n) is expected

    def test_prime(self):
        assert [n for n in range(12) if is_prime(n)] == [2, 3, 5, 7, 11]
