import pytest
from fractions import Fraction
from pydantic import ValidationError
from src.core.errors import TverbergInputError
from src.core.model import Configuration
from src.core.validation import verify_witness
from src.solver.constraints import ConstraintSet
from src.solver.search import (
    FaceFilter,
    SearchOutcome,
    SearchStatistics,
    direct_constrained_search,
    find_tverberg,
    search_families,
)
from src.theorems.generators import random_config


@pytest.fixture
def square():
    return Configuration(dim=2, points=[[0, 0], [1, 0], [1, 1], [0, 1]])


@pytest.fixture
def line():
    """Four points 0, 1, 2, 3 on the real line"""
    return Configuration(dim=1, points=[[0], [1], [2], [3]])


class TestPartitionSearch:
    """Test unconstrained searches over set partitions"""

    def test_square_diagonals(self, square):
        outcome = find_tverberg(square, ConstraintSet(r=2))
        assert outcome.status == "witness_found"
        assert outcome.witness.faces == ((0, 2), (1, 3))
        assert outcome.witness.point == (Fraction(1, 2), Fraction(1, 2))
        assert outcome.statistics.space == "set_partitions"
        assert outcome.statistics.families_enumerated == 5
        assert outcome.statistics.lp_calls == 5

    def test_first_witness_on_line(self, line):
        outcome = find_tverberg(line, ConstraintSet(r=2))
        assert outcome.witness.faces == ((0, 1, 3), (2,))
        assert outcome.witness.point == (Fraction(2),)
        assert outcome.statistics.families_enumerated == 2

    def test_witness_verifies(self, square):
        constraints = ConstraintSet(r=2)
        outcome = find_tverberg(square, constraints)
        assert verify_witness(square, outcome.witness, constraints).passed

    def test_too_few_points(self):
        config = Configuration(dim=2, points=[[0, 0], [1, 0]])
        outcome = find_tverberg(config, ConstraintSet(r=3))
        assert outcome.status == "exhausted_no_witness"
        assert outcome.statistics.families_enumerated == 0

    def test_three_points_in_the_plane(self):
        # A triangle has no Radon partition.
        config = Configuration(dim=2, points=[[0, 0], [1, 0], [0, 1]])
        outcome = find_tverberg(config, ConstraintSet(r=2))
        assert outcome.status == "exhausted_no_witness"
        assert outcome.statistics.families_enumerated == 3

    def test_cap_aborts(self, square):
        outcome = find_tverberg(square, ConstraintSet(r=2), cap=2)
        assert outcome.status == "aborted_cap"
        assert outcome.witness is None

    def test_jobs_do_not_change_the_outcome(self):
        config = random_config(7, 2, coord_range=20, seed=3)
        serial = find_tverberg(config, ConstraintSet(r=3), jobs=1)
        parallel = find_tverberg(config, ConstraintSet(r=3), jobs=2)
        assert serial.found
        assert serial.model_dump() == parallel.model_dump()

    def test_outcome_status_consistency(self):
        with pytest.raises(ValidationError, match="witness_found"):
            SearchOutcome(status="witness_found", statistics=SearchStatistics(space="set_partitions"))


class TestBoundedSearch:
    """Test searches restricted to allowed faces"""

    def test_subcomplex_exhausts(self, line):
        outcome = find_tverberg(line, ConstraintSet(r=2, subcomplex="induced(0..1)"))
        assert outcome.status == "exhausted_no_witness"
        assert outcome.statistics.space == "bounded_families"
        assert outcome.statistics.families_enumerated == 1

    def test_subcomplex_witness(self, square):
        constraints = ConstraintSet(r=2, subcomplex="skeleton(1)")
        outcome = find_tverberg(square, constraints)
        assert outcome.witness.faces == ((0, 2), (1, 3))
        assert verify_witness(square, outcome.witness, constraints).passed

    def test_rainbow(self):
        config = Configuration(dim=1, points=[[0], [1], [2], [3]], colors=[[0, 1], [2, 3]])
        constraints = ConstraintSet(r=2, rainbow=True)
        outcome = find_tverberg(config, constraints)
        assert outcome.witness.faces == ((0, 2), (1, 3))
        assert verify_witness(config, outcome.witness, constraints).passed

    def test_rainbow_needs_coloring(self, line):
        with pytest.raises(TverbergInputError, match="coloring"):
            find_tverberg(line, ConstraintSet(r=2, rainbow=True))

    def test_vertices_never_meet(self, square):
        outcome = find_tverberg(square, ConstraintSet(r=2, max_dims=0))
        assert outcome.status == "exhausted_no_witness"
        assert outcome.statistics.families_enumerated == 6
        assert outcome.statistics.lp_calls == 6

    def test_mixed_dimension_bounds(self, line):
        constraints = ConstraintSet(r=2, max_dims=[1, 0])
        outcome = find_tverberg(line, constraints)
        assert outcome.witness.faces == ((0, 2), (1,))
        assert outcome.statistics.families_enumerated == 3
        assert verify_witness(line, outcome.witness, constraints).passed

    def test_exact_dimensions_padded(self, line):
        constraints = ConstraintSet(r=2, exact_dims=[1, 1])
        outcome = find_tverberg(line, constraints)
        assert sorted(outcome.witness.dimensions) == [1, 1]
        assert verify_witness(line, outcome.witness, constraints).passed

    def test_exact_dimensions_mixed(self, line):
        constraints = ConstraintSet(r=2, exact_dims=[0, 1])
        outcome = find_tverberg(line, constraints)
        assert sorted(outcome.witness.dimensions) == [0, 1]
        assert verify_witness(line, outcome.witness, constraints).passed

    def test_face_filter_projection(self):
        face_filter = FaceFilter(projection=(0, 1, 0, 1))
        assert face_filter.allows((0, 1)) is True
        assert face_filter.allows((0, 2)) is False
        assert face_filter.original((1, 2)) == (0, 1)
        assert face_filter.max_size(4) == 2


class TestConstrainedSearch:
    """Test affine constraint functions"""

    def test_direct_and_lifted_agree(self, line):
        constraints = ConstraintSet(r=2, affine_constraints=[[1, 0, 0, 0]])
        lifted = find_tverberg(line, constraints)
        direct = direct_constrained_search(line, constraints)
        assert lifted.witness.faces == direct.witness.faces == ((0, 1, 3), (2,))
        assert lifted.witness.point == direct.witness.point == (Fraction(2),)
        assert verify_witness(line, lifted.witness, constraints).passed

    def test_value_rows(self, line):
        outcome = search_families(line.points, 2, value_rows=[[1, 0, 0, 0]])
        assert outcome.witness.weights[0][0] == 0

    def test_direct_search_is_pairwise_only(self, square):
        with pytest.raises(TverbergInputError, match="pairwise"):
            direct_constrained_search(square, ConstraintSet(r=3, disjointness={"jwise": 3}))
