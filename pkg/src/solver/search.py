"""
Search for constrained Tverberg partitions.

Two complete search spaces are used:
  * ``set_partitions``: without face restrictions every feasible family
    can be enlarged to a partition of all points (hull monotonicity), so
    partitions into r blocks in restricted-growth order suffice;
  * ``bounded_families``: with face restrictions, all families of r
    disjoint allowed faces are enumerated in canonical order. The LP is
    only solved on maximal families, which is complete for the same reason.

The enumeration is split into fixed prefixes and reduced in prefix order,
so the first witness and the statistics do not depend on ``jobs``.
"""
import logging
import time
from contextlib import closing
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..complexes.subcomplex import Subcomplex
from ..config import settings
from ..core.errors import TverbergInputError
from ..core.geometry import HullSolution, solve_hull_system
from ..core.model import Configuration, Face, Witness
from ..metrics import MetricsCollector
from .constraints import ConstraintSet
from .enumeration import (
    Family,
    disjoint_families,
    first_faces,
    is_maximal,
    restricted_growth_strings,
    rgs_prefixes,
    rgs_to_blocks,
)
from .parallel import ordered_map

logger = logging.getLogger("tverberg.search")

SearchStatus = Literal["witness_found", "exhausted_no_witness", "aborted_cap"]
SearchSpace = Literal["set_partitions", "bounded_families"]

PARTITION_PREFIX_LENGTH = 4


class SearchStatistics(BaseModel):
    model_config = ConfigDict(frozen=True)

    space: SearchSpace
    families_enumerated: int = 0
    lp_calls: int = 0
    elapsed_seconds: Optional[float] = None


class SearchOutcome(BaseModel):
    """Result of one search; the witness is present iff one was found."""
    model_config = ConfigDict(frozen=True)

    status: SearchStatus
    witness: Optional[Witness] = None
    statistics: SearchStatistics

    @model_validator(mode='after')
    def witness_matches_status(self):
        if (self.witness is not None) != (self.status == "witness_found"):
            raise ValueError('A witness is present exactly when status is witness_found')
        return self

    @property
    def found(self) -> bool:
        return self.status == "witness_found"


class FaceFilter(BaseModel):
    """
    Which faces and families a bounded search may use.

    With a ``projection`` the search runs on replicated points: a face may
    hold at most one copy of each original vertex and is judged by its
    projection. With ``exact`` the dimension bounds must be met exactly.
    """
    model_config = ConfigDict(frozen=True)

    subcomplex: Optional[Subcomplex] = None
    rainbow: bool = False
    color_of: Optional[Tuple[int, ...]] = None
    dim_bounds: Optional[Tuple[int, ...]] = None
    projection: Optional[Tuple[int, ...]] = None
    exact: bool = False

    @model_validator(mode='after')
    def exact_needs_bounds(self):
        if self.exact and self.dim_bounds is None:
            raise ValueError('exact face sizes need dimension bounds')
        return self

    @classmethod
    def from_constraints(
        cls,
        config: Configuration,
        constraints: ConstraintSet,
        projection: Optional[Sequence[int]] = None,
    ) -> "FaceFilter":
        return cls(
            subcomplex=constraints.subcomplex,
            rainbow=constraints.rainbow,
            color_of=config.color_of,
            dim_bounds=constraints.dim_bounds,
            projection=None if projection is None else tuple(projection),
        )

    def original(self, face: Face) -> Optional[Face]:
        if self.projection is None:
            return face
        image = tuple(sorted({self.projection[v] for v in face}))
        if len(image) != len(face):
            return None
        return image

    def allows(self, face: Face) -> bool:
        image = self.original(face)
        if image is None:
            return False
        if self.dim_bounds is not None and len(image) > self.dim_bounds[0] + 1:
            return False
        if self.rainbow:
            colors = [self.color_of[v] for v in image]
            if len(set(colors)) != len(colors):
                return False
        if self.subcomplex is not None and not self.subcomplex.contains(image, self.color_of):
            return False
        return True

    def family_ok(self, family: Family) -> bool:
        if self.dim_bounds is None:
            return True
        sizes = sorted((len(face) for face in family), reverse=True)
        if self.exact:
            return sizes == [bound + 1 for bound in self.dim_bounds]
        return all(size <= bound + 1 for size, bound in zip(sizes, self.dim_bounds))

    def with_exact_sizes(self) -> "FaceFilter":
        return self.model_copy(update={"exact": True})

    def can_grow(self, family: Family, index: int, vertex: int) -> bool:
        grown = tuple(sorted(family[index] + (vertex,)))
        if not self.allows(grown):
            return False
        return self.family_ok(family[:index] + (grown,) + family[index + 1:])

    def max_size(self, n_points: int) -> int:
        size = n_points
        if self.projection is not None:
            size = min(size, len(set(self.projection)))
        if self.dim_bounds is not None:
            size = min(size, self.dim_bounds[0] + 1)
        if self.rainbow and self.color_of is not None:
            size = min(size, len(set(self.color_of)))
        return size


@dataclass(frozen=True)
class _PrefixTask:
    points: Tuple[Tuple[Fraction, ...], ...]
    r: int
    space: SearchSpace
    prefix: Tuple[int, ...]
    face_filter: Optional[FaceFilter]
    value_rows: Optional[Tuple[Tuple[Fraction, ...], ...]]
    cap: int


@dataclass(frozen=True)
class _PrefixResult:
    family: Optional[Family]
    solution: Optional[HullSolution]
    families: int
    lp_calls: int


def _search_prefix(task: _PrefixTask) -> _PrefixResult:
    """Serial search of one enumeration prefix; stops past the cap."""
    n = len(task.points)
    face_filter = task.face_filter
    if task.space == "set_partitions":
        families = (
            rgs_to_blocks(rgs, task.r)
            for rgs in restricted_growth_strings(n, task.r, task.prefix)
        )
    else:
        families = disjoint_families(
            n,
            task.r,
            face_filter.max_size(n),
            face_filter.allows,
            first=task.prefix,
        )

    enumerated = 0
    lp_calls = 0
    for family in families:
        if face_filter is not None and not face_filter.family_ok(family):
            continue
        enumerated += 1
        if enumerated > task.cap:
            break
        if task.space == "bounded_families" and not is_maximal(family, n, face_filter.can_grow):
            continue
        lp_calls += 1
        solution = solve_hull_system(task.points, family, task.value_rows)
        if solution is not None:
            return _PrefixResult(family, solution, enumerated, lp_calls)
    return _PrefixResult(None, None, enumerated, lp_calls)


def search_families(
    points: Sequence[Sequence[Fraction]],
    r: int,
    face_filter: Optional[FaceFilter] = None,
    value_rows: Optional[Sequence[Sequence[Fraction]]] = None,
    jobs: Optional[int] = None,
    cap: Optional[int] = None,
) -> SearchOutcome:
    """
    Enumerate candidate families of ``points`` and return the first one
    whose hulls meet (with ``value_rows`` equalized as well).
    """
    jobs = settings.jobs if jobs is None else jobs
    cap = settings.family_cap if cap is None else cap
    points = tuple(tuple(Fraction(c) for c in p) for p in points)
    rows = None if value_rows is None else tuple(tuple(Fraction(v) for v in row) for row in value_rows)
    n = len(points)
    started = time.perf_counter()

    if face_filter is None:
        space: SearchSpace = "set_partitions"
        prefixes = rgs_prefixes(n, r, PARTITION_PREFIX_LENGTH) if n >= r else []
    else:
        space = "bounded_families"
        prefixes = first_faces(n, r, face_filter.max_size(n), face_filter.allows) if n >= r else []
    tasks = [_PrefixTask(points, r, space, prefix, face_filter, rows, cap) for prefix in prefixes]

    status: SearchStatus = "exhausted_no_witness"
    witness = None
    enumerated = 0
    lp_calls = 0
    with closing(ordered_map(_search_prefix, tasks, jobs)) as results:
        for result in results:
            enumerated += result.families
            lp_calls += result.lp_calls
            if enumerated > cap:
                status = "aborted_cap"
                break
            if result.solution is not None:
                weights, point = result.solution
                witness = Witness(faces=result.family, weights=weights, point=point)
                status = "witness_found"
                break

    elapsed = time.perf_counter() - started
    MetricsCollector.record_search(space, status, enumerated, lp_calls, elapsed)
    logger.info(
        "Search finished",
        extra={"space": space, "r": r, "points": n, "status": status,
               "families": enumerated, "lp_calls": lp_calls},
    )
    return SearchOutcome(
        status=status,
        witness=witness,
        statistics=SearchStatistics(
            space=space,
            families_enumerated=enumerated,
            lp_calls=lp_calls,
            elapsed_seconds=elapsed if settings.report_timing else None,
        ),
    )


def find_tverberg(
    config: Configuration,
    constraints: ConstraintSet,
    jobs: Optional[int] = None,
    cap: Optional[int] = None,
) -> SearchOutcome:
    """
    Search ``config`` for r faces satisfying ``constraints`` whose hulls meet.

    Equal barycentric coordinates, affine constraint functions and j-wise
    disjointness are reduced to plain searches on a transformed
    configuration; the resulting witness is stated for ``config``.

    Raises:
        TverbergInputError: constraints that cannot apply to this configuration
    """
    from . import reductions

    constraints.check_against(config)
    if constraints.equal_barycentric:
        return reductions.solve_equal_barycentric(config, constraints.r, jobs=jobs, cap=cap)
    if constraints.affine_constraints:
        return reductions.solve_lifted(config, constraints, jobs=jobs, cap=cap)
    if constraints.j > 2:
        return reductions.solve_jwise_constrained(config, constraints, jobs=jobs, cap=cap)

    face_filter = None
    if constraints.face_restricted:
        face_filter = FaceFilter.from_constraints(config, constraints)
    outcome = search_families(config.points, constraints.r, face_filter, jobs=jobs, cap=cap)
    if outcome.found and constraints.exact_dims is not None:
        witness = reductions.prescribe_dimensions(
            outcome.witness, constraints.exact_dims, face_filter, config.n_points
        )
        if not reductions.dimensions_match(witness, constraints.exact_dims):
            logger.info("Padding fell short, searching exact face sizes",
                        extra={"dimensions": list(witness.dimensions)})
            retry = search_families(
                config.points, constraints.r, face_filter.with_exact_sizes(), jobs=jobs, cap=cap
            )
            if retry.found:
                return retry
        outcome = outcome.model_copy(update={"witness": witness})
    return outcome


def direct_constrained_search(
    config: Configuration,
    constraints: ConstraintSet,
    jobs: Optional[int] = None,
    cap: Optional[int] = None,
) -> SearchOutcome:
    """
    Pairwise search in the original space with the affine constraint
    equalities added as LP rows, no lifting involved.
    """
    constraints.check_against(config)
    if constraints.j > 2 or constraints.equal_barycentric:
        raise TverbergInputError("direct constrained search handles pairwise constraints only")
    face_filter = None
    if constraints.face_restricted:
        face_filter = FaceFilter.from_constraints(config, constraints)
    return search_families(
        config.points,
        constraints.r,
        face_filter,
        value_rows=constraints.affine_constraints,
        jobs=jobs,
        cap=cap,
    )
