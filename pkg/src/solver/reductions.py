"""
Reductions of constrained searches to plain Tverberg searches.

* Lifting: affine constraint functions g are appended as coordinates, so a
  partition of the lifted points equalizes g as well.
* Equal barycentric coordinates: class indicator functions are lifted,
  then minimal faces are padded to exactly one vertex per class.
* j-wise disjointness: every point is repeated j-1 times, a pairwise
  partition is searched among the copies and projected back.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ..core.errors import SolverInvariantError, TverbergInputError
from ..core.geometry import minimal_support_faces, pad_faces
from ..core.model import Configuration, Face, Witness
from ..core.validation import equal_coordinates_by_class, verify_witness
from .constraints import ConstraintSet
from .search import FaceFilter, SearchOutcome, find_tverberg, search_families

logger = logging.getLogger("tverberg.reductions")

Projection = Tuple[int, ...]


def lift_configuration(
    config: Configuration,
    affine_constraints: Sequence[Sequence[Fraction]],
) -> Configuration:
    """
    Append the i-th value of every constraint row to point i.

    Raises:
        TverbergInputError: a row does not have one value per point
    """
    rows = [tuple(Fraction(v) for v in row) for row in affine_constraints]
    if not rows:
        return config
    for index, row in enumerate(rows):
        if len(row) != config.n_points:
            raise TverbergInputError(
                f"Constraint row {index} has {len(row)} values, expected {config.n_points}"
            )
    points = tuple(
        tuple(point) + tuple(row[i] for row in rows)
        for i, point in enumerate(config.points)
    )
    return config.model_copy(update={"dim": config.dim + len(rows), "points": points})


def _truncate(witness: Witness, dim: int) -> Witness:
    return Witness(faces=witness.faces, weights=witness.weights, point=witness.point[:dim])


def solve_lifted(
    config: Configuration,
    constraints: ConstraintSet,
    jobs: Optional[int] = None,
    cap: Optional[int] = None,
) -> SearchOutcome:
    """Lift the affine constraints and search the lifted configuration."""
    lifted = lift_configuration(config, constraints.affine_constraints or [])
    remaining = constraints.model_copy(update={"affine_constraints": None})
    outcome = find_tverberg(lifted, remaining, jobs=jobs, cap=cap)
    if not outcome.found:
        return outcome
    return outcome.model_copy(update={"witness": _truncate(outcome.witness, config.dim)})


def class_indicator_rows(config: Configuration) -> List[Tuple[Fraction, ...]]:
    """Indicator rows of color classes 1..m; class 0 is implied by the others."""
    rows = []
    for color_class in config.colors[1:]:
        members = set(color_class)
        rows.append(tuple(Fraction(1 if v in members else 0) for v in range(config.n_points)))
    return rows


def _pad_one_per_class(witness: Witness, colors: Sequence[Sequence[int]]) -> Witness:
    touched = set()
    for face in witness.faces:
        touched.update(face)
    additions: List[List[int]] = [[] for _ in witness.faces]
    for color_class in colors:
        if touched.intersection(color_class):
            continue
        for index, vertex in enumerate(color_class[:len(witness.faces)]):
            additions[index].append(vertex)
    return pad_faces(witness, additions)


def solve_equal_barycentric(
    config: Configuration,
    r: Optional[int] = None,
    jobs: Optional[int] = None,
    cap: Optional[int] = None,
) -> SearchOutcome:
    """
    Find r disjoint rainbow faces holding points with equal barycentric
    coordinates whose images coincide.

    Raises:
        TverbergInputError: coloring missing or not (r-1)d+1 classes of size r
        SolverInvariantError: the lifted witness does not give equal coordinates
    """
    if config.colors is None:
        raise TverbergInputError("equal barycentric coordinates need a coloring")
    r = len(config.colors[0]) if r is None else r
    ConstraintSet(r=r, equal_barycentric=True).check_against(config)

    lifted = lift_configuration(config, class_indicator_rows(config))
    outcome = search_families(lifted.points, r, jobs=jobs, cap=cap)
    if not outcome.found:
        logger.warning("No lifted partition found", extra={"status": outcome.status})
        return outcome

    witness = minimal_support_faces(_truncate(outcome.witness, config.dim))
    witness = _pad_one_per_class(witness, config.colors)
    if equal_coordinates_by_class(config, witness) is None:
        raise SolverInvariantError(
            f"Lifted witness {witness.faces} does not have equal barycentric coordinates"
        )
    return outcome.model_copy(update={"witness": witness})


def replicate_for_jwise(config: Configuration, j: int) -> Tuple[Configuration, Projection]:
    """
    Repeat every point j-1 times, copy-major: replica c*(N+1)+i is point i.

    Returns:
        (replicated configuration, projection replica -> original)
    """
    if j < 2:
        raise TverbergInputError(f"j must be at least 2, got {j}")
    copies = j - 1
    n = config.n_points
    projection = tuple(i for _ in range(copies) for i in range(n))
    points = tuple(config.points[i] for i in projection)
    labels = None if config.labels is None else tuple(config.labels[i] for i in projection)
    colors = None
    if config.colors is not None:
        colors = tuple(
            tuple(c * n + v for c in range(copies) for v in color_class)
            for color_class in config.colors
        )
    provenance = dict(config.provenance or {})
    provenance["replicas"] = copies
    replica = Configuration(
        dim=config.dim, points=points, labels=labels, colors=colors, provenance=provenance,
    )
    return replica, projection


def project_family(family: Sequence[Face], projection: Projection) -> Tuple[Face, ...]:
    return tuple(tuple(sorted({projection[v] for v in face})) for face in family)


def project_witness(witness: Witness, projection: Projection) -> Witness:
    """Map faces through the projection, summing the weights of merged copies."""
    weights = []
    for face_weights in witness.weights:
        merged: Dict[int, Fraction] = {}
        for vertex, weight in face_weights.items():
            original = projection[vertex]
            merged[original] = merged.get(original, Fraction(0)) + weight
        weights.append(merged)
    return Witness(
        faces=project_family(witness.faces, projection),
        weights=tuple(weights),
        point=witness.point,
    )


def solve_jwise_constrained(
    config: Configuration,
    constraints: ConstraintSet,
    jobs: Optional[int] = None,
    cap: Optional[int] = None,
) -> SearchOutcome:
    """
    Pairwise search among j-1 copies of every point, projected back and
    re-verified in ``config``.

    Raises:
        SolverInvariantError: the projected witness fails verification
    """
    replica, projection = replicate_for_jwise(config, constraints.j)
    face_filter = FaceFilter.from_constraints(config, constraints, projection)
    outcome = search_families(replica.points, constraints.r, face_filter, jobs=jobs, cap=cap)
    if not outcome.found:
        return outcome

    witness = project_witness(outcome.witness, projection)
    if constraints.exact_dims is not None:
        witness = prescribe_dimensions(
            witness,
            constraints.exact_dims,
            FaceFilter.from_constraints(config, constraints),
            config.n_points,
            max_per_vertex=constraints.j - 1,
        )
        if not dimensions_match(witness, constraints.exact_dims):
            retry = search_families(
                replica.points, constraints.r, face_filter.with_exact_sizes(), jobs=jobs, cap=cap
            )
            if retry.found:
                outcome = retry
                witness = project_witness(retry.witness, projection)
    report = verify_witness(config, witness, constraints)
    failures = [c for c in report.failures if c.check_name != "exact_dimensions"]
    if failures:
        raise SolverInvariantError(
            f"Projected witness fails {', '.join(c.check_name for c in failures)}"
        )
    return outcome.model_copy(update={"witness": witness})


def solve_jwise(
    config: Configuration,
    r: int,
    j: int,
    uniform_dim_bound: Optional[int] = None,
    jobs: Optional[int] = None,
    cap: Optional[int] = None,
) -> SearchOutcome:
    disjointness = "pairwise" if j == 2 else {"jwise": j}
    constraints = ConstraintSet(r=r, disjointness=disjointness, max_dims=uniform_dim_bound)
    return find_tverberg(config, constraints, jobs=jobs, cap=cap)


def dimensions_match(witness: Witness, exact_dims: Sequence[int]) -> bool:
    return sorted(witness.dimensions) == sorted(exact_dims)


def prescribe_dimensions(
    witness: Witness,
    exact_dims: Sequence[int],
    face_filter: Optional[FaceFilter],
    n_points: int,
    max_per_vertex: int = 1,
) -> Witness:
    """
    Shrink to minimal support, then pad faces with unused zero-weight
    vertices until the dimensions match ``exact_dims`` as a multiset.
    Faces that cannot be padded far enough are left short; callers then
    search again with the face sizes fixed (``FaceFilter.with_exact_sizes``).
    """
    minimal = minimal_support_faces(witness)
    order = sorted(range(minimal.r), key=lambda i: (-len(minimal.faces[i]), i))
    targets = sorted(exact_dims, reverse=True)

    usage: Dict[int, int] = {}
    for face in minimal.faces:
        for vertex in face:
            usage[vertex] = usage.get(vertex, 0) + 1

    additions: List[List[int]] = [[] for _ in minimal.faces]
    for index, target in zip(order, targets):
        face = list(minimal.faces[index])
        for vertex in range(n_points):
            if len(face) >= target + 1:
                break
            if vertex in face or usage.get(vertex, 0) >= max_per_vertex:
                continue
            grown = tuple(sorted(face + [vertex]))
            if face_filter is not None and not face_filter.allows(grown):
                continue
            face = list(grown)
            additions[index].append(vertex)
            usage[vertex] = usage.get(vertex, 0) + 1
    return pad_faces(minimal, additions)
