"""
Hull intersection as exact linear feasibility.

For faces F_1..F_r the unknowns are convex weights lambda_{i,v} (v in F_i).
Rows: each face's weights sum to one, and for i >= 2 the combination of F_i
equals the combination of F_1 coordinate by coordinate. Optional value rows
(one value per vertex) are equalized the same way, which is the constraint
function g of the lifting reduction written directly as LP rows.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import TverbergInputError
from .model import Configuration, Face, Point, Witness, coerce_faces
from .simplex import find_feasible_point

logger = logging.getLogger("tverberg.geometry")

ZERO = Fraction(0)
ONE = Fraction(1)

HullSolution = Tuple[Tuple[Dict[int, Fraction], ...], Point]


def solve_hull_system(
    points: Sequence[Sequence[Fraction]],
    faces: Sequence[Face],
    value_rows: Optional[Sequence[Sequence[Fraction]]] = None,
) -> Optional[HullSolution]:
    """
    Decide whether the hulls of ``faces`` share a point.

    Args:
        points: exact point coordinates, indexed by vertex
        faces: vertex tuples (may overlap; overlap is the caller's business)
        value_rows: per-vertex values whose convex combinations must agree

    Returns:
        (weights per face, common point) or None when the hulls are disjoint
    """
    dim = len(points[0])
    rows_extra = list(value_rows or ())

    axes = [[point[axis] for point in points] for axis in range(dim)]
    if not ranges_overlap(faces, axes + rows_extra):
        return None

    columns: List[Tuple[int, int]] = []
    for face_index, face in enumerate(faces):
        for vertex in face:
            columns.append((face_index, vertex))
    n = len(columns)

    A: List[List[Fraction]] = []
    b: List[Fraction] = []

    for face_index in range(len(faces)):
        A.append([ONE if c[0] == face_index else ZERO for c in columns])
        b.append(ONE)

    def tie_row(face_index: int, values: Sequence[Fraction]) -> List[Fraction]:
        row = [ZERO] * n
        for column, (owner, vertex) in enumerate(columns):
            if owner == face_index:
                row[column] += values[vertex]
            elif owner == 0:
                row[column] -= values[vertex]
        return row

    for face_index in range(1, len(faces)):
        for values in axes:
            A.append(tie_row(face_index, values))
            b.append(ZERO)
        for values in rows_extra:
            A.append(tie_row(face_index, values))
            b.append(ZERO)

    result = find_feasible_point(A, b)
    if not result.feasible:
        return None

    weights: List[Dict[int, Fraction]] = [dict() for _ in faces]
    for value, (face_index, vertex) in zip(result.solution, columns):
        weights[face_index][vertex] = value

    common = [ZERO] * dim
    for vertex, weight in weights[0].items():
        if weight:
            for axis in range(dim):
                common[axis] += weight * points[vertex][axis]
    return tuple(weights), tuple(common)


def ranges_overlap(
    faces: Sequence[Face],
    value_rows: Sequence[Sequence[Fraction]],
) -> bool:
    """
    Necessary condition for meeting hulls: for every row of per-vertex
    values, the faces' [min, max] ranges share a number.
    """
    for values in value_rows:
        low = max(min(values[v] for v in face) for face in faces)
        high = min(max(values[v] for v in face) for face in faces)
        if low > high:
            return False
    return True


def hull_intersection_witness(
    config: Configuration,
    faces: Iterable[Iterable[int]],
) -> Optional[Witness]:
    """
    Return a Witness iff the convex hulls of the faces' point sets meet.

    Raises:
        TverbergInputError: empty family, empty face or index out of range
    """
    family = coerce_faces(faces, config.n_points)
    solution = solve_hull_system(config.points, family)
    if solution is None:
        logger.debug("Hulls disjoint", extra={"faces": [list(f) for f in family]})
        return None
    weights, point = solution
    return Witness(faces=family, weights=weights, point=point)


def minimal_support_faces(witness: Witness) -> Witness:
    """
    Shrink each face to the support of its weights, so each face is the
    unique face holding its point in the relative interior.
    """
    faces = []
    weights = []
    for face, face_weights in zip(witness.faces, witness.weights):
        support = {v: w for v, w in face_weights.items() if w != 0 and v in face}
        if not support:
            raise TverbergInputError(f"Face {face} carries no positive weight")
        faces.append(tuple(sorted(support)))
        weights.append(support)
    return Witness(faces=tuple(faces), weights=tuple(weights), point=witness.point)


def pad_faces(witness: Witness, additions: Sequence[Iterable[int]]) -> Witness:
    """Add zero-weight vertices to faces; the certified point is unchanged."""
    faces = []
    weights = []
    for face, face_weights, extra in zip(witness.faces, witness.weights, additions):
        merged = dict(face_weights)
        for vertex in extra:
            merged.setdefault(vertex, ZERO)
        faces.append(tuple(sorted(set(face) | set(merged))))
        weights.append(merged)
    return Witness(faces=tuple(faces), weights=tuple(weights), point=witness.point)


def affinely_independent(points: Sequence[Sequence[Fraction]]) -> bool:
    """Exact test that the points span a simplex of full dimension len-1."""
    if len(points) <= 1:
        return True
    base = points[0]
    vectors = [[Fraction(c) - Fraction(o) for c, o in zip(p, base)] for p in points[1:]]
    return matrix_rank(vectors) == len(vectors)


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank by exact Gaussian elimination."""
    matrix = [[Fraction(c) for c in row] for row in rows]
    rank = 0
    width = len(matrix[0]) if matrix else 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for i in range(rank + 1, len(matrix)):
            factor = matrix[i][col] / matrix[rank][col]
            if factor:
                for j in range(col, width):
                    matrix[i][j] -= factor * matrix[rank][j]
        rank += 1
        if rank == len(matrix):
            break
    return rank
