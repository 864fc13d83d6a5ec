from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .errors import TverbergInputError
from .rational import Rational

Face = Tuple[int, ...]
Point = Tuple[Fraction, ...]


def make_face(indices: Iterable[int], n_points: Optional[int] = None) -> Face:
    """Sorted, duplicate-free, nonempty vertex tuple."""
    face = tuple(sorted(set(int(i) for i in indices)))
    if not face:
        raise TverbergInputError("Faces must be nonempty")
    if face[0] < 0:
        raise TverbergInputError(f"Negative vertex index in face {face}")
    if n_points is not None and face[-1] >= n_points:
        raise TverbergInputError(
            f"Vertex {face[-1]} out of range for a configuration of {n_points} points"
        )
    return face


def face_dimension(face: Face) -> int:
    return len(face) - 1


class Configuration(BaseModel):
    """
    Labeled points with exact coordinates in R^d, i.e. the affine map
    from the simplex on N+1 vertices given by its vertex images.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(..., ge=1, description="Ambient dimension d")
    points: Tuple[Tuple[Rational, ...], ...] = Field(..., min_length=1)
    labels: Optional[Tuple[str, ...]] = None
    colors: Optional[Tuple[Tuple[int, ...], ...]] = None
    provenance: Optional[Dict[str, Any]] = None

    @model_validator(mode='after')
    def validate_shape(self):
        for index, point in enumerate(self.points):
            if len(point) != self.dim:
                raise ValueError(
                    f'Point {index} has {len(point)} coordinates, expected {self.dim}'
                )
        if self.labels is not None and len(self.labels) != len(self.points):
            raise ValueError('labels must have one entry per point')
        if self.colors is not None:
            seen: List[int] = []
            for color_class in self.colors:
                if not color_class:
                    raise ValueError('Color classes must be nonempty')
                seen.extend(color_class)
            if sorted(seen) != list(range(len(self.points))):
                raise ValueError('colors must partition the point indices 0..N')
        return self

    @field_validator('colors')
    def sort_color_classes(cls, v):
        if v is None:
            return v
        return tuple(tuple(sorted(c)) for c in v)

    @property
    def n_points(self) -> int:
        return len(self.points)

    @property
    def N(self) -> int:
        """Dimension of the simplex whose vertices are the points."""
        return len(self.points) - 1

    @cached_property
    def color_of(self) -> Optional[Tuple[int, ...]]:
        """Class index for each vertex, or None without a coloring."""
        if self.colors is None:
            return None
        lookup = [0] * self.n_points
        for class_index, color_class in enumerate(self.colors):
            for vertex in color_class:
                lookup[vertex] = class_index
        return tuple(lookup)

    def face(self, indices: Iterable[int]) -> Face:
        return make_face(indices, self.n_points)

    def label(self, index: int) -> str:
        if self.labels is None:
            return str(index)
        return self.labels[index]


class Witness(BaseModel):
    """
    A face family with a common point and per-face convex weights
    certifying that the faces' hulls intersect.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    faces: Tuple[Tuple[int, ...], ...] = Field(..., min_length=1)
    weights: Tuple[Dict[int, Rational], ...]
    point: Tuple[Rational, ...]

    @field_validator('faces')
    def faces_sorted_nonempty(cls, v):
        for face in v:
            if not face:
                raise ValueError('Witness faces must be nonempty')
            if any(a >= b for a, b in zip(face, face[1:])):
                raise ValueError(f'Face {face} must be strictly increasing')
        return v

    @field_validator('weights')
    def weights_sorted(cls, v):
        return tuple(dict(sorted(w.items())) for w in v)

    @model_validator(mode='after')
    def validate_lengths(self):
        if len(self.weights) != len(self.faces):
            raise ValueError('One weight map is required per face')
        return self

    @property
    def r(self) -> int:
        return len(self.faces)

    @property
    def dimensions(self) -> Tuple[int, ...]:
        return tuple(face_dimension(face) for face in self.faces)


def combination(config: Configuration, weights: Dict[int, Fraction]) -> Point:
    """
    Exact sum of weight(v) * p_v.

    Raises:
        TverbergInputError: nonzero weight on a vertex outside the configuration
    """
    total = [Fraction(0)] * config.dim
    for vertex, weight in weights.items():
        if weight == 0:
            continue
        if not 0 <= vertex < config.n_points:
            raise TverbergInputError(f"Vertex {vertex} is not one of the {config.n_points} points")
        for axis, coordinate in enumerate(config.points[vertex]):
            total[axis] += weight * coordinate
    return tuple(total)


def coerce_faces(faces: Iterable[Union[Iterable[int], Face]], n_points: int) -> Tuple[Face, ...]:
    """Validate a user supplied face family against a configuration size."""
    result = tuple(make_face(face, n_points) for face in faces)
    if not result:
        raise TverbergInputError("At least one face is required")
    return result
