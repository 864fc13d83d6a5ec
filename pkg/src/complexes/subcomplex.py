"""
Symbolic subcomplexes of the simplex on vertices 0..N.

Each constructor is a frozen pydantic model with a membership predicate.
Every predicate is downward closed: if a face belongs to the complex, so
does each of its nonempty subfaces.
"""
from functools import cached_property
from typing import Annotated, Dict, FrozenSet, Iterable, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..core.errors import TverbergInputError
from ..core.model import Face


class _Node(BaseModel):
    model_config = ConfigDict(frozen=True)

    def contains(self, face: Face, color_of: Optional[Sequence[int]] = None) -> bool:
        raise NotImplementedError

    def to_dsl(self) -> str:
        raise NotImplementedError


def _format_vertices(vertices: Iterable[int]) -> str:
    """Compress runs into a..b ranges: 0,1,2,5 -> 0..2,5"""
    ordered = sorted(vertices)
    parts = []
    start = previous = None
    for v in ordered:
        if start is None:
            start = previous = v
        elif v == previous + 1:
            previous = v
        else:
            parts.append(f"{start}..{previous}" if previous > start else str(start))
            start = previous = v
    if start is not None:
        parts.append(f"{start}..{previous}" if previous > start else str(start))
    return ",".join(parts)


class FullSimplex(_Node):
    kind: Literal["full"] = "full"
    n: Optional[int] = Field(None, ge=0, description="N, the simplex dimension")

    def contains(self, face, color_of=None):
        return self.n is None or face[-1] <= self.n

    def to_dsl(self):
        return "full" if self.n is None else f"full({self.n})"


class Skeleton(_Node):
    kind: Literal["skeleton"] = "skeleton"
    k: int = Field(..., ge=-1)

    def contains(self, face, color_of=None):
        return len(face) <= self.k + 1

    def to_dsl(self):
        return f"skeleton({self.k})"


class Induced(_Node):
    kind: Literal["induced"] = "induced"
    vertices: FrozenSet[int]

    def contains(self, face, color_of=None):
        return all(v in self.vertices for v in face)

    def to_dsl(self):
        return f"induced({_format_vertices(self.vertices)})"


class AtMostSInS(_Node):
    """Faces with at most s vertices in S."""
    kind: Literal["atmost"] = "atmost"
    s: int = Field(..., ge=0)
    vertices: FrozenSet[int]

    def contains(self, face, color_of=None):
        return sum(1 for v in face if v in self.vertices) <= self.s

    def to_dsl(self):
        return f"atmost({self.s}; {_format_vertices(self.vertices)})"


class Rainbow(_Node):
    """
    Faces with at most one vertex per color class. Without explicit classes
    the coloring of the configuration under test is used.
    """
    kind: Literal["rainbow"] = "rainbow"
    classes: Optional[Tuple[Tuple[int, ...], ...]] = None

    @field_validator('classes')
    def classes_disjoint(cls, v):
        if v is None:
            return v
        seen = set()
        for color_class in v:
            if seen.intersection(color_class):
                raise ValueError('Rainbow color classes must be disjoint')
            seen.update(color_class)
        return tuple(tuple(sorted(c)) for c in v)

    @cached_property
    def class_lookup(self) -> Dict[int, int]:
        return {v: i for i, c in enumerate(self.classes or ()) for v in c}

    def contains(self, face, color_of=None):
        if self.classes is not None:
            lookup = self.class_lookup
            colors = [lookup.get(v, -1 - v) for v in face]
        elif color_of is not None:
            colors = [color_of[v] for v in face]
        else:
            raise TverbergInputError("rainbow needs a coloring on the configuration")
        return len(set(colors)) == len(colors)

    def to_dsl(self):
        if self.classes is None:
            return "rainbow"
        return "rainbow(" + "; ".join(_format_vertices(c) for c in self.classes) + ")"


class ComplexUnion(_Node):
    kind: Literal["union"] = "union"
    left: "Subcomplex"
    right: "Subcomplex"

    def contains(self, face, color_of=None):
        return self.left.contains(face, color_of) or self.right.contains(face, color_of)

    def to_dsl(self):
        return f"{self.left.to_dsl()} | {self.right.to_dsl()}"


class ComplexIntersection(_Node):
    kind: Literal["intersection"] = "intersection"
    left: "Subcomplex"
    right: "Subcomplex"

    def contains(self, face, color_of=None):
        return self.left.contains(face, color_of) and self.right.contains(face, color_of)

    def to_dsl(self):
        return f"{_wrap(self.left)} & {_wrap(self.right)}"


def _wrap(node: _Node) -> str:
    text = node.to_dsl()
    return f"({text})" if isinstance(node, ComplexUnion) else text


Subcomplex = Annotated[
    Union[FullSimplex, Skeleton, Induced, AtMostSInS, Rainbow, ComplexUnion, ComplexIntersection],
    Field(discriminator="kind"),
]

ComplexUnion.model_rebuild()
ComplexIntersection.model_rebuild()


def contains_face(
    sigma: _Node,
    face: Iterable[int],
    n_vertices: Optional[int] = None,
    color_of: Optional[Sequence[int]] = None,
) -> bool:
    """
    Evaluate the membership predicate of ``sigma`` on ``face``.

    Raises:
        TverbergInputError: empty face or a vertex index >= n_vertices
    """
    vertices = tuple(sorted(set(face)))
    if not vertices:
        raise TverbergInputError("Faces must be nonempty")
    if vertices[0] < 0 or (n_vertices is not None and vertices[-1] >= n_vertices):
        raise TverbergInputError(f"Face {vertices} out of range for {n_vertices} vertices")
    return sigma.contains(vertices, color_of)


def non_uniform_complex(N: int, r: int, k: int, s: int) -> _Node:
    """The (k-1)-skeleton together with the k-faces on the first N-(r-s)+1 vertices."""
    return ComplexUnion(
        left=Skeleton(k=k - 1),
        right=ComplexIntersection(
            left=Induced(vertices=frozenset(range(N - (r - s) + 1))),
            right=Skeleton(k=k),
        ),
    )


def intersection_of(nodes: Sequence[_Node]) -> _Node:
    if not nodes:
        return FullSimplex()
    result = nodes[0]
    for node in nodes[1:]:
        result = ComplexIntersection(left=result, right=node)
    return result


def rainbow_split(classes: Sequence[Sequence[int]]) -> _Node:
    """At most one vertex in each class, as an intersection of AtMostSInS terms."""
    return intersection_of([AtMostSInS(s=1, vertices=frozenset(c)) for c in classes])
