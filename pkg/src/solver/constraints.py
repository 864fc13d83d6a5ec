"""
Constraint sets for Tverberg partition searches.
"""
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator, model_validator

from ..complexes.dsl import parse_subcomplex
from ..complexes.subcomplex import Subcomplex
from ..core.errors import TverbergInputError
from ..core.model import Configuration
from ..core.rational import Rational


class JWiseDisjointness(BaseModel):
    """Every j of the faces have empty common intersection."""
    model_config = ConfigDict(frozen=True)

    jwise: int = Field(..., ge=2)


class ConstraintSet(BaseModel):
    """
    What a Tverberg partition has to satisfy besides a common point.

    Dimension bounds given as a list are matched against the faces as a
    multiset: some assignment of bounds to faces must work.
    """
    model_config = ConfigDict(frozen=True)

    r: int = Field(..., ge=2, description="Number of faces")
    disjointness: Union[Literal["pairwise"], JWiseDisjointness] = "pairwise"
    subcomplex: Optional[Subcomplex] = None
    max_dims: Optional[Union[int, List[int]]] = None
    exact_dims: Optional[List[int]] = None
    rainbow: bool = False
    equal_barycentric: bool = False
    affine_constraints: Optional[List[List[Rational]]] = None

    @field_validator('subcomplex', mode='before')
    def parse_dsl(cls, v):
        if isinstance(v, str):
            return parse_subcomplex(v)
        return v

    @field_serializer('subcomplex')
    def subcomplex_as_dsl(self, v):
        return None if v is None else v.to_dsl()

    @field_validator('max_dims')
    def dims_nonnegative(cls, v):
        values = [v] if isinstance(v, int) else (v or [])
        if any(k < 0 for k in values):
            raise ValueError('Dimension bounds must be nonnegative')
        return v

    @field_validator('exact_dims')
    def exact_nonnegative(cls, v):
        if v is not None and any(k < 0 for k in v):
            raise ValueError('Prescribed dimensions must be nonnegative')
        return v

    @model_validator(mode='after')
    def validate_consistency(self):
        r = self.r
        if isinstance(self.max_dims, list) and len(self.max_dims) != r:
            raise ValueError(f'max_dims lists need exactly r = {r} entries')
        if self.exact_dims is not None:
            if len(self.exact_dims) != r:
                raise ValueError(f'exact_dims needs exactly r = {r} entries')
            if self.max_dims is not None:
                caps = self._sorted_max_dims()
                wanted = sorted(self.exact_dims, reverse=True)
                if any(e > c for e, c in zip(wanted, caps)):
                    raise ValueError('exact_dims exceed max_dims')
        if self.j > r:
            raise ValueError(f'j-wise disjointness needs j <= r, got j = {self.j}')
        if self.equal_barycentric:
            others = [
                self.subcomplex is not None,
                self.max_dims is not None,
                self.exact_dims is not None,
                self.affine_constraints is not None,
                self.j != 2,
            ]
            if any(others):
                raise ValueError('equal_barycentric combines only with r and pairwise disjointness')
        return self

    def _sorted_max_dims(self) -> List[int]:
        if isinstance(self.max_dims, int):
            return [self.max_dims] * self.r
        return sorted(self.max_dims or [], reverse=True)

    @property
    def j(self) -> int:
        if self.disjointness == "pairwise":
            return 2
        return self.disjointness.jwise

    @property
    def dim_bounds(self) -> Optional[Tuple[int, ...]]:
        """Per-face dimension bounds, largest first, or None."""
        if self.exact_dims is not None:
            return tuple(sorted(self.exact_dims, reverse=True))
        if self.max_dims is None:
            return None
        return tuple(self._sorted_max_dims())

    @property
    def face_restricted(self) -> bool:
        return (
            self.subcomplex is not None
            or self.rainbow
            or self.max_dims is not None
            or self.exact_dims is not None
        )

    def check_against(self, config: Configuration) -> None:
        """
        Raise TverbergInputError when the constraints cannot apply to ``config``.
        """
        n_points = config.n_points
        if self.rainbow and config.colors is None:
            raise TverbergInputError("rainbow constraint needs a coloring on the configuration")
        if self.affine_constraints is not None:
            for index, row in enumerate(self.affine_constraints):
                if len(row) != n_points:
                    raise TverbergInputError(
                        f"Affine constraint {index} has {len(row)} values, expected {n_points}"
                    )
        if self.equal_barycentric:
            if config.colors is None:
                raise TverbergInputError("equal_barycentric needs a coloring on the configuration")
            m = (self.r - 1) * config.dim + 1
            if len(config.colors) != m:
                raise TverbergInputError(
                    f"equal_barycentric needs (r-1)d+1 = {m} color classes, got {len(config.colors)}"
                )
            if any(len(c) != self.r for c in config.colors):
                raise TverbergInputError(f"equal_barycentric needs every class of size r = {self.r}")
