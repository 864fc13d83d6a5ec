"""
Parameter calculators: the numeric hypotheses of the theorem catalog.
All comparisons are exact (integers or Fractions).
"""
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.errors import TverbergInputError


class BoundSet(BaseModel):
    """
    Integer parameters of a theorem instance, each optional.

    r parts, ambient dimension d, c constraint functions, j-wise
    disjointness, dimension bound k, slack s, auxiliary m, simplex
    dimension N, and l faces of top dimension.
    """
    model_config = ConfigDict(frozen=True, extra='forbid')

    r: Optional[int] = Field(None, ge=2)
    d: Optional[int] = Field(None, ge=1)
    c: Optional[int] = Field(None, ge=0)
    j: Optional[int] = Field(None, ge=2)
    k: Optional[int] = None
    s: Optional[int] = Field(None, ge=0)
    m: Optional[int] = Field(None, ge=0)
    N: Optional[int] = Field(None, ge=0)
    l: Optional[int] = Field(None, ge=0)

    @model_validator(mode='after')
    def validate_relations(self):
        if self.j is not None and self.r is not None and self.j > self.r:
            raise ValueError(f'j must satisfy 2 <= j <= r, got j={self.j}, r={self.r}')
        if self.s is not None and self.r is not None and self.s > self.r:
            raise ValueError(f's must satisfy 0 <= s <= r, got s={self.s}, r={self.r}')
        return self

    def require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise TverbergInputError(f"Missing parameters: {', '.join(missing)}")


def _check_ranges(r: int, d: int, j: Optional[int] = None) -> None:
    if r < 2:
        raise TverbergInputError(f"r must be at least 2, got {r}")
    if d < 1:
        raise TverbergInputError(f"d must be at least 1, got {d}")
    if j is not None and not 2 <= j <= r:
        raise TverbergInputError(f"j must satisfy 2 <= j <= r, got {j}")


def bound_Nc(r: int, d: int, c: int) -> int:
    """N_c = (r-1)(d+1+c): simplex dimension that forces c constraint functions."""
    _check_ranges(r, d)
    if c < 0:
        raise TverbergInputError(f"c must be nonnegative, got {c}")
    return (r - 1) * (d + 1 + c)


def tverberg_number(r: int, d: int) -> int:
    """N = (r-1)(d+1), the smallest N forcing a Tverberg r-partition in R^d."""
    return bound_Nc(r, d, 0)


def min_dimension_bound(r: int, d: int) -> int:
    """Least k with k >= (r-1)d/r."""
    _check_ranges(r, d)
    return ceil(Fraction((r - 1) * d, r))


def gvkf_condition_original(r: int, j: int, d: int, k: int, N: int) -> Optional[int]:
    """
    Least m >= 0 with (r-1)(m+1) + r(k+1) >= (N+1)(j-1) > (r-1)(m+d+2),
    or None when no such m exists.

    Raises:
        TverbergInputError: k >= d or parameters out of range
    """
    _check_ranges(r, d, j)
    if k >= d:
        raise TverbergInputError(f"The generalized van Kampen-Flores condition needs k < d, got k={k}, d={d}")
    target = (N + 1) * (j - 1)
    # First inequality: m + 1 >= (target - r(k+1)) / (r-1)
    needed = -((r * (k + 1) - target) // (r - 1))
    m = max(0, needed - 1)
    # The second inequality only gets harder as m grows.
    if target > (r - 1) * (m + d + 2):
        return m
    return None


def gvkf_condition_sharpened(r: int, j: int, d: int, k: int, N: int) -> bool:
    """k >= (r-1)d/r and N+1 > (r-1)(d+2)/(j-1), compared exactly."""
    _check_ranges(r, d, j)
    return (
        Fraction(k) >= Fraction((r - 1) * d, r)
        and Fraction(N + 1) > Fraction((r - 1) * (d + 2), j - 1)
        and k <= N
    )


def jwise_condition(r: int, j: int, d: int, N: int) -> bool:
    """N+1 > (r-1)(d+1)/(j-1)."""
    _check_ranges(r, d, j)
    return Fraction(N + 1) > Fraction((r - 1) * (d + 1), j - 1)


def sarkaria_size(r: int, j: int, d: int) -> int:
    """Points in the projection example: floor((r-1)/(j-1)) (d+2)."""
    _check_ranges(r, d, j)
    return floor(Fraction(r - 1, j - 1)) * (d + 2)


def non_uniform_top_faces(N: int, r: int, k: int, s: int) -> int:
    """Largest l allowed by l(k+1) <= N-(r-s)+1."""
    return max(0, (N - (r - s) + 1) // (k + 1))


def type_b_min_colors(r: int, d: int) -> int:
    """Least number c of color classes: ceil((r-1)d/r) + 1."""
    return min_dimension_bound(r, d) + 1


def admissible(dims: Sequence[int], d: int) -> bool:
    """
    floor(d/2) <= d_i <= d for every entry and the codimensions sum to at most d.

    Raises:
        TverbergInputError: fewer than two entries
    """
    if len(dims) < 2:
        raise TverbergInputError(f"Admissible tuples need r >= 2 entries, got {len(dims)}")
    if not all(d // 2 <= di <= d for di in dims):
        return False
    return sum(d - di for di in dims) <= d


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, isqrt(n) + 1))
