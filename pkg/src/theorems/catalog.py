"""
Catalog of theorem claims that can be instantiated on affine configurations.

Each claim fills in default parameters, checks its hypotheses and builds
one trial (configuration plus constraint set) per seed. Existence claims
expect a witness in every trial; necessity claims expect the exhaustive
search to come back empty.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..complexes.subcomplex import AtMostSInS, _Node, intersection_of, non_uniform_complex, rainbow_split
from ..complexes.unavoidable import is_unavoidable, pigeonhole_predicate
from ..config import settings
from ..core.errors import TverbergInputError
from ..core.model import Configuration
from ..solver.constraints import ConstraintSet
from ..solver.enumeration import count_bounded_families, stirling2
from ..solver.search import SearchOutcome
from .bounds import (
    BoundSet,
    admissible,
    bound_Nc,
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
from .generators import (
    balanced_sizes,
    chunked_sizes,
    in_general_position,
    moment_curve_config,
    random_config,
    sarkaria_config,
    split_coordinates,
    with_class_sizes,
)

Expectation = Literal["witness", "exhausted"]


class TheoremInstance(BaseModel):
    """A catalog claim with parameters, a coloring and a trial plan."""
    model_config = ConfigDict(frozen=True, extra='forbid')

    theorem_id: str
    params: BoundSet = Field(default_factory=BoundSet)
    class_sizes: Optional[List[int]] = None
    dims: Optional[List[int]] = None
    adversary: Optional[Literal["sarkaria", "moment"]] = None
    trials: int = Field(default_factory=lambda: settings.default_trials, ge=1)
    seed: int = Field(default_factory=lambda: settings.default_seed)

    @field_validator('theorem_id')
    def known_theorem(cls, v):
        if v not in CATALOG_IDS:
            raise ValueError(f'Unknown theorem id {v!r}')
        return v

    @field_validator('class_sizes')
    def sizes_positive(cls, v):
        if v is not None and any(size < 1 for size in v):
            raise ValueError('Color classes must be nonempty')
        return v


@dataclass(frozen=True)
class Trial:
    config: Configuration
    constraints: ConstraintSet
    expected_families: Optional[int] = None
    skip_reason: Optional[str] = None


class TheoremClaim:
    """
    Base class for catalog entries.
    """
    expectation: Expectation = "witness"
    threshold = Fraction(1)
    deterministic = False
    hypotheses = ""

    def __init__(self, theorem_id: str, label: str):
        self.theorem_id = theorem_id
        self.label = label

    def resolve(self, instance: TheoremInstance) -> BoundSet:
        """Parameters with defaults filled in."""
        return instance.params

    def check_hypotheses(self, params: BoundSet, instance: TheoremInstance) -> None:
        raise NotImplementedError

    def backed(self, params: BoundSet, instance: TheoremInstance) -> bool:
        return is_prime_power(params.r)

    def build_trial(self, params: BoundSet, instance: TheoremInstance, seed: int) -> Trial:
        raise NotImplementedError

    def assess(self, params: BoundSet, outcome: SearchOutcome) -> Optional[str]:
        """Extra check of a witness; a message means the trial failed."""
        return None

    def trial_count(self, instance: TheoremInstance) -> int:
        return 1 if self.deterministic else instance.trials

    def fail(self, message: str) -> None:
        raise TverbergInputError(f"{self.theorem_id}: {message}")


def _fill(params: BoundSet, **defaults) -> BoundSet:
    updates = {k: v for k, v in defaults.items() if getattr(params, k) is None}
    return params.model_copy(update=updates) if updates else params


def _colored(count: int, d: int, sizes: List[int], seed: int) -> Configuration:
    return with_class_sizes(random_config(count, d, seed=seed), sizes)


def _check_sizes(claim: TheoremClaim, sizes: List[int], N: int) -> None:
    if sum(sizes) != N + 1:
        claim.fail(f"class sizes {sizes} must add up to N+1 = {N + 1}")


def _certified_unavoidable(claim: TheoremClaim, sigma: _Node, N: int, r: int, fallback: bool) -> None:
    """Decide unavoidability when small enough, else rely on the pigeonhole bound."""
    if N <= settings.unavoidable_cap:
        result = is_unavoidable(sigma, N, r)
        if not result.unavoidable:
            claim.fail(f"{sigma.to_dsl()} is avoidable, e.g. by {result.counterexample}")
    elif not fallback:
        claim.fail(f"{sigma.to_dsl()} is not covered by a pigeonhole bound")


class AffineTverbergClaim(TheoremClaim):
    hypotheses = "N >= (r-1)(d+1)"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        return _fill(params, N=tverberg_number(params.r, params.d))

    def check_hypotheses(self, params, instance):
        if params.N < tverberg_number(params.r, params.d):
            self.fail(f"needs N >= (r-1)(d+1) = {tverberg_number(params.r, params.d)}")

    def backed(self, params, instance):
        return True

    def build_trial(self, params, instance, seed):
        return Trial(random_config(params.N + 1, params.d, seed=seed), ConstraintSet(r=params.r))


class ConstraintLiftingClaim(TheoremClaim):
    hypotheses = "N >= N_c = (r-1)(d+1+c); c affine constraint functions"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        params = _fill(params, c=1)
        return _fill(params, N=bound_Nc(params.r, params.d, params.c))

    def check_hypotheses(self, params, instance):
        if params.N < bound_Nc(params.r, params.d, params.c):
            self.fail(f"needs N >= N_c = {bound_Nc(params.r, params.d, params.c)}")

    def backed(self, params, instance):
        return True

    def build_trial(self, params, instance, seed):
        lifted = random_config(params.N + 1, params.d + params.c, seed=seed)
        config, rows = split_coordinates(lifted, params.d)
        return Trial(config, ConstraintSet(r=params.r, affine_constraints=rows or None))


class WeakColoredClaim(TheoremClaim):
    hypotheses = "N >= (r-1)(2d+2); d+1 color classes of size <= 2r-1"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        return _fill(params, N=(params.r - 1) * (2 * params.d + 2))

    def sizes(self, params, instance):
        return instance.class_sizes or balanced_sizes(params.N + 1, params.d + 1)

    def check_hypotheses(self, params, instance):
        r, d = params.r, params.d
        if params.N < (r - 1) * (2 * d + 2):
            self.fail(f"needs N >= (r-1)(2d+2) = {(r - 1) * (2 * d + 2)}")
        sizes = self.sizes(params, instance)
        _check_sizes(self, sizes, params.N)
        if len(sizes) != d + 1:
            self.fail(f"needs d+1 = {d + 1} color classes, got {len(sizes)}")
        if max(sizes) > 2 * r - 1:
            self.fail(f"color classes must have at most 2r-1 = {2 * r - 1} points")

    def build_trial(self, params, instance, seed):
        config = _colored(params.N + 1, params.d, self.sizes(params, instance), seed)
        return Trial(config, ConstraintSet(r=params.r, rainbow=True))


class TypeBColoredClaim(TheoremClaim):
    hypotheses = "c >= ceil((r-1)d/r)+1 classes of size <= 2r-1; N >= N_c"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        params = _fill(params, c=type_b_min_colors(params.r, params.d))
        return _fill(params, N=bound_Nc(params.r, params.d, params.c))

    def sizes(self, params, instance):
        return instance.class_sizes or balanced_sizes(params.N + 1, params.c)

    def check_hypotheses(self, params, instance):
        r, d, c = params.r, params.d, params.c
        if c < type_b_min_colors(r, d):
            self.fail(f"needs c >= {type_b_min_colors(r, d)} color classes")
        if params.N < bound_Nc(r, d, c):
            self.fail(f"needs N >= N_c = {bound_Nc(r, d, c)}")
        sizes = self.sizes(params, instance)
        _check_sizes(self, sizes, params.N)
        if len(sizes) != c:
            self.fail(f"needs c = {c} color classes, got {len(sizes)}")
        if max(sizes) > 2 * r - 1:
            self.fail(f"color classes must have at most 2r-1 = {2 * r - 1} points")

    def build_trial(self, params, instance, seed):
        config = _colored(params.N + 1, params.d, self.sizes(params, instance), seed)
        return Trial(config, ConstraintSet(r=params.r, rainbow=True))


class DimBoundedClaim(TheoremClaim):
    hypotheses = "N >= (r-1)(d+2); k >= ceil((r-1)d/r)"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        return _fill(
            params,
            k=min_dimension_bound(params.r, params.d),
            N=(params.r - 1) * (params.d + 2),
        )

    def check_hypotheses(self, params, instance):
        if params.N < (params.r - 1) * (params.d + 2):
            self.fail(f"needs N >= (r-1)(d+2) = {(params.r - 1) * (params.d + 2)}")
        if params.k < min_dimension_bound(params.r, params.d):
            self.fail(f"needs k >= {min_dimension_bound(params.r, params.d)}")

    def build_trial(self, params, instance, seed):
        config = random_config(params.N + 1, params.d, seed=seed)
        return Trial(config, ConstraintSet(r=params.r, max_dims=params.k))


class GvkfSharpenedClaim(TheoremClaim):
    hypotheses = "k >= (r-1)d/r; N+1 > (r-1)(d+2)/(j-1); faces j-wise disjoint"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        params = _fill(params, j=params.r, k=min_dimension_bound(params.r, params.d))
        return _fill(params, N=floor(Fraction((params.r - 1) * (params.d + 2), params.j - 1)))

    def check_hypotheses(self, params, instance):
        if not gvkf_condition_sharpened(params.r, params.j, params.d, params.k, params.N):
            self.fail("needs k >= (r-1)d/r, N+1 > (r-1)(d+2)/(j-1) and k <= N")

    def build_trial(self, params, instance, seed):
        config = random_config(params.N + 1, params.d, seed=seed)
        disjointness = "pairwise" if params.j == 2 else {"jwise": params.j}
        return Trial(config, ConstraintSet(r=params.r, disjointness=disjointness, max_dims=params.k))


class NonUniformClaim(TheoremClaim):
    hypotheses = "N >= (r-1)(d+2); r(k+1)+s > N+1; 0 <= s < r; l(k+1) <= N-(r-s)+1"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        params = _fill(params, N=(params.r - 1) * (params.d + 2), s=params.r - 1)
        # Least k with r(k+1) + s > N + 1.
        least_k = max(0, (params.N + 1 - params.s) // params.r)
        return _fill(params, k=least_k)

    def check_hypotheses(self, params, instance):
        r, N, k, s = params.r, params.N, params.k, params.s
        if N < (r - 1) * (params.d + 2):
            self.fail(f"needs N >= (r-1)(d+2) = {(r - 1) * (params.d + 2)}")
        if s >= r:
            self.fail(f"needs 0 <= s < r, got s={s}")
        if not pigeonhole_predicate("iv", {"N": N, "r": r, "k": k, "s": s}):
            self.fail(f"needs r(k+1)+s > N+1, got {r * (k + 1) + s} <= {N + 1}")

    def build_trial(self, params, instance, seed):
        config = random_config(params.N + 1, params.d, seed=seed)
        sigma = non_uniform_complex(params.N, params.r, params.k, params.s)
        return Trial(config, ConstraintSet(r=params.r, subcomplex=sigma))

    def assess(self, params, outcome):
        dims = outcome.witness.dimensions
        if max(dims) > params.k:
            return f"face of dimension {max(dims)} above k = {params.k}"
        top = sum(1 for dim in dims if dim == params.k)
        allowed = non_uniform_top_faces(params.N, params.r, params.k, params.s)
        if top > allowed:
            return f"{top} faces of dimension k, at most {allowed} allowed"
        return None


class VkfSharpenedClaim(TheoremClaim):
    hypotheses = "r = 2, N >= d+2; faces of dimension ceil(d/2) and floor(d/2)"

    def resolve(self, instance):
        params = instance.params
        params.require("d")
        params = _fill(params, r=2)
        return _fill(params, N=params.d + 2)

    def check_hypotheses(self, params, instance):
        if params.r != 2:
            self.fail(f"holds for r = 2 only, got r={params.r}")
        if params.N < params.d + 2:
            self.fail(f"needs N >= d+2 = {params.d + 2}")

    def backed(self, params, instance):
        return True

    def build_trial(self, params, instance, seed):
        d = params.d
        config = random_config(params.N + 1, d, seed=seed)
        return Trial(config, ConstraintSet(r=2, exact_dims=[ceil(d / 2), d // 2]))


class JWiseClaim(TheoremClaim):
    hypotheses = "N+1 > (r-1)(d+1)/(j-1); faces j-wise disjoint"

    def __init__(self, theorem_id: str, label: str, affine: bool):
        super().__init__(theorem_id, label)
        self.affine = affine

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        params = _fill(params, j=params.r)
        return _fill(params, N=floor(Fraction((params.r - 1) * (params.d + 1), params.j - 1)))

    def check_hypotheses(self, params, instance):
        if not jwise_condition(params.r, params.j, params.d, params.N):
            self.fail("needs N+1 > (r-1)(d+1)/(j-1)")

    def backed(self, params, instance):
        return self.affine or is_prime_power(params.r)

    def build_trial(self, params, instance, seed):
        config = random_config(params.N + 1, params.d, seed=seed)
        disjointness = "pairwise" if params.j == 2 else {"jwise": params.j}
        return Trial(config, ConstraintSet(r=params.r, disjointness=disjointness))


class EqualBarycentricClaim(TheoremClaim):
    hypotheses = "N+1 = r((r-1)d+1); (r-1)d+1 color classes of size r"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        return _fill(params, N=params.r * ((params.r - 1) * params.d + 1) - 1)

    def check_hypotheses(self, params, instance):
        expected = params.r * ((params.r - 1) * params.d + 1) - 1
        if params.N != expected:
            self.fail(f"needs N = r((r-1)d+1)-1 = {expected}")

    def backed(self, params, instance):
        return True

    def build_trial(self, params, instance, seed):
        classes = (params.r - 1) * params.d + 1
        config = _colored(params.N + 1, params.d, [params.r] * classes, seed)
        return Trial(config, ConstraintSet(r=params.r, equal_barycentric=True))


class OptimalColoredClaim(TheoremClaim):
    hypotheses = "r prime; N >= (r-1)(d+1); color classes of size <= r-1"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        return _fill(params, N=tverberg_number(params.r, params.d))

    def sizes(self, params, instance):
        return instance.class_sizes or chunked_sizes(params.N + 1, params.r - 1)

    def check_hypotheses(self, params, instance):
        if params.N < tverberg_number(params.r, params.d):
            self.fail(f"needs N >= (r-1)(d+1) = {tverberg_number(params.r, params.d)}")
        sizes = self.sizes(params, instance)
        _check_sizes(self, sizes, params.N)
        if max(sizes) > params.r - 1:
            self.fail(f"color classes must have at most r-1 = {params.r - 1} points")

    def backed(self, params, instance):
        return is_prime(params.r)

    def build_trial(self, params, instance, seed):
        config = _colored(params.N + 1, params.d, self.sizes(params, instance), seed)
        return Trial(config, ConstraintSet(r=params.r, rainbow=True))


class OptimalColoredSplitClaim(TheoremClaim):
    """
    Small classes of size <= r-1 and k large classes of size >= 2r-1. The
    large classes become singletons plus an at-most-one-vertex condition.
    """
    hypotheses = "r prime; small classes <= r-1, k large classes >= 2r-1; small total > (r-1)(d-k+1)-k"

    def sizes(self, params, instance) -> List[int]:
        if instance.class_sizes is not None:
            return list(instance.class_sizes)
        r, d, k = params.r, params.d, params.k
        small_total = max(0, (r - 1) * (d - k + 1) - k + 1)
        return chunked_sizes(small_total, r - 1) + [2 * r - 1] * k

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        params = _fill(params, k=1)
        sizes = self.sizes(params, instance)
        small = sum(1 for size in sizes if size <= params.r - 1)
        return _fill(params, N=sum(sizes) - 1, l=small)

    def split(self, params, instance):
        sizes = self.sizes(params, instance)
        small = [size for size in sizes if size <= params.r - 1]
        large = [size for size in sizes if size >= 2 * params.r - 1]
        return small, large

    def check_hypotheses(self, params, instance):
        r, d = params.r, params.d
        sizes = self.sizes(params, instance)
        _check_sizes(self, sizes, params.N)
        small, large = self.split(params, instance)
        if len(small) + len(large) != len(sizes):
            self.fail(f"every class must have <= {r - 1} or >= {2 * r - 1} points")
        if sizes != small + large:
            self.fail("small classes must come before large ones")
        k = len(large)
        if sum(small) <= (r - 1) * (d - k + 1) - k:
            self.fail(f"small classes must hold more than (r-1)(d-k+1)-k = {(r - 1) * (d - k + 1) - k} points")

    def backed(self, params, instance):
        return is_prime(params.r)

    def build_trial(self, params, instance, seed):
        small, large = self.split(params, instance)
        start = sum(small)
        large_classes = []
        for size in large:
            large_classes.append(list(range(start, start + size)))
            start += size
        # Large classes are split into singletons.
        config = _colored(params.N + 1, params.d, small + [1] * sum(large), seed)
        constraints = ConstraintSet(r=params.r, rainbow=True, subcomplex=rainbow_split(large_classes))
        return Trial(config, constraints)


class ColoredRadonClaim(TheoremClaim):
    hypotheses = "r = 2, N >= d+2; at most one of the vertices 0, 1, 2 per face"

    def resolve(self, instance):
        params = instance.params
        params.require("d")
        params = _fill(params, r=2)
        return _fill(params, N=params.d + 2)

    def check_hypotheses(self, params, instance):
        if params.r != 2:
            self.fail(f"holds for r = 2 only, got r={params.r}")
        if params.N < params.d + 2:
            self.fail(f"needs N >= d+2 = {params.d + 2}")

    def backed(self, params, instance):
        return True

    def build_trial(self, params, instance, seed):
        config = random_config(params.N + 1, params.d, seed=seed)
        sigma = AtMostSInS(s=1, vertices=frozenset(range(3)))
        return Trial(config, ConstraintSet(r=2, subcomplex=sigma))


class UnavoidableSubcomplexClaim(TheoremClaim):
    hypotheses = "N >= (r-1)(d+2); faces with at most s vertices among the first (s+1)r-1"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        return _fill(params, N=(params.r - 1) * (params.d + 2), s=1)

    def subcomplex(self, params) -> _Node:
        size = min(params.N + 1, (params.s + 1) * params.r - 1)
        return AtMostSInS(s=params.s, vertices=frozenset(range(size)))

    def check_hypotheses(self, params, instance):
        if params.N < (params.r - 1) * (params.d + 2):
            self.fail(f"needs N >= (r-1)(d+2) = {(params.r - 1) * (params.d + 2)}")
        if params.s < 1:
            self.fail("needs s >= 1")
        size = min(params.N + 1, (params.s + 1) * params.r - 1)
        covered = pigeonhole_predicate("generalized", {"r": params.r, "s": params.s, "size": size})
        _certified_unavoidable(self, self.subcomplex(params), params.N, params.r, fallback=covered)

    def build_trial(self, params, instance, seed):
        config = random_config(params.N + 1, params.d, seed=seed)
        return Trial(config, ConstraintSet(r=params.r, subcomplex=self.subcomplex(params)))


class MultipleUnavoidableClaim(TheoremClaim):
    hypotheses = "N >= N_c; c subcomplexes 'at most one vertex in S_i', |S_i| <= 2r-1"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        params = _fill(params, c=2)
        return _fill(params, N=bound_Nc(params.r, params.d, params.c))

    def pieces(self, params) -> List[_Node]:
        block = min(2 * params.r - 1, (params.N + 1) // params.c)
        return [
            AtMostSInS(s=1, vertices=frozenset(range(i * block, (i + 1) * block)))
            for i in range(params.c)
        ]

    def check_hypotheses(self, params, instance):
        if params.c < 1:
            self.fail("needs c >= 1")
        if params.N < bound_Nc(params.r, params.d, params.c):
            self.fail(f"needs N >= N_c = {bound_Nc(params.r, params.d, params.c)}")
        block = min(2 * params.r - 1, (params.N + 1) // params.c)
        covered = pigeonhole_predicate("ii", {"r": params.r, "size": block})
        for sigma in self.pieces(params):
            _certified_unavoidable(self, sigma, params.N, params.r, fallback=covered)

    def build_trial(self, params, instance, seed):
        config = random_config(params.N + 1, params.d, seed=seed)
        sigma = intersection_of(self.pieces(params))
        return Trial(config, ConstraintSet(r=params.r, subcomplex=sigma))


class ColoredDimBoundedClaim(TheoremClaim):
    hypotheses = "r prime; N >= (r-1)(d+2); k >= ceil((r-1)d/r); classes of size <= r-1"

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        return _fill(
            params,
            k=min_dimension_bound(params.r, params.d),
            N=(params.r - 1) * (params.d + 2),
        )

    def sizes(self, params, instance):
        return instance.class_sizes or chunked_sizes(params.N + 1, params.r - 1)

    def check_hypotheses(self, params, instance):
        if params.N < (params.r - 1) * (params.d + 2):
            self.fail(f"needs N >= (r-1)(d+2) = {(params.r - 1) * (params.d + 2)}")
        if params.k < min_dimension_bound(params.r, params.d):
            self.fail(f"needs k >= {min_dimension_bound(params.r, params.d)}")
        sizes = self.sizes(params, instance)
        _check_sizes(self, sizes, params.N)
        if max(sizes) > params.r - 1:
            self.fail(f"color classes must have at most r-1 = {params.r - 1} points")

    def backed(self, params, instance):
        return is_prime(params.r)

    def build_trial(self, params, instance, seed):
        config = _colored(params.N + 1, params.d, self.sizes(params, instance), seed)
        return Trial(config, ConstraintSet(r=params.r, rainbow=True, max_dims=params.k))


class PrescribableProbeClaim(TheoremClaim):
    hypotheses = "admissible dimensions; N >= d+2 (probe, no theorem)"

    def resolve(self, instance):
        params = instance.params
        params.require("d")
        params = _fill(params, r=len(instance.dims) if instance.dims else 2)
        return _fill(params, N=params.d + 2)

    def dims(self, params, instance) -> List[int]:
        if instance.dims is not None:
            return list(instance.dims)
        if params.r != 2:
            self.fail("dims are required for r > 2")
        return [ceil(params.d / 2), params.d // 2]

    def check_hypotheses(self, params, instance):
        dims = self.dims(params, instance)
        if len(dims) != params.r:
            self.fail(f"needs r = {params.r} dimensions, got {len(dims)}")
        if not admissible(dims, params.d):
            self.fail(f"dimensions {dims} are not admissible for d = {params.d}")
        if sum(dim + 1 for dim in dims) > params.N + 1:
            self.fail(f"dimensions {dims} need more than N+1 = {params.N + 1} vertices")

    def backed(self, params, instance):
        return False

    def build_trial(self, params, instance, seed):
        config = random_config(params.N + 1, params.d, seed=seed)
        return Trial(config, ConstraintSet(r=params.r, exact_dims=self.dims(params, instance)))


class DimBoundedNecessityClaim(TheoremClaim):
    """
    (r-1)(d+2) points, one fewer than the dimension-bounded theorem asks
    for, admit no partition into faces of dimension <= k when k < d.

    The certified adversary is ``sarkaria_config``. Points on the moment
    curve do not serve: for r=3, d=3, k=2 the ten points t = 1..10 split
    into the triangles {1,4,7}, {2,5,8}, {3,6,9}, which all contain
    (5, 83/3, 165). The ``moment`` adversary therefore stays experimental.
    """
    hypotheses = "k < d; (r-1)(d+2) points on the adversary"
    expectation = "exhausted"
    deterministic = True

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        params = _fill(params, k=min_dimension_bound(params.r, params.d))
        return _fill(params, N=sarkaria_size(params.r, 2, params.d) - 1)

    def check_hypotheses(self, params, instance):
        if params.k >= params.d:
            self.fail(f"needs k < d, got k={params.k}, d={params.d}")
        if params.N + 1 != sarkaria_size(params.r, 2, params.d):
            self.fail(f"needs N+1 = (r-1)(d+2) = {sarkaria_size(params.r, 2, params.d)}")

    def backed(self, params, instance):
        return instance.adversary != "moment"

    def build_trial(self, params, instance, seed):
        if instance.adversary == "moment":
            config = moment_curve_config(params.N + 1, params.d)
        else:
            config = sarkaria_config(params.r, 2, params.d)
        expected = count_bounded_families(params.N + 1, params.r, params.k + 1)
        return Trial(config, ConstraintSet(r=params.r, max_dims=params.k), expected_families=expected)


class GvkfNecessityClaim(TheoremClaim):
    hypotheses = "k < d; N+1 = floor((r-1)/(j-1))(d+2) points on the adversary"
    expectation = "exhausted"
    deterministic = True

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        params = _fill(params, j=params.r, k=min_dimension_bound(params.r, params.d))
        return _fill(params, N=sarkaria_size(params.r, params.j, params.d) - 1)

    def check_hypotheses(self, params, instance):
        if params.k >= params.d:
            self.fail(f"needs k < d, got k={params.k}, d={params.d}")
        size = sarkaria_size(params.r, params.j, params.d)
        if params.N + 1 != size:
            self.fail(f"needs N+1 = floor((r-1)/(j-1))(d+2) = {size}")

    def backed(self, params, instance):
        return True

    def build_trial(self, params, instance, seed):
        config = sarkaria_config(params.r, params.j, params.d)
        disjointness = "pairwise" if params.j == 2 else {"jwise": params.j}
        expected = None
        if params.j == 2:
            expected = count_bounded_families(params.N + 1, params.r, params.k + 1)
        constraints = ConstraintSet(r=params.r, disjointness=disjointness, max_dims=params.k)
        return Trial(config, constraints, expected_families=expected)


class TverbergTightnessClaim(TheoremClaim):
    """
    One point fewer than (r-1)(d+1)+1: points in general position have no
    Tverberg partition. Degenerate seeds are skipped.
    """
    hypotheses = "N = (r-1)(d+1)-1; general position"
    expectation = "exhausted"
    threshold = Fraction(95, 100)

    def resolve(self, instance):
        params = instance.params
        params.require("r", "d")
        return _fill(params, N=tverberg_number(params.r, params.d) - 1)

    def check_hypotheses(self, params, instance):
        if params.N != tverberg_number(params.r, params.d) - 1:
            self.fail(f"needs N = (r-1)(d+1)-1 = {tverberg_number(params.r, params.d) - 1}")

    def backed(self, params, instance):
        return True

    def build_trial(self, params, instance, seed):
        config = random_config(params.N + 1, params.d, seed=seed)
        skip = None if in_general_position(config) else "points not in general position"
        return Trial(
            config,
            ConstraintSet(r=params.r),
            expected_families=stirling2(params.N + 1, params.r),
            skip_reason=skip,
        )


def get_catalog() -> Dict[str, TheoremClaim]:
    """All catalog claims in listing order."""
    claims = [
        AffineTverbergClaim("topological_tverberg_affine", "Tverberg partitions of (r-1)(d+1)+1 points"),
        ConstraintLiftingClaim("key_lemma_1_affine", "Partitions equalizing c affine functions"),
        WeakColoredClaim("weak_colored", "Rainbow partitions, d+1 classes of size <= 2r-1"),
        TypeBColoredClaim("type_b_colored", "Rainbow partitions with few color classes"),
        DimBoundedClaim("dim_bounded", "Partitions into faces of dimension <= k"),
        GvkfSharpenedClaim("gvkf_sharpened", "j-wise disjoint faces of dimension <= k"),
        NonUniformClaim("non_uniform_dims", "Faces of dimension <= k, few of dimension k"),
        VkfSharpenedClaim("vkf_sharpened", "Two disjoint faces of dimensions ceil(d/2), floor(d/2)"),
        JWiseClaim("jwise", "j-wise disjoint Tverberg partitions", affine=False),
        JWiseClaim("jwise_affine", "j-wise disjoint Tverberg partitions of affine maps", affine=True),
        EqualBarycentricClaim("equal_barycentric", "Rainbow faces with equal barycentric coordinates"),
        OptimalColoredClaim("optimal_colored", "Rainbow partitions, classes of size <= r-1"),
        OptimalColoredSplitClaim("optimal_colored_split", "Rainbow partitions with small and large classes"),
        ColoredRadonClaim("colored_radon", "Radon partitions separating three given points"),
        UnavoidableSubcomplexClaim("unavoidable_subcomplex", "Partitions inside one unavoidable subcomplex"),
        MultipleUnavoidableClaim("multiple_unavoidable", "Partitions inside c unavoidable subcomplexes"),
        ColoredDimBoundedClaim("colored_dim_bounded", "Rainbow partitions into faces of dimension <= k"),
        PrescribableProbeClaim("prescribable_probe", "Partitions with exactly prescribed dimensions"),
        DimBoundedNecessityClaim("dim_bounded_necessity", "Too few points for the dimension bound"),
        GvkfNecessityClaim("gvkf_necessity", "Too few points for j-wise disjoint bounded faces"),
        TverbergTightnessClaim("tverberg_tightness", "Too few points for a Tverberg partition"),
    ]
    return {claim.theorem_id: claim for claim in claims}


CATALOG_IDS = (
    "topological_tverberg_affine",
    "key_lemma_1_affine",
    "weak_colored",
    "type_b_colored",
    "dim_bounded",
    "gvkf_sharpened",
    "non_uniform_dims",
    "vkf_sharpened",
    "jwise",
    "jwise_affine",
    "equal_barycentric",
    "optimal_colored",
    "optimal_colored_split",
    "colored_radon",
    "unavoidable_subcomplex",
    "multiple_unavoidable",
    "colored_dim_bounded",
    "prescribable_probe",
    "dim_bounded_necessity",
    "gvkf_necessity",
    "tverberg_tightness",
)


def get_claim(theorem_id: str) -> TheoremClaim:
    catalog = get_catalog()
    if theorem_id not in catalog:
        raise TverbergInputError(f"Unknown theorem id {theorem_id!r}")
    return catalog[theorem_id]
