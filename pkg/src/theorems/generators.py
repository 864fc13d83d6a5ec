"""
Configuration generators for theorem trials: seeded random integer points,
points on the moment curve, and the projection example that puts a few
points on each vertex and on the barycenter of a d-simplex.
"""
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from ..config import settings
from ..core.errors import TverbergInputError
from ..core.geometry import affinely_independent
from ..core.model import Configuration

RANDOM_GENERATOR = "numpy.random.default_rng/PCG64"


def moment_curve_config(count: int, d: int) -> Configuration:
    """Points (t, t^2, ..., t^d) for t = 1..count."""
    if count < 1 or d < 1:
        raise TverbergInputError(f"moment curve needs count >= 1 and d >= 1, got {count}, {d}")
    points = tuple(
        tuple(Fraction(t ** e) for e in range(1, d + 1))
        for t in range(1, count + 1)
    )
    return Configuration(
        dim=d,
        points=points,
        provenance={"generator": "moment", "count": count, "d": d},
    )


def sarkaria_config(r: int, j: int, d: int) -> Configuration:
    """
    floor((r-1)/(j-1)) copies of each vertex of the standard d-simplex
    (origin and unit vectors) and of its barycenter, copy-major.
    """
    if r < 2 or d < 1 or not 2 <= j <= r:
        raise TverbergInputError(f"sarkaria needs r >= 2, 2 <= j <= r, d >= 1; got r={r}, j={j}, d={d}")
    copies = (r - 1) // (j - 1)
    base = [tuple(Fraction(0) for _ in range(d))]
    for axis in range(d):
        base.append(tuple(Fraction(1 if i == axis else 0) for i in range(d)))
    base.append(tuple(Fraction(1, d + 1) for _ in range(d)))
    points = tuple(p for _ in range(copies) for p in base)
    return Configuration(
        dim=d,
        points=points,
        provenance={"generator": "sarkaria", "r": r, "j": j, "d": d, "copies": copies},
    )


def random_config(
    count: int,
    d: int,
    coord_range: Optional[int] = None,
    seed: Optional[int] = None,
) -> Configuration:
    """
    Integer coordinates drawn uniformly from [-coord_range, coord_range]
    by a seeded numpy generator; the generator and seed are recorded.
    """
    if count < 1 or d < 1:
        raise TverbergInputError(f"random configuration needs count >= 1 and d >= 1, got {count}, {d}")
    coord_range = settings.coord_range if coord_range is None else coord_range
    seed = settings.default_seed if seed is None else seed
    rng = np.random.default_rng(seed)
    values = rng.integers(-coord_range, coord_range, size=(count, d), endpoint=True)
    points = tuple(tuple(Fraction(int(v)) for v in row) for row in values.tolist())
    return Configuration(
        dim=d,
        points=points,
        provenance={
            "generator": RANDOM_GENERATOR,
            "seed": seed,
            "coord_range": coord_range,
            "count": count,
            "d": d,
        },
    )


def split_coordinates(config: Configuration, d: int) -> tuple:
    """
    Keep the first d coordinates as the configuration and return the rest
    as per-vertex constraint rows.
    """
    rows = [
        [point[axis] for point in config.points]
        for axis in range(d, config.dim)
    ]
    head = Configuration(
        dim=d,
        points=tuple(point[:d] for point in config.points),
        labels=config.labels,
        colors=config.colors,
        provenance=config.provenance,
    )
    return head, rows


def with_class_sizes(config: Configuration, sizes: Sequence[int]) -> Configuration:
    """Color consecutive vertices: the first sizes[0] form class 0, and so on."""
    if sum(sizes) != config.n_points or any(size < 1 for size in sizes):
        raise TverbergInputError(
            f"Class sizes {list(sizes)} do not partition {config.n_points} points"
        )
    classes = []
    start = 0
    for size in sizes:
        classes.append(tuple(range(start, start + size)))
        start += size
    # Rebuilt rather than copied: color_of is cached on the instance.
    return Configuration(
        dim=config.dim,
        points=config.points,
        labels=config.labels,
        colors=tuple(classes),
        provenance=config.provenance,
    )


def balanced_sizes(total: int, classes: int) -> list:
    """Split total into the given number of parts, larger parts first."""
    base, extra = divmod(total, classes)
    return [base + 1 if i < extra else base for i in range(classes)]


def chunked_sizes(total: int, chunk: int) -> list:
    """Parts of size chunk, the last one possibly smaller."""
    sizes = [chunk] * (total // chunk)
    if total % chunk:
        sizes.append(total % chunk)
    return sizes


def in_general_position(config: Configuration) -> bool:
    """Every set of at most d+1 points is affinely independent."""
    size = min(config.n_points, config.dim + 1)
    return all(
        affinely_independent(subset)
        for subset in combinations(config.points, size)
    )
