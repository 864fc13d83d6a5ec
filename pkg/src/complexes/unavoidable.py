"""
Tverberg unavoidability, decided combinatorially.

A subcomplex is unavoidable for (N, r) when every family of r pairwise
disjoint nonempty faces of the simplex on 0..N has a face inside it. This
holds for every map at once, which is exactly what the pigeonhole
arguments give. Cover-partition mode only quantifies over partitions of
all N+1 vertices into r blocks.
"""
import logging
from typing import Dict, List, Literal, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ..config import settings
from ..core.errors import EnumerationCapError, TverbergInputError
from ..core.model import Face
from ..metrics import MetricsCollector
from ..solver.enumeration import set_partitions
from .subcomplex import AtMostSInS, Induced, Skeleton, _Node, non_uniform_complex

logger = logging.getLogger("tverberg.unavoidable")

UnavoidabilityMode = Literal["pairwise", "cover-partition"]
PIGEONHOLE_EXAMPLES = ("i", "ii", "iii", "iv", "generalized")


class UnavoidabilityResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    unavoidable: bool
    mode: UnavoidabilityMode
    N: int
    r: int
    counterexample: Optional[Tuple[Tuple[int, ...], ...]] = None
    families_checked: int = 0


def _faces_by_mask(n_vertices: int) -> List[Face]:
    return [
        tuple(v for v in range(n_vertices) if mask >> v & 1)
        for mask in range(1 << n_vertices)
    ]


def minimal_nonfaces(
    sigma: _Node,
    N: int,
    color_of: Optional[Sequence[int]] = None,
) -> List[Face]:
    """
    Inclusion-minimal faces of the simplex on 0..N that are not in sigma,
    sorted by (smallest vertex, size, vertices).
    """
    n_vertices = N + 1
    faces = _faces_by_mask(n_vertices)
    member = [True] * (1 << n_vertices)
    for mask in range(1, 1 << n_vertices):
        member[mask] = sigma.contains(faces[mask], color_of)

    result = []
    for mask in range(1, 1 << n_vertices):
        if member[mask]:
            continue
        # Minimal iff every facet (mask minus one bit) is a face or empty.
        if all(member[mask & ~(1 << v)] for v in faces[mask]):
            result.append(faces[mask])
    result.sort(key=lambda face: (face[0], len(face), face))
    return result


def _first_disjoint_family(candidates: List[Face], r: int) -> Tuple[Optional[Tuple[Face, ...]], int]:
    """Depth-first search for r disjoint candidates with increasing minimal vertex."""
    checked = 0
    chosen: List[Face] = []

    def extend(start: int, used: int) -> Optional[Tuple[Face, ...]]:
        nonlocal checked
        if len(chosen) == r:
            return tuple(chosen)
        previous_min = chosen[-1][0] if chosen else -1
        for index in range(start, len(candidates)):
            face = candidates[index]
            if face[0] <= previous_min:
                continue
            mask = sum(1 << v for v in face)
            if mask & used:
                continue
            chosen.append(face)
            checked += 1
            found = extend(index + 1, used | mask)
            if found is not None:
                return found
            chosen.pop()
        return None

    family = extend(0, 0)
    return family, checked


def is_unavoidable(
    sigma: _Node,
    N: int,
    r: int,
    mode: UnavoidabilityMode = "pairwise",
    color_of: Optional[Sequence[int]] = None,
    cap: Optional[int] = None,
) -> UnavoidabilityResult:
    """
    Decide unavoidability by exhaustive enumeration.

    Raises:
        TverbergInputError: r < 2 or N < r - 1
        EnumerationCapError: N above the configured cap
    """
    if r < 2:
        raise TverbergInputError(f"r must be at least 2, got {r}")
    if N < r - 1:
        raise TverbergInputError(f"N must be at least r-1 = {r - 1}, got {N}")
    cap = settings.unavoidable_cap if cap is None else cap
    if N > cap:
        raise EnumerationCapError(f"N = {N} exceeds the unavoidability cap {cap}", cap)

    if mode == "pairwise":
        candidates = minimal_nonfaces(sigma, N, color_of)
        family, checked = _first_disjoint_family(candidates, r)
    elif mode == "cover-partition":
        family = None
        checked = 0
        for partition in set_partitions(N + 1, r):
            checked += 1
            if not any(sigma.contains(block, color_of) for block in partition):
                family = partition
                break
    else:
        raise TverbergInputError(f"Unknown unavoidability mode {mode!r}")

    result = UnavoidabilityResult(
        unavoidable=family is None,
        mode=mode,
        N=N,
        r=r,
        counterexample=family,
        families_checked=checked,
    )
    MetricsCollector.record_unavoidability(mode, result.unavoidable)
    logger.info(
        "Unavoidability decided",
        extra={"complex": sigma.to_dsl(), "N": N, "r": r, "mode": mode,
               "unavoidable": result.unavoidable},
    )
    return result


def _require(params: Mapping[str, int], *names: str) -> Dict[str, int]:
    missing = [name for name in names if name not in params]
    if missing:
        raise TverbergInputError(f"Missing parameters: {', '.join(missing)}")
    return {name: int(params[name]) for name in names}


def pigeonhole_predicate(example_id: str, params: Mapping[str, int]) -> bool:
    """
    Numeric hypothesis of the pigeonhole examples.

      i            induced simplex on m vertices: m >= N - r + 2
      ii           at most one vertex in S: size <= 2r - 1
      iii          k-skeleton: r(k+2) > N + 1
      iv           (k-1)-skeleton plus k-faces off the last r-s vertices:
                   r(k+1) + s > N + 1, k >= 0, 0 <= s <= r
      generalized  at most s vertices in S: size <= (s+1)r - 1
    """
    if example_id == "i":
        p = _require(params, "N", "r", "m")
        return p["m"] >= p["N"] - p["r"] + 2
    if example_id == "ii":
        p = _require(params, "r", "size")
        return p["size"] <= 2 * p["r"] - 1
    if example_id == "iii":
        p = _require(params, "N", "r", "k")
        return p["r"] * (p["k"] + 2) > p["N"] + 1
    if example_id == "iv":
        p = _require(params, "N", "r", "k", "s")
        if p["k"] < 0 or not 0 <= p["s"] <= p["r"]:
            return False
        return p["r"] * (p["k"] + 1) + p["s"] > p["N"] + 1
    if example_id == "generalized":
        p = _require(params, "r", "s", "size")
        if p["s"] < 0:
            return False
        return p["size"] <= (p["s"] + 1) * p["r"] - 1
    raise TverbergInputError(f"Unknown pigeonhole example {example_id!r}")


def pigeonhole_complex(example_id: str, params: Mapping[str, int]) -> _Node:
    """The subcomplex each pigeonhole example talks about, on vertices 0..N."""
    if example_id == "i":
        p = _require(params, "m")
        return Induced(vertices=frozenset(range(p["m"])))
    if example_id == "ii":
        p = _require(params, "size")
        return AtMostSInS(s=1, vertices=frozenset(range(p["size"])))
    if example_id == "iii":
        p = _require(params, "k")
        return Skeleton(k=p["k"])
    if example_id == "iv":
        p = _require(params, "N", "r", "k", "s")
        return non_uniform_complex(p["N"], p["r"], p["k"], p["s"])
    if example_id == "generalized":
        p = _require(params, "s", "size")
        return AtMostSInS(s=p["s"], vertices=frozenset(range(p["size"])))
    raise TverbergInputError(f"Unknown pigeonhole example {example_id!r}")
