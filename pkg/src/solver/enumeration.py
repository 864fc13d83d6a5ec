"""
Canonical enumeration of candidate face families.

Two search spaces:
  * set partitions of {0..n-1} into exactly r blocks, as restricted-growth
    strings (position 0 is block 0, and a new block index is always one more
    than the largest so far), so every partition appears once;
  * families of r pairwise disjoint nonempty faces, not necessarily covering,
    ordered by minimal vertex, with face sizes bounded.
Both orders are fixed, which makes "first witness" well defined.
"""
from itertools import combinations
from math import comb, factorial
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from ..core.model import Face

Family = Tuple[Face, ...]
FaceTest = Callable[[Face], bool]


def restricted_growth_strings(
    n: int,
    r: int,
    prefix: Sequence[int] = (),
) -> Iterator[Tuple[int, ...]]:
    """
    Yield, in lexicographic order, the restricted-growth strings of length n
    that use exactly r block labels and start with ``prefix``.
    """
    if n == 0 or r <= 0 or r > n:
        return
    current = list(prefix)
    if not current:
        current = [0]
    top = max(current)
    if current[0] != 0 or top >= r:
        return
    for i in range(1, len(current)):
        if current[i] > max(current[:i]) + 1:
            return

    def extend(position: int, top: int) -> Iterator[Tuple[int, ...]]:
        remaining = n - position
        if remaining == 0:
            if top == r - 1:
                yield tuple(current)
            return
        # Enough positions must remain to open the missing blocks.
        if top + 1 + remaining < r:
            return
        for label in range(min(top + 1, r - 1) + 1):
            current.append(label)
            yield from extend(position + 1, max(top, label))
            current.pop()

    yield from extend(len(current), top)


def rgs_prefixes(n: int, r: int, length: int) -> List[Tuple[int, ...]]:
    """All restricted-growth prefixes of the given length that can still complete."""
    length = max(1, min(length, n))
    result = []

    def extend(current: List[int], top: int):
        if len(current) == length:
            if top + 1 + (n - length) >= r:
                result.append(tuple(current))
            return
        for label in range(min(top + 1, r - 1) + 1):
            current.append(label)
            extend(current, max(top, label))
            current.pop()

    extend([0], 0)
    return result


def rgs_to_blocks(rgs: Sequence[int], r: int) -> Family:
    blocks: List[List[int]] = [[] for _ in range(r)]
    for vertex, label in enumerate(rgs):
        blocks[label].append(vertex)
    return tuple(tuple(block) for block in blocks)


def set_partitions(n: int, r: int) -> Iterator[Family]:
    for rgs in restricted_growth_strings(n, r):
        yield rgs_to_blocks(rgs, r)


def candidate_faces(
    minimum: int,
    available: Sequence[int],
    max_size: int,
    allows: Optional[FaceTest] = None,
) -> Iterator[Face]:
    """
    Faces with smallest vertex ``minimum`` and other vertices from
    ``available`` (all larger than minimum), largest faces first, then
    lexicographic.
    """
    for extra in range(min(max_size - 1, len(available)), -1, -1):
        for rest in combinations(available, extra):
            face = (minimum,) + rest
            if allows is None or allows(face):
                yield face


def first_faces(
    n: int,
    r: int,
    max_size: int,
    allows: Optional[FaceTest] = None,
) -> List[Face]:
    """Every face that can open a canonical family, in enumeration order."""
    faces = []
    for minimum in range(n - r + 1):
        available = list(range(minimum + 1, n))
        for face in candidate_faces(minimum, available, max_size, allows):
            if n - minimum - len(face) >= r - 1:
                faces.append(face)
    return faces


def disjoint_families(
    n: int,
    r: int,
    max_size: int,
    allows: Optional[FaceTest] = None,
    first: Optional[Face] = None,
) -> Iterator[Family]:
    """
    Families of r pairwise disjoint nonempty faces of {0..n-1} in canonical
    order (faces sorted by minimal vertex), each face of size <= max_size
    and accepted by ``allows``. With ``first`` only the families opening
    with that face are produced.
    """
    if r <= 0 or n < r:
        return
    used = [False] * n
    family: List[Face] = []

    def place(face: Face):
        for v in face:
            used[v] = True
        family.append(face)

    def remove(face: Face):
        for v in face:
            used[v] = False
        family.pop()

    def extend(previous_min: int) -> Iterator[Family]:
        still_needed = r - len(family)
        if still_needed == 0:
            yield tuple(family)
            return
        for minimum in range(previous_min + 1, n):
            if used[minimum]:
                continue
            free_after = [v for v in range(minimum + 1, n) if not used[v]]
            # Each remaining face needs its own unused minimal vertex.
            if len(free_after) + 1 < still_needed:
                break
            for face in candidate_faces(minimum, free_after, max_size, allows):
                if len(free_after) - (len(face) - 1) < still_needed - 1:
                    continue
                place(face)
                yield from extend(minimum)
                remove(face)

    if first is None:
        yield from extend(-1)
        return
    if allows is not None and not allows(first):
        return
    place(first)
    yield from extend(first[0])
    remove(first)


def is_maximal(
    family: Family,
    n: int,
    can_grow: Callable[[Family, int, int], bool],
) -> bool:
    """True when no face can absorb an unused vertex under ``can_grow``."""
    used = set()
    for face in family:
        used.update(face)
    for vertex in range(n):
        if vertex in used:
            continue
        for index in range(len(family)):
            if can_grow(family, index, vertex):
                return False
    return True


def stirling2(n: int, r: int) -> int:
    """Number of partitions of an n-set into r nonempty blocks."""
    if r < 0 or r > n:
        return 0
    if n == 0:
        return 1 if r == 0 else 0
    total = sum((-1) ** i * comb(r, i) * (r - i) ** n for i in range(r + 1))
    return total // factorial(r)


def count_bounded_families(n: int, r: int, max_size: int) -> int:
    """
    Number of unordered families of r pairwise disjoint nonempty subsets of
    an n-set with all sizes <= max_size (ordered count divided by r!).
    """
    if r <= 0 or n < r:
        return 0
    max_size = max(0, min(max_size, n))
    ordered = 0

    def walk(depth: int, used: int, weight: int):
        nonlocal ordered
        if depth == r:
            ordered += weight
            return
        for size in range(1, max_size + 1):
            if used + size > n:
                break
            walk(depth + 1, used + size, weight * comb(n - used, size))

    walk(0, 0, 1)
    return ordered // factorial(r)
