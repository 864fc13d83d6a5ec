"""
Exact phase-1 simplex for linear feasibility problems.

Solves ``A x = b, x >= 0`` over the rationals. The tableau starts from an
artificial basis and minimizes the sum of artificials with Bland's rule,
so the pivot sequence (and therefore the returned basic solution) is a
pure function of the input and the method always terminates.

Artificial columns are not stored: once an artificial leaves the basis it
never re-enters, so only its basis slot is tracked. Pivots touch the
nonzero entries of the pivot row only.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

ZERO = Fraction(0)


@dataclass
class FeasibilityResult:
    feasible: bool
    solution: Optional[List[Fraction]]
    pivots: int


def find_feasible_point(
    A: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
) -> FeasibilityResult:
    """
    Return a basic feasible solution of ``A x = b, x >= 0`` or report
    infeasibility.

    Args:
        A: m rows of n exact coefficients
        b: m exact right-hand sides

    Returns:
        FeasibilityResult with ``solution`` of length n when feasible
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return FeasibilityResult(True, [ZERO] * n, 0)

    # Rows with negative right-hand side are negated so artificials start at b >= 0.
    rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for row, value in zip(A, b):
        row = [Fraction(a) for a in row]
        value = Fraction(value)
        if value < 0:
            row = [-a for a in row]
            value = -value
        rows.append(row)
        rhs.append(value)

    # Basis entries >= n name the artificial of that row.
    basis = list(range(n, n + m))
    # Reduced costs of the phase-1 objective (sum of artificials).
    cost = [-sum((rows[i][j] for i in range(m)), ZERO) for j in range(n)]
    pivots = 0

    while True:
        entering = next((j for j in range(n) if cost[j] < 0), None)
        if entering is None:
            break

        leaving = None
        best_ratio = None
        for i in range(m):
            coefficient = rows[i][entering]
            if coefficient <= 0:
                continue
            ratio = rhs[i] / coefficient
            if (
                best_ratio is None
                or ratio < best_ratio
                or (ratio == best_ratio and basis[i] < basis[leaving])
            ):
                best_ratio = ratio
                leaving = i
        if leaving is None:
            # Phase-1 objective is bounded below by zero; unreachable.
            break

        _pivot(rows, rhs, cost, leaving, entering)
        basis[leaving] = entering
        pivots += 1

    residual = sum((rhs[i] for i in range(m) if basis[i] >= n), ZERO)
    if residual != 0:
        return FeasibilityResult(False, None, pivots)

    solution = [ZERO] * n
    for i, variable in enumerate(basis):
        if variable < n:
            solution[variable] = rhs[i]
    return FeasibilityResult(True, solution, pivots)


def _pivot(
    rows: List[List[Fraction]],
    rhs: List[Fraction],
    cost: List[Fraction],
    pivot_row: int,
    pivot_col: int,
) -> None:
    row = rows[pivot_row]
    pivot = row[pivot_col]
    support = [j for j, value in enumerate(row) if value]
    for j in support:
        row[j] = row[j] / pivot
    rhs[pivot_row] = rhs[pivot_row] / pivot

    for i in range(len(rows)):
        if i == pivot_row:
            continue
        factor = rows[i][pivot_col]
        if not factor:
            continue
        target = rows[i]
        for j in support:
            target[j] -= factor * row[j]
        rhs[i] -= factor * rhs[pivot_row]

    factor = cost[pivot_col]
    if factor:
        for j in support:
            cost[j] -= factor * row[j]
