"""
Exact verification of Tverberg witnesses.
Each clause of a constraint set is a check object returning a structured
result; nothing is trusted from the solver.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, List, Optional

from .model import Configuration, Witness, combination

if TYPE_CHECKING:
    from ..solver.constraints import ConstraintSet


@dataclass
class CheckResult:
    """Result of a single verification check."""
    check_name: str
    passed: bool
    message: str


@dataclass
class VerificationReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]


class WitnessCheck:
    """
    Base class for all checks.
    Checks that read the weight maps set reads_weights; they only run
    once the weights are known to be convex and supported on their faces.
    """
    reads_weights = False

    def __init__(self, name: str):
        self.name = name

    def run(self, config: Configuration, witness: Witness, constraints: "ConstraintSet") -> CheckResult:
        raise NotImplementedError

    def ok(self, message: str) -> CheckResult:
        return CheckResult(check_name=self.name, passed=True, message=message)

    def fail(self, message: str) -> CheckResult:
        return CheckResult(check_name=self.name, passed=False, message=message)


class FaceIndexCheck(WitnessCheck):
    """
    Faces are nonempty, in range, one per part, one weight map each.
    """
    def run(self, config, witness, constraints):
        if witness.r != constraints.r:
            return self.fail(f"Expected {constraints.r} faces, witness has {witness.r}")
        if len(witness.weights) != witness.r:
            return self.fail("One weight map is required per face")
        for face in witness.faces:
            if not face or face[0] < 0 or face[-1] >= config.n_points:
                return self.fail(f"Face {list(face)} is not a face of the {config.n_points}-point simplex")
        if len(witness.point) != config.dim:
            return self.fail(f"Point has {len(witness.point)} coordinates, expected {config.dim}")
        return self.ok(f"{witness.r} faces on {config.n_points} points")


class ConvexWeightCheck(WitnessCheck):
    """
    Weights are nonnegative, supported on their face and sum to one.
    """
    def run(self, config, witness, constraints):
        for face, weights in zip(witness.faces, witness.weights):
            outside = [v for v, w in weights.items() if w != 0 and v not in face]
            if outside:
                return self.fail(f"Face {list(face)} puts weight on vertices {outside}")
            negative = [v for v, w in weights.items() if w < 0]
            if negative:
                return self.fail(f"Face {list(face)} has negative weights at {negative}")
            total = sum(weights.values(), Fraction(0))
            if total != 1:
                return self.fail(f"Weights of face {list(face)} sum to {total}")
        return self.ok("Every face carries a convex combination")


class CommonPointCheck(WitnessCheck):
    reads_weights = True

    def run(self, config, witness, constraints):
        for face, weights in zip(witness.faces, witness.weights):
            image = combination(config, weights)
            if image != tuple(witness.point):
                return self.fail(f"Face {list(face)} combines to {_show(image)}, not {_show(witness.point)}")
        return self.ok(f"All faces meet at {_show(witness.point)}")


class DisjointnessCheck(WitnessCheck):
    """
    Every vertex lies in at most j-1 faces (pairwise: at most one).
    """
    def run(self, config, witness, constraints):
        limit = constraints.j - 1
        usage: Dict[int, int] = {}
        for face in witness.faces:
            for vertex in face:
                usage[vertex] = usage.get(vertex, 0) + 1
        crowded = sorted(v for v, count in usage.items() if count > limit)
        mode = "pairwise" if constraints.j == 2 else f"{constraints.j}-wise"
        if crowded:
            return self.fail(f"Vertices {crowded} lie in more than {limit} faces ({mode})")
        return self.ok(f"Faces are {mode} disjoint")


class SubcomplexCheck(WitnessCheck):
    def run(self, config, witness, constraints):
        sigma = constraints.subcomplex
        try:
            outside = [list(f) for f in witness.faces if not sigma.contains(f, config.color_of)]
        except ValueError as e:
            return self.fail(str(e))
        if outside:
            return self.fail(f"Faces {outside} are not in {sigma.to_dsl()}")
        return self.ok(f"All faces lie in {sigma.to_dsl()}")


class RainbowCheck(WitnessCheck):
    def run(self, config, witness, constraints):
        if config.color_of is None:
            return self.fail("Configuration has no coloring")
        for face in witness.faces:
            colors = [config.color_of[v] for v in face]
            if len(set(colors)) != len(colors):
                return self.fail(f"Face {list(face)} repeats a color class")
        return self.ok("Every face has at most one vertex per class")


class DimensionBoundCheck(WitnessCheck):
    """
    Face dimensions fit under the bounds, matched as multisets.
    """
    def run(self, config, witness, constraints):
        if isinstance(constraints.max_dims, int):
            bounds = [constraints.max_dims] * constraints.r
        else:
            bounds = sorted(constraints.max_dims, reverse=True)
        dims = sorted(witness.dimensions, reverse=True)
        if all(d <= b for d, b in zip(dims, bounds)):
            return self.ok(f"Dimensions {list(witness.dimensions)} within {constraints.max_dims}")
        return self.fail(f"Dimensions {list(witness.dimensions)} exceed {constraints.max_dims}")


class ExactDimensionCheck(WitnessCheck):
    def run(self, config, witness, constraints):
        if sorted(witness.dimensions) == sorted(constraints.exact_dims):
            return self.ok(f"Dimensions are exactly {list(witness.dimensions)}")
        return self.fail(
            f"Dimensions {list(witness.dimensions)} differ from prescribed {constraints.exact_dims}"
        )


class EqualBarycentricCheck(WitnessCheck):
    """
    Rainbow faces with exactly one vertex per class and equal class weights.
    """
    def run(self, config, witness, constraints):
        if config.colors is None:
            return self.fail("Configuration has no coloring")
        coordinates = equal_coordinates_by_class(config, witness)
        if coordinates is None:
            return self.fail("Faces do not hold points with equal barycentric coordinates")
        return self.ok(f"Common barycentric coordinates {_show(coordinates)}")


class AffineConstraintCheck(WitnessCheck):
    """
    Every constraint function takes the same value at the r points.
    """
    reads_weights = True

    def run(self, config, witness, constraints):
        for index, row in enumerate(constraints.affine_constraints):
            if len(row) != config.n_points:
                return self.fail(f"Constraint {index} has {len(row)} values for {config.n_points} points")
            values = {
                sum((w * row[v] for v, w in weights.items() if w != 0), Fraction(0))
                for weights in witness.weights
            }
            if len(values) != 1:
                return self.fail(f"Constraint {index} takes values {_show(sorted(values))}")
        return self.ok(f"{len(constraints.affine_constraints)} constraint functions agree")


def equal_coordinates_by_class(config: Configuration, witness: Witness) -> Optional[List[Fraction]]:
    """
    The common barycentric coordinates, one per class, or None when some
    face misses a class, has two vertices of one class, or the class
    weights differ between faces.
    """
    coordinates: Optional[List[Fraction]] = None
    color_of = config.color_of
    for face, weights in zip(witness.faces, witness.weights):
        per_class: Dict[int, Fraction] = {}
        for vertex in face:
            class_index = color_of[vertex]
            if class_index in per_class:
                return None
            per_class[class_index] = weights.get(vertex, Fraction(0))
        if len(per_class) != len(config.colors):
            return None
        row = [per_class[c] for c in range(len(config.colors))]
        if coordinates is None:
            coordinates = row
        elif row != coordinates:
            return None
    return coordinates


def _show(values) -> str:
    return "(" + ", ".join(str(Fraction(v)) for v in values) + ")"


def get_checks(constraints: "ConstraintSet") -> List[WitnessCheck]:
    """The checks that apply to a constraint set, structural ones first."""
    checks: List[WitnessCheck] = [
        FaceIndexCheck("face_indices"),
        ConvexWeightCheck("convex_weights"),
        CommonPointCheck("common_point"),
        DisjointnessCheck("disjointness"),
    ]
    if constraints.subcomplex is not None:
        checks.append(SubcomplexCheck("subcomplex_membership"))
    if constraints.rainbow:
        checks.append(RainbowCheck("rainbow"))
    if constraints.max_dims is not None:
        checks.append(DimensionBoundCheck("dimension_bounds"))
    if constraints.exact_dims is not None:
        checks.append(ExactDimensionCheck("exact_dimensions"))
    if constraints.equal_barycentric:
        checks.append(EqualBarycentricCheck("equal_barycentric"))
    if constraints.affine_constraints:
        checks.append(AffineConstraintCheck("affine_constraints"))
    return checks


def verify_witness(
    config: Configuration,
    witness: Witness,
    constraints: "ConstraintSet",
) -> VerificationReport:
    """
    Run every applicable check. Failures are reported, never raised. When
    the faces are malformed the remaining checks are skipped; when the
    weights are not convex the checks that read them are skipped.
    """
    checks = get_checks(constraints)
    report = VerificationReport()
    structural = checks[0].run(config, witness, constraints)
    report.checks.append(structural)
    if not structural.passed:
        for check in checks[1:]:
            report.checks.append(check.fail("Skipped: malformed faces"))
        return report
    convexity = checks[1].run(config, witness, constraints)
    report.checks.append(convexity)
    for check in checks[2:]:
        if check.reads_weights and not convexity.passed:
            report.checks.append(check.fail("Skipped: invalid weights"))
        else:
            report.checks.append(check.run(config, witness, constraints))
    return report
