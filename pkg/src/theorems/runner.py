"""
Runs catalog claims: builds every seeded trial, searches it, re-verifies
witnesses and folds the results into a Report with a verdict.

Trials are independent. With jobs > 1 they run in worker processes (each
search then runs serially) and are reduced in trial order, so the report
does not depend on the worker count.
"""
import logging
from contextlib import closing
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict

from ..config import settings
from ..core.errors import SolverInvariantError, TheoremViolationError
from ..core.model import Configuration
from ..core.rational import Rational
from ..core.validation import verify_witness
from ..logging_config import get_run_id, set_run_id
from ..metrics import MetricsCollector
from ..solver.constraints import ConstraintSet
from ..solver.parallel import ordered_map
from ..solver.search import find_tverberg
from .bounds import BoundSet
from .catalog import TheoremInstance, get_claim

logger = logging.getLogger("tverberg.theorems")

Verdict = Literal["confirmed", "violated", "inconclusive", "experimental"]
TrialStatus = Literal["witness_found", "exhausted_no_witness", "aborted_cap", "skipped", "solver_error"]


class TrialRecord(BaseModel):
    """Outcome of one seeded trial."""
    model_config = ConfigDict(frozen=True)

    index: int
    seed: int
    status: TrialStatus
    passed: bool
    faces: Optional[List[List[int]]] = None
    dimensions: Optional[List[int]] = None
    point: Optional[List[Rational]] = None
    verified: Optional[bool] = None
    families_enumerated: int = 0
    lp_calls: int = 0
    expected_families: Optional[int] = None
    elapsed_seconds: Optional[float] = None
    note: Optional[str] = None


class Aggregate(BaseModel):
    trials: int
    decided: int
    successes: int
    failures: int
    inconclusive: int
    skipped: int


class CounterexamplePayload(BaseModel):
    """The adversarial configuration an exhaustive refutation ran on."""
    configuration: Configuration
    constraints: ConstraintSet
    families_enumerated: int
    expected_families: Optional[int] = None


class Report(BaseModel):
    instance: TheoremInstance
    resolved_params: BoundSet
    label: str
    hypotheses: str
    expectation: Literal["witness", "exhausted"]
    backing: Literal["theorem-backed", "experimental"]
    verdict: Verdict
    aggregate: Aggregate
    trials: List[TrialRecord]
    counterexample: Optional[CounterexamplePayload] = None
    provenance: Dict[str, Any]


@dataclass(frozen=True)
class _TrialTask:
    instance: TheoremInstance
    params: BoundSet
    index: int
    jobs: int
    cap: int


@dataclass(frozen=True)
class _TrialResult:
    record: TrialRecord
    counterexample: Optional[CounterexamplePayload]
    provenance: Optional[Dict[str, Any]]


def _faces(faces: Any) -> List[List[int]]:
    return [list(face) for face in faces]


def _run_trial(task: _TrialTask) -> _TrialResult:
    claim = get_claim(task.instance.theorem_id)
    seed = task.instance.seed + task.index
    trial = claim.build_trial(task.params, task.instance, seed)
    provenance = trial.config.provenance
    if trial.skip_reason is not None:
        record = TrialRecord(index=task.index, seed=seed, status="skipped", passed=False, note=trial.skip_reason)
        return _TrialResult(record, None, provenance)

    try:
        outcome = find_tverberg(trial.config, trial.constraints, jobs=task.jobs, cap=task.cap)
    except SolverInvariantError as e:
        logger.error("Solver invariant broken", extra={"trial": task.index, "error": str(e)})
        record = TrialRecord(index=task.index, seed=seed, status="solver_error", passed=False, note=str(e))
        return _TrialResult(record, None, provenance)

    statistics = outcome.statistics
    fields: Dict[str, Any] = dict(
        index=task.index,
        seed=seed,
        status=outcome.status,
        families_enumerated=statistics.families_enumerated,
        lp_calls=statistics.lp_calls,
        elapsed_seconds=statistics.elapsed_seconds,
    )
    counterexample = None

    if outcome.found:
        witness = outcome.witness
        report = verify_witness(trial.config, witness, trial.constraints)
        note = None
        if not report.passed:
            note = "verification failed: " + ", ".join(c.check_name for c in report.failures)
        else:
            note = claim.assess(task.params, outcome)
        fields.update(
            faces=_faces(witness.faces),
            dimensions=list(witness.dimensions),
            point=list(witness.point),
            verified=report.passed,
            passed=claim.expectation == "witness" and note is None,
            note=note,
        )
    elif outcome.status == "exhausted_no_witness":
        passed = claim.expectation == "exhausted"
        note = None
        if passed and trial.expected_families is not None:
            fields["expected_families"] = trial.expected_families
            if statistics.families_enumerated != trial.expected_families:
                passed = False
                note = (
                    f"enumerated {statistics.families_enumerated} families, "
                    f"closed form gives {trial.expected_families}"
                )
        if passed and claim.deterministic:
            counterexample = CounterexamplePayload(
                configuration=trial.config,
                constraints=trial.constraints,
                families_enumerated=statistics.families_enumerated,
                expected_families=trial.expected_families,
            )
        fields.update(passed=passed, note=note)
    else:
        fields.update(passed=False, note="enumeration cap reached")

    return _TrialResult(TrialRecord(**fields), counterexample, provenance)


def _aggregate(records: List[TrialRecord]) -> Aggregate:
    skipped = sum(1 for r in records if r.status == "skipped")
    inconclusive = sum(1 for r in records if r.status == "aborted_cap")
    decided = len(records) - skipped - inconclusive
    successes = sum(1 for r in records if r.passed)
    return Aggregate(
        trials=len(records),
        decided=decided,
        successes=successes,
        failures=decided - successes,
        inconclusive=inconclusive,
        skipped=skipped,
    )


def _verdict(aggregate: Aggregate, threshold: Fraction, backed: bool) -> Verdict:
    if not backed:
        return "experimental"
    if aggregate.decided == 0:
        return "inconclusive"
    if Fraction(aggregate.successes, aggregate.decided) < threshold:
        return "violated"
    if aggregate.inconclusive:
        return "inconclusive"
    return "confirmed"


def run_instance(
    instance: TheoremInstance,
    jobs: Optional[int] = None,
    cap: Optional[int] = None,
    strict: bool = False,
) -> Report:
    """
    Run every trial of a catalog claim.

    Raises:
        TverbergInputError: parameters outside the claim's hypotheses
        TheoremViolationError: strict mode and a theorem-backed claim failed
    """
    jobs = settings.jobs if jobs is None else jobs
    cap = settings.family_cap if cap is None else cap
    if get_run_id() is None:
        set_run_id()

    claim = get_claim(instance.theorem_id)
    params = claim.resolve(instance)
    claim.check_hypotheses(params, instance)
    backed = claim.backed(params, instance)
    count = claim.trial_count(instance)

    logger.info(
        "Theorem run started",
        extra={"theorem_id": instance.theorem_id, "trials": count,
               "seed": instance.seed, "backed": backed},
    )

    # Parallelize across trials or inside the search, never both.
    search_jobs = jobs if count == 1 else 1
    tasks = [_TrialTask(instance, params, index, search_jobs, cap) for index in range(count)]
    records: List[TrialRecord] = []
    counterexample = None
    generator = None
    with closing(ordered_map(_run_trial, tasks, jobs if count > 1 else 1)) as results:
        for result in results:
            records.append(result.record)
            counterexample = counterexample or result.counterexample
            if generator is None and result.provenance:
                generator = result.provenance.get("generator")
            outcome = "skipped" if result.record.status == "skipped" else (
                "passed" if result.record.passed else "failed"
            )
            MetricsCollector.record_trial(instance.theorem_id, outcome)
            if not result.record.passed and result.record.status != "skipped":
                logger.warning(
                    "Trial did not match the claim",
                    extra={"theorem_id": instance.theorem_id, "trial": result.record.index,
                           "status": result.record.status, "note": result.record.note},
                )

    aggregate = _aggregate(records)
    verdict = _verdict(aggregate, claim.threshold, backed)
    report = Report(
        instance=instance,
        resolved_params=params,
        label=claim.label,
        hypotheses=claim.hypotheses,
        expectation=claim.expectation,
        backing="theorem-backed" if backed else "experimental",
        verdict=verdict,
        aggregate=aggregate,
        trials=records,
        counterexample=counterexample,
        provenance={
            "generator": generator,
            "seed": instance.seed,
            "family_cap": cap,
            "unavoidable_cap": settings.unavoidable_cap,
            "app_version": settings.app_version,
        },
    )
    logger.info(
        "Theorem run finished",
        extra={"theorem_id": instance.theorem_id, "verdict": verdict,
               "successes": aggregate.successes, "decided": aggregate.decided},
    )
    if strict and verdict == "violated":
        raise TheoremViolationError(
            f"{instance.theorem_id} failed {aggregate.failures} of {aggregate.decided} trials",
            report,
        )
    return report
