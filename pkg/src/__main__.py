"""
Command-line front end for tverberg-lab.

    python -m src [run flags] solve --config points.json --constraints '{"r": 2}'
    python -m src verify --config points.json --witness outcome.json --constraints '{"r": 2}'
    python -m src unavoidable 'skeleton(1)' --N 4 --r 2
    python -m src theorem run --id dim_bounded --params '{"r": 3, "d": 3}' --trials 20 --seed 5
    python -m src theorem list
    python -m src generate moment 10 3 --out moment.json
    python -m src bounds --r 3 --d 3 --k 2

Run flags (--seed, --trials, --cap, --jobs, --log-level, --log-format,
--metrics-out) go before or after the command. Human-readable summaries go
to stdout, JSON documents to --out, logs to stderr. Input errors exit with
64, a reduction whose witness fails re-verification with 70.
"""
import argparse
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from .complexes.dsl import parse_subcomplex
from .complexes.unavoidable import is_unavoidable
from .config import settings
from .core.errors import EnumerationCapError, SolverInvariantError, TheoremViolationError, TverbergInputError
from .core.schemas import (
    UnavoidabilityDocument,
    VerificationDocument,
    check_schema,
    dumps,
    load_configuration,
    load_witness,
    to_document,
)
from .core.validation import verify_witness
from .ingestion import read_document
from .ingestion.json import JSONIngestion
from .logging_config import set_run_id, setup_logging
from .metrics import MetricsCollector, write_metrics
from .solver.constraints import ConstraintSet
from .solver.search import find_tverberg
from .theorems import bounds
from .theorems.catalog import TheoremInstance, get_catalog
from .theorems.generators import moment_curve_config, random_config, sarkaria_config, with_class_sizes
from .theorems.runner import run_instance

EXIT_OK = 0
EXIT_USAGE = 64
EXIT_INTERNAL = 70

SOLVE_EXIT = {"witness_found": 0, "exhausted_no_witness": 1, "aborted_cap": 2}
THEOREM_EXIT = {"confirmed": 0, "experimental": 0, "inconclusive": 2, "violated": 3}


class CLIParser(argparse.ArgumentParser):
    """Usage errors exit with 64 instead of argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _load_mapping(value: str) -> Dict[str, Any]:
    """Inline JSON text, or a path to a JSON/YAML document."""
    if value.lstrip().startswith("{"):
        return JSONIngestion().loads(value, "<argument>")
    return read_document(value)


def _load_constraints(value: str) -> ConstraintSet:
    return ConstraintSet.model_validate(check_schema(_load_mapping(value)))


def _write(document: Dict[str, Any], out: Optional[str]) -> None:
    if out:
        Path(out).write_text(dumps(document), encoding="utf-8")
        print(f"💾 Wrote {out}")


def _faces_text(faces) -> str:
    return " | ".join("{" + ",".join(str(v) for v in face) + "}" for face in faces)


def cmd_solve(args) -> int:
    config = load_configuration(read_document(args.config))
    constraints = _load_constraints(args.constraints)
    print(f"🔍 Searching {constraints.r} faces among {config.n_points} points in R^{config.dim}...")
    outcome = find_tverberg(config, constraints)
    stats = outcome.statistics
    print("-" * 50)
    print(f"Search space: {stats.space} ({stats.families_enumerated} families, {stats.lp_calls} LP calls)")
    if outcome.found:
        witness = outcome.witness
        print(f"✅ Witness: {_faces_text(witness.faces)}")
        print(f"   Common point: ({', '.join(str(c) for c in witness.point)})")
    elif outcome.status == "exhausted_no_witness":
        print("❌ No partition satisfies the constraints (search exhausted)")
    else:
        print(f"⚠️  Enumeration cap of {settings.family_cap} families reached")
    _write(to_document(outcome), args.out)
    return SOLVE_EXIT[outcome.status]


def cmd_verify(args) -> int:
    config = load_configuration(read_document(args.config))
    witness = load_witness(read_document(args.witness))
    constraints = _load_constraints(args.constraints)
    print(f"🔍 Verifying {witness.r} faces against {config.n_points} points...")
    print("-" * 50)
    report = verify_witness(config, witness, constraints)
    for result in report.checks:
        if result.passed:
            print(f"✅ [PASS] {result.check_name}")
        else:
            print(f"❌ [FAIL] {result.check_name}: {result.message}")
    print("-" * 50)
    if report.passed:
        print("🎉 Witness verified exactly")
    else:
        print(f"🚨 Witness rejected ({len(report.failures)} failed checks)")
    _write(to_document(VerificationDocument.from_report(report)), args.out)
    return EXIT_OK if report.passed else 1


def cmd_unavoidable(args) -> int:
    sigma = parse_subcomplex(args.complex)
    try:
        result = is_unavoidable(sigma, args.N, args.r, mode=args.mode)
    except EnumerationCapError as e:
        print(f"⚠️  {e}")
        return 2
    if result.unavoidable:
        print(f"✅ {sigma.to_dsl()} is unavoidable for N={args.N}, r={args.r} ({result.mode})")
    else:
        print(f"❌ {sigma.to_dsl()} is avoided by {_faces_text(result.counterexample)}")
    document = UnavoidabilityDocument(
        complex=sigma.to_dsl(),
        N=result.N,
        r=result.r,
        mode=result.mode,
        unavoidable=result.unavoidable,
        counterexample=None if result.counterexample is None else [list(f) for f in result.counterexample],
        families_checked=result.families_checked,
    )
    _write(to_document(document), args.out)
    return EXIT_OK if result.unavoidable else 1


def cmd_theorem_list(args) -> int:
    print("📚 Theorem catalog")
    print("-" * 50)
    for theorem_id, claim in get_catalog().items():
        kind = "refutation" if claim.expectation == "exhausted" else "existence"
        print(f"{theorem_id:<28} {kind:<11} {claim.label}")
        print(f"{'':<28} {'':<11} {claim.hypotheses}")
    return EXIT_OK


def cmd_theorem_run(args) -> int:
    raw = _load_mapping(args.params) if args.params else {}
    extras = {key: raw.pop(key) for key in ("class_sizes", "dims", "adversary") if key in raw}
    instance = TheoremInstance(
        theorem_id=args.id,
        params=raw,
        trials=settings.default_trials,
        seed=settings.default_seed,
        **extras,
    )
    set_run_id()
    print(f"🔬 Running {instance.theorem_id} ({instance.trials} trials from seed {instance.seed})...")
    try:
        report = run_instance(instance, strict=args.strict)
    except TheoremViolationError as e:
        print(f"🚨 {e}")
        if e.report is not None:
            _write(to_document(e.report), args.out)
        return THEOREM_EXIT["violated"]

    aggregate = report.aggregate
    print("-" * 50)
    print(f"Backing: {report.backing}")
    print(
        f"Trials: {aggregate.successes}/{aggregate.decided} as expected, "
        f"{aggregate.inconclusive} inconclusive, {aggregate.skipped} skipped"
    )
    icon = {"confirmed": "🎉", "experimental": "🧪", "inconclusive": "⚠️ ", "violated": "🚨"}[report.verdict]
    print(f"{icon} Verdict: {report.verdict.upper()}")
    _write(to_document(report), args.out)
    return THEOREM_EXIT[report.verdict]


def cmd_generate(args) -> int:
    values = args.values
    expected = {"random": 2, "moment": 2, "sarkaria": 3}[args.kind]
    if len(values) != expected:
        raise TverbergInputError(f"generate {args.kind} takes {expected} integers, got {len(values)}")
    if args.kind == "random":
        config = random_config(values[0], values[1], coord_range=args.range, seed=settings.default_seed)
    elif args.kind == "moment":
        config = moment_curve_config(values[0], values[1])
    else:
        config = sarkaria_config(values[0], values[1], values[2])
    if args.class_sizes:
        sizes = [int(size) for size in args.class_sizes.split(",")]
        config = with_class_sizes(config, sizes)
    document = to_document(config)
    if args.out:
        print(f"🧮 Generated {config.n_points} points in R^{config.dim} ({args.kind})")
        _write(document, args.out)
    else:
        sys.stdout.write(dumps(document))
    return EXIT_OK


def cmd_bounds(args) -> int:
    r, d = args.r, args.d
    results: Dict[str, Any] = {
        "tverberg_number": bounds.tverberg_number(r, d),
        "min_dimension_bound": bounds.min_dimension_bound(r, d),
        "type_b_min_colors": bounds.type_b_min_colors(r, d),
        "prime_power": bounds.is_prime_power(r),
    }
    if args.c is not None:
        results["N_c"] = bounds.bound_Nc(r, d, args.c)
    if args.j is not None:
        results["sarkaria_size"] = bounds.sarkaria_size(r, args.j, d)
        if args.N is not None:
            results["jwise_condition"] = bounds.jwise_condition(r, args.j, d, args.N)
    if args.j is not None and args.k is not None and args.N is not None:
        results["gvkf_sharpened"] = bounds.gvkf_condition_sharpened(r, args.j, d, args.k, args.N)
        if args.k < d:
            results["gvkf_original_m"] = bounds.gvkf_condition_original(r, args.j, d, args.k, args.N)
    if args.N is not None and args.k is not None and args.s is not None:
        results["non_uniform_top_faces"] = bounds.non_uniform_top_faces(args.N, r, args.k, args.s)
    if args.dims:
        results["admissible"] = bounds.admissible([int(x) for x in args.dims.split(",")], d)

    print(f"📐 Bounds for r={r}, d={d}")
    print("-" * 50)
    for name, value in results.items():
        print(f"{name:<24} {'none' if value is None else value}")
    _write({"schema": settings.schema_version, "r": r, "d": d, **results}, args.out)
    return EXIT_OK


def _run_options() -> argparse.ArgumentParser:
    """
    Flags accepted both before and after the command. Defaults are
    suppressed so a flag given in one place is not reset by the other.
    """
    options = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    options.add_argument('--seed', type=int, help="Base seed for generators and theorem trials")
    options.add_argument('--trials', type=int, help="Number of theorem trials")
    options.add_argument('--cap', type=int, help="Enumeration cap on candidate families")
    options.add_argument('--jobs', type=int, help="Worker processes")
    options.add_argument('--log-level', type=str.upper, choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    options.add_argument('--log-format', choices=["json", "text"])
    options.add_argument('--metrics-out', help="Write Prometheus metrics to this file")
    return options


def build_parser() -> CLIParser:
    common = _run_options()
    parser = CLIParser(
        prog="tverberg-lab",
        description="Constrained Tverberg partitions with exact arithmetic",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", parents=[common], help="Search for a constrained Tverberg partition")
    solve.add_argument('--config', required=True, help="Configuration file (.json, .yaml, .yml)")
    solve.add_argument('--constraints', required=True, help="Constraint set as inline JSON or a file")
    solve.add_argument('--out', help="Write the search outcome here")
    solve.set_defaults(handler=cmd_solve)

    verify = commands.add_parser("verify", parents=[common], help="Check a witness exactly")
    verify.add_argument('--config', required=True)
    verify.add_argument('--witness', required=True, help="Witness or search outcome file")
    verify.add_argument('--constraints', required=True)
    verify.add_argument('--out')
    verify.set_defaults(handler=cmd_verify)

    unavoidable = commands.add_parser("unavoidable", parents=[common], help="Decide Tverberg unavoidability of a subcomplex")
    unavoidable.add_argument('complex', help="Subcomplex expression, e.g. 'skeleton(1)'")
    unavoidable.add_argument('--N', type=int, required=True)
    unavoidable.add_argument('--r', type=int, required=True)
    unavoidable.add_argument('--mode', choices=["pairwise", "cover-partition"], default="pairwise")
    unavoidable.add_argument('--out')
    unavoidable.set_defaults(handler=cmd_unavoidable)

    theorem = commands.add_parser("theorem", parents=[common], help="Run or list catalog claims")
    theorem_commands = theorem.add_subparsers(dest="theorem_command", required=True)
    run = theorem_commands.add_parser("run", parents=[common], help="Run seeded trials of a claim")
    run.add_argument('--id', required=True, choices=list(get_catalog()))
    run.add_argument('--params', help="Parameters as inline JSON or a file")
    run.add_argument('--strict', action="store_true", help="Stop with an error on a violated claim")
    run.add_argument('--out')
    run.set_defaults(handler=cmd_theorem_run)
    listing = theorem_commands.add_parser("list", parents=[common], help="Print the catalog")
    listing.set_defaults(handler=cmd_theorem_list)

    generate = commands.add_parser("generate", parents=[common], help="Write a configuration")
    generate.add_argument('kind', choices=["random", "moment", "sarkaria"])
    generate.add_argument('values', type=int, nargs="+",
                          help="random: COUNT D; moment: COUNT D; sarkaria: R J D")
    generate.add_argument('--range', type=int, help="Half-width of the random coordinate box")
    generate.add_argument('--class-sizes', help="Color consecutive points, e.g. 3,2,2")
    generate.add_argument('--out')
    generate.set_defaults(handler=cmd_generate)

    bound = commands.add_parser("bounds", parents=[common], help="Evaluate parameter bounds")
    bound.add_argument('--r', type=int, required=True)
    bound.add_argument('--d', type=int, required=True)
    for name in ("c", "j", "k", "s", "N"):
        bound.add_argument(f'--{name}', type=int)
    bound.add_argument('--dims', help="Comma-separated dimensions for the admissibility test")
    bound.add_argument('--out')
    bound.set_defaults(handler=cmd_bounds)
    return parser


OVERRIDES = {
    "seed": "default_seed",
    "trials": "default_trials",
    "cap": "family_cap",
    "jobs": "jobs",
    "log_level": "log_level",
    "log_format": "log_format",
}


def _apply_overrides(args) -> None:
    for flag, field in OVERRIDES.items():
        value = getattr(args, flag, None)
        if value is not None:
            setattr(settings, field, value)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code is None else int(e.code)

    _apply_overrides(args)
    setup_logging(settings.log_level, settings.log_format)
    set_run_id()
    MetricsCollector.set_app_version(settings.app_version)
    try:
        return args.handler(args)
    except (ValidationError, ValueError) as e:
        # TverbergInputError and pydantic's ValidationError both land here.
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SolverInvariantError as e:
        print(f"Internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    finally:
        metrics_out = getattr(args, "metrics_out", None)
        if metrics_out:
            write_metrics(metrics_out)


if __name__ == "__main__":
    sys.exit(main())
