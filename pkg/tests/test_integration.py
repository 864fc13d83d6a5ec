import json
import pytest
import yaml
from src import __main__ as cli
from src.config import settings
from src.core.errors import SolverInvariantError
from src.theorems.catalog import CATALOG_IDS

QUIET = ["--log-level", "WARNING"]
SQUARE = {"dim": 2, "points": [[0, 0], [1, 0], [1, 1], [0, 1]]}
LINE = {"dim": 1, "points": [[0], [1], [2], [3]]}


@pytest.fixture(autouse=True)
def restore_settings():
    """main() applies global flags to the shared settings object"""
    fields = ("default_seed", "default_trials", "family_cap", "jobs", "log_level", "log_format")
    saved = {name: getattr(settings, name) for name in fields}
    yield
    for name, value in saved.items():
        setattr(settings, name, value)


def _write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def _run(*argv):
    return cli.main([*QUIET, *argv])


class TestSolveCommand:
    """Test the solve command"""

    def test_witness_found(self, tmp_path, capsys):
        config = _write_json(tmp_path / "square.json", SQUARE)
        out = tmp_path / "outcome.json"
        code = _run("solve", "--config", config, "--constraints", '{"r": 2}', "--out", str(out))
        assert code == 0
        document = json.loads(out.read_text())
        assert document["schema"] == "tverberg-lab/1"
        assert document["status"] == "witness_found"
        assert document["witness"]["faces"] == [[0, 2], [1, 3]]
        assert document["witness"]["point"] == ["1/2", "1/2"]
        assert "elapsed_seconds" not in document["statistics"]
        assert "✅ Witness: {0,2} | {1,3}" in capsys.readouterr().out

    def test_yaml_configuration(self, tmp_path):
        path = tmp_path / "line.yaml"
        path.write_text(yaml.safe_dump(LINE), encoding="utf-8")
        assert _run("solve", "--config", str(path), "--constraints", '{"r": 2}') == 0

    def test_exhausted(self, tmp_path, capsys):
        config = _write_json(tmp_path / "line.json", LINE)
        code = _run("solve", "--config", config, "--constraints", '{"r": 2, "subcomplex": "induced(0..1)"}')
        assert code == 1
        assert "search exhausted" in capsys.readouterr().out

    def test_cap_reached(self, tmp_path):
        config = _write_json(tmp_path / "square.json", SQUARE)
        assert _run("--cap", "2", "solve", "--config", config, "--constraints", '{"r": 2}') == 2

    def test_constraints_from_file(self, tmp_path):
        config = _write_json(tmp_path / "square.json", SQUARE)
        constraints = _write_json(tmp_path / "constraints.json", {"schema": "tverberg-lab/1", "r": 2, "max_dims": 0})
        assert _run("solve", "--config", config, "--constraints", constraints) == 1

    def test_jobs_give_identical_output(self, tmp_path):
        assert _run("--seed", "4", "generate", "random", "7", "2", "--range", "20",
                    "--out", str(tmp_path / "points.json")) == 0
        outputs = []
        for jobs in ("1", "2"):
            out = tmp_path / f"outcome_{jobs}.json"
            code = _run("--jobs", jobs, "solve", "--config", str(tmp_path / "points.json"),
                        "--constraints", '{"r": 3}', "--out", str(out))
            assert code == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]


class TestInputErrors:
    """Test that bad input exits with the usage code"""

    def test_malformed_constraints(self, tmp_path, capsys):
        config = _write_json(tmp_path / "square.json", SQUARE)
        assert _run("solve", "--config", config, "--constraints", '{"r": 2,}') == 64
        assert "line 1 column" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        missing = str(tmp_path / "missing.json")
        assert _run("solve", "--config", missing, "--constraints", '{"r": 2}') == 64

    def test_unsupported_extension(self, tmp_path):
        path = tmp_path / "points.txt"
        path.write_text("{}", encoding="utf-8")
        assert _run("solve", "--config", str(path), "--constraints", '{"r": 2}') == 64

    def test_float_coordinates(self, tmp_path):
        config = _write_json(tmp_path / "floats.json", {"dim": 1, "points": [[0.5], [1]]})
        assert _run("solve", "--config", config, "--constraints", '{"r": 2}') == 64

    def test_wrong_schema_tag(self, tmp_path):
        config = _write_json(tmp_path / "square.json", {"schema": "other/9", **SQUARE})
        assert _run("solve", "--config", config, "--constraints", '{"r": 2}') == 64

    def test_usage_error(self):
        assert _run("solve", "--constraints", '{"r": 2}') == 64

    def test_help(self, capsys):
        assert cli.main(["--help"]) == 0
        assert "tverberg-lab" in capsys.readouterr().out


class TestVerifyCommand:
    """Test the verify command"""

    def test_verify_solver_output(self, tmp_path, capsys):
        config = _write_json(tmp_path / "square.json", SQUARE)
        outcome = tmp_path / "outcome.json"
        _run("solve", "--config", config, "--constraints", '{"r": 2}', "--out", str(outcome))
        report = tmp_path / "report.json"
        code = _run("verify", "--config", config, "--witness", str(outcome),
                    "--constraints", '{"r": 2}', "--out", str(report))
        assert code == 0
        assert "🎉 Witness verified exactly" in capsys.readouterr().out
        document = json.loads(report.read_text())
        assert document["status"] == "passed"
        assert document["failed_checks"] == 0

    def test_verify_rejects(self, tmp_path, capsys):
        config = _write_json(tmp_path / "square.json", SQUARE)
        witness = _write_json(tmp_path / "witness.json", {
            "faces": [[0, 1], [2, 3]],
            "weights": [{"0": "1/2", "1": "1/2"}, {"2": "1/2", "3": "1/2"}],
            "point": ["1/2", "0"],
        })
        code = _run("verify", "--config", config, "--witness", witness, "--constraints", '{"r": 2}')
        assert code == 1
        assert "❌ [FAIL] common_point" in capsys.readouterr().out

    def test_weight_on_missing_vertex(self, tmp_path, capsys):
        config = _write_json(tmp_path / "square.json", SQUARE)
        witness = _write_json(tmp_path / "witness.json", {
            "faces": [[0, 2], [1, 3]],
            "weights": [{"0": "1/2", "7": "1/2"}, {"1": "1/2", "3": "1/2"}],
            "point": ["1/2", "1/2"],
        })
        code = _run("verify", "--config", config, "--witness", witness, "--constraints", '{"r": 2}')
        assert code == 1
        out = capsys.readouterr().out
        assert "❌ [FAIL] convex_weights: Face [0, 2] puts weight on vertices [7]" in out
        assert "❌ [FAIL] common_point: Skipped: invalid weights" in out

    def test_outcome_without_witness(self, tmp_path):
        config = _write_json(tmp_path / "line.json", LINE)
        outcome = tmp_path / "outcome.json"
        _run("solve", "--config", config, "--constraints", '{"r": 2, "max_dims": 0}', "--out", str(outcome))
        code = _run("verify", "--config", config, "--witness", str(outcome), "--constraints", '{"r": 2}')
        assert code == 64

    def test_generate_solve_verify(self, tmp_path):
        points = str(tmp_path / "points.json")
        outcome = str(tmp_path / "outcome.json")
        constraints = '{"r": 2, "rainbow": true}'
        assert _run("generate", "random", "6", "2", "--class-sizes", "2,2,2", "--out", points) == 0
        assert _run("solve", "--config", points, "--constraints", constraints, "--out", outcome) == 0
        assert _run("verify", "--config", points, "--witness", outcome, "--constraints", constraints) == 0


class TestUnavoidableCommand:
    """Test the unavoidable command"""

    def test_avoidable(self, tmp_path):
        out = tmp_path / "result.json"
        assert _run("unavoidable", "induced(0..1)", "--N", "4", "--r", "2", "--out", str(out)) == 1
        document = json.loads(out.read_text())
        assert document["counterexample"] == [[2], [3]]
        assert document["unavoidable"] is False

    def test_unavoidable(self):
        assert _run("unavoidable", "skeleton(1)", "--N", "4", "--r", "2") == 0

    def test_cover_partition(self, tmp_path):
        out = tmp_path / "result.json"
        code = _run("unavoidable", "induced(0..1)", "--N", "4", "--r", "2",
                    "--mode", "cover-partition", "--out", str(out))
        assert code == 1
        assert json.loads(out.read_text())["counterexample"] == [[0, 1, 2, 3], [4]]

    def test_cap(self):
        assert _run("unavoidable", "skeleton(1)", "--N", "30", "--r", "2") == 2

    def test_bad_expression(self, capsys):
        assert _run("unavoidable", "skeleton(", "--N", "4", "--r", "2") == 64
        assert "position 9" in capsys.readouterr().err


class TestTheoremCommand:
    """Test theorem list and run"""

    def test_list(self, capsys):
        assert _run("theorem", "list") == 0
        out = capsys.readouterr().out
        for theorem_id in CATALOG_IDS:
            assert theorem_id in out

    def test_run_confirmed(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code = _run("--trials", "2", "theorem", "run", "--id", "topological_tverberg_affine",
                    "--params", '{"r": 2, "d": 1}', "--out", str(out))
        assert code == 0
        document = json.loads(out.read_text())
        assert document["verdict"] == "confirmed"
        assert document["aggregate"]["trials"] == 2
        assert "Verdict: CONFIRMED" in capsys.readouterr().out

    def test_run_necessity_with_counterexample(self, tmp_path):
        out = tmp_path / "report.json"
        code = _run("theorem", "run", "--id", "dim_bounded_necessity",
                    "--params", '{"r": 2, "d": 2}', "--out", str(out))
        assert code == 0
        document = json.loads(out.read_text())
        assert document["counterexample"]["configuration"]["provenance"]["generator"] == "sarkaria"

    def test_run_experimental(self):
        code = _run("--trials", "1", "theorem", "run", "--id", "optimal_colored", "--params", '{"r": 4, "d": 1}')
        assert code == 0

    def test_run_hypothesis_error(self, capsys):
        code = _run("theorem", "run", "--id", "topological_tverberg_affine",
                    "--params", '{"r": 2, "d": 1, "N": 1}')
        assert code == 64
        assert "needs N >=" in capsys.readouterr().err

    def test_unknown_theorem(self):
        assert _run("theorem", "run", "--id", "four_color") == 64

    def test_report_independent_of_jobs(self, tmp_path):
        outputs = []
        for jobs in ("1", "2"):
            out = tmp_path / f"report_{jobs}.json"
            code = _run("--jobs", jobs, "--trials", "3", "theorem", "run",
                        "--id", "topological_tverberg_affine", "--params", '{"r": 2, "d": 2}',
                        "--out", str(out))
            assert code == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]


class TestRunFlags:
    """Test run flags given before or after the command"""

    def test_theorem_flags_after_command(self, tmp_path):
        out = tmp_path / "report.json"
        code = _run("theorem", "run", "--id", "topological_tverberg_affine", "--params", '{"r": 2, "d": 1}',
                    "--trials", "2", "--seed", "5", "--out", str(out))
        assert code == 0
        document = json.loads(out.read_text())
        assert document["instance"]["trials"] == 2
        assert document["instance"]["seed"] == 5
        assert [trial["seed"] for trial in document["trials"]] == [5, 6]

    def test_flag_after_command_wins(self, tmp_path):
        out = tmp_path / "report.json"
        code = _run("--seed", "1", "--trials", "3", "theorem", "run", "--id", "topological_tverberg_affine",
                    "--params", '{"r": 2, "d": 1}', "--seed", "9", "--out", str(out))
        assert code == 0
        document = json.loads(out.read_text())
        assert document["instance"]["seed"] == 9
        assert document["instance"]["trials"] == 3

    def test_cap_after_command(self, tmp_path):
        config = _write_json(tmp_path / "square.json", SQUARE)
        assert _run("solve", "--config", config, "--constraints", '{"r": 2}', "--cap", "2") == 2
        assert _run("solve", "--config", config, "--constraints", '{"r": 2}', "--jobs", "2") == 0

    def test_unavoidable_flags_after_command(self, tmp_path):
        metrics = tmp_path / "metrics.prom"
        code = _run("unavoidable", "skeleton(1)", "--N", "4", "--r", "2", "--jobs", "2",
                    "--metrics-out", str(metrics))
        assert code == 0
        assert metrics.exists()

    def test_log_level_is_checked(self, tmp_path):
        config = _write_json(tmp_path / "square.json", SQUARE)
        assert _run("solve", "--config", config, "--constraints", '{"r": 2}', "--log-level", "chatty") == 64
        assert _run("solve", "--config", config, "--constraints", '{"r": 2}', "--log-level", "error") == 0

    def test_internal_error_exit_code(self, tmp_path, capsys, monkeypatch):
        def broken_search(config, constraints):
            raise SolverInvariantError("projected witness failed verification")

        monkeypatch.setattr(cli, "find_tverberg", broken_search)
        config = _write_json(tmp_path / "square.json", SQUARE)
        assert _run("solve", "--config", config, "--constraints", '{"r": 2}') == cli.EXIT_INTERNAL == 70
        assert "Internal error: projected witness failed verification" in capsys.readouterr().err


class TestGenerateAndBounds:
    """Test the generate and bounds commands"""

    def test_generate_to_stdout(self, capsys):
        assert _run("--seed", "3", "generate", "moment", "4", "2") == 0
        document = json.loads(capsys.readouterr().out)
        assert document["points"] == [["1", "1"], ["2", "4"], ["3", "9"], ["4", "16"]]

    def test_generate_sarkaria(self, tmp_path):
        out = tmp_path / "sarkaria.json"
        assert _run("generate", "sarkaria", "3", "2", "2", "--out", str(out)) == 0
        assert len(json.loads(out.read_text())["points"]) == 8

    def test_generate_wrong_arity(self):
        assert _run("generate", "sarkaria", "3", "2") == 64

    def test_bounds(self, tmp_path):
        out = tmp_path / "bounds.json"
        assert _run("bounds", "--r", "3", "--d", "2", "--c", "1", "--out", str(out)) == 0
        document = json.loads(out.read_text())
        assert document["N_c"] == 8
        assert document["tverberg_number"] == 6
        assert document["prime_power"] is True

    def test_bounds_gvkf(self, tmp_path):
        out = tmp_path / "bounds.json"
        code = _run("bounds", "--r", "3", "--d", "3", "--j", "3", "--k", "2", "--N", "5", "--out", str(out))
        assert code == 0
        document = json.loads(out.read_text())
        assert document["gvkf_sharpened"] is True
        assert document["sarkaria_size"] == 5
        assert document["gvkf_original_m"] is None

    def test_metrics_file(self, tmp_path):
        metrics = tmp_path / "metrics.prom"
        assert _run("--metrics-out", str(metrics), "unavoidable", "skeleton(1)", "--N", "4", "--r", "2") == 0
        assert "tverberg_unavoidability_checks_total" in metrics.read_text()
