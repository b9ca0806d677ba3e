"""Integration tests for the command-line interface."""

import json
import math

import pytest

from fpsearch.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAngles:
    def test_reference_schedule(self, capsys):
        code, out, _ = run_cli(capsys, "angles", "--w", "0.08", "--delta", "0.3")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["l"] == 12
        assert payload["L"] == 25
        assert len(payload["alpha_radians"]) == 12
        assert len(payload["beta_radians"]) == 12
        assert len(payload["phi_radians"]) == 24
        assert payload["delta"] == 0.3

    def test_explicit_iteration_count(self, capsys):
        code, out, _ = run_cli(capsys, "angles", "--w", "0.5", "--l", "1")
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload["alpha_radians"]) == 1
        assert len(payload["beta_radians"]) == 1
        assert len(payload["phi_radians"]) == 2
        assert "delta" not in payload

    def test_out_of_range_w(self, capsys):
        code, _, err = run_cli(capsys, "angles", "--w", "1.5", "--delta", "0.3")
        assert code == EXIT_USAGE
        assert "(0, 1)" in err

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, "angles", "--w", "0.08", "--delta", "0.3")
        _, second, _ = run_cli(capsys, "angles", "--w", "0.08", "--delta", "0.3")
        assert first == second

    def test_csv_format_rejected(self, capsys):
        code, _, err = run_cli(capsys, "angles", "--format", "csv", "--w", "0.5", "--l", "1")
        assert code == EXIT_USAGE
        assert "format" in err

    def test_missing_subcommand_flags(self, capsys):
        code, _, _ = run_cli(capsys, "angles", "--w", "0.5")
        assert code == EXIT_USAGE


class TestSweep:
    def test_endpoint_rows(self, capsys):
        code, out, err = run_cli(
            capsys, "sweep", "--w", "0.3", "--delta", "0.2", "--points", "2"
        )
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "lambda,p_sim,p_closed,abs_err"
        first = [float(v) for v in lines[1].split(",")]
        last = [float(v) for v in lines[2].split(",")]
        assert first[0] == 0.0 and abs(first[1]) <= 1e-10
        assert last[0] == 1.0 and abs(last[1] - 1.0) <= 1e-12
        assert "min P over lambda >=" in err

    def test_reference_sweep_bound(self, capsys, tmp_path):
        path = tmp_path / "sweep.csv"
        code, _, err = run_cli(
            capsys,
            "sweep",
            "--output", str(path),
            "--w", "0.08", "--delta", "0.3", "--points", "500",
        )
        assert code == EXIT_OK
        rows = [line.split(",") for line in path.read_text().splitlines()[1:]]
        assert len(rows) == 500
        floor = math.sqrt(1.0 - 0.09)
        guarded = [float(r[1]) for r in rows if float(r[0]) >= 0.08]
        assert min(guarded) >= floor
        assert max(float(r[3]) for r in rows) <= 1e-9

    def test_bound_with_tighter_delta(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--w", "0.3", "--delta", "0.1", "--points", "200"
        )
        assert code == EXIT_OK
        rows = [line.split(",") for line in out.strip().splitlines()[1:]]
        guarded = [float(r[1]) for r in rows if float(r[0]) >= 0.3]
        assert min(guarded) >= math.sqrt(0.99) - 1e-12

    def test_full_precision_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--w", "0.2", "--delta", "0.4", "--points", "3")
        row = out.strip().splitlines()[2].split(",")
        # 17 significant digits reproduce the double exactly
        assert float(row[1]) == float(format(float(row[1]), ".17g"))

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--format", "json", "--w", "0.2", "--delta", "0.4", "--points", "4"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert len(payload) == 4
        assert set(payload[0]) == {"lambda", "p_sim", "p_closed", "abs_err"}

    def test_unwritable_path(self, capsys, tmp_path):
        path = tmp_path / "missing_dir" / "sweep.csv"
        code, _, err = run_cli(
            capsys, "sweep", "--output", str(path), "--w", "0.3", "--delta", "0.2", "--points", "2"
        )
        assert code == EXIT_IO
        assert "I/O error" in err

    def test_bad_grid(self, capsys):
        code, _, _ = run_cli(
            capsys, "sweep", "--w", "0.3", "--delta", "0.2",
            "--lambda-min", "0.9", "--lambda-max", "0.1",
        )
        assert code == EXIT_USAGE

    def test_deterministic_output(self, capsys):
        args = ("sweep", "--w", "0.1", "--delta", "0.2", "--points", "50")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second


class TestSimulate:
    def test_single_point(self, capsys):
        code, out, _ = run_cli(
            capsys, "simulate", "--lambda", "0.2", "--w", "0.08", "--delta", "0.3"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["l"] == 12
        assert payload["p_sim"] >= 0.95
        assert payload["abs_err"] <= 1e-9

    def test_lambda_validation(self, capsys):
        code, _, _ = run_cli(capsys, "simulate", "--lambda", "1.2", "--w", "0.08", "--delta", "0.3")
        assert code == EXIT_USAGE


class TestStatevector:
    def test_single_qubit_explicit_marked(self, capsys):
        code, out, _ = run_cli(
            capsys, "statevector", "--qubits", "1", "--marked", "0", "--w", "0.5", "--delta", "0.5"
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["lambda"] == pytest.approx(1.0 / math.sqrt(2.0))
        assert set(payload) == {
            "lambda", "l", "success_probability", "phase_oracle_calls", "standard_oracle_calls",
        }
        assert payload["standard_oracle_calls"] == 2 * payload["phase_oracle_calls"]

    def test_sampled_marked_set(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "statevector",
            "--qubits", "8", "--marked-count", "2", "--seed", "7",
            "--w", "0.08", "--delta", "0.3",
        )
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload["success_probability"] >= 0.91

    def test_sampled_set_deterministic(self, capsys):
        args = (
            "statevector", "--qubits", "6", "--marked-count", "3", "--seed", "11",
            "--w", "0.2", "--delta", "0.3",
        )
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_qubit_cap_named(self, capsys):
        code, _, err = run_cli(
            capsys, "statevector", "--qubits", "13", "--marked", "0", "--w", "0.5", "--delta", "0.5"
        )
        assert code == EXIT_USAGE
        assert "12" in err

    def test_bad_marked_list(self, capsys):
        code, _, _ = run_cli(
            capsys, "statevector", "--qubits", "2", "--marked", "0,zebra", "--w", "0.5", "--delta", "0.5"
        )
        assert code == EXIT_USAGE


class TestVerify:
    def test_minimal_run(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--max-L", "3", "--seed", "42")
        assert code == EXIT_OK
        checks = json.loads(out)
        assert all(c["pass"] for c in checks)
        names = {c["check_name"] for c in checks}
        assert "star_line_bijection" in names
        assert "tangent_sum_identity" in names

    def test_default_run_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--max-L", "9", "--seed", "42")
        assert code == EXIT_OK
        checks = json.loads(out)
        assert all(c["pass"] for c in checks)
        assert all("max_deviation" in c for c in checks)

    def test_even_max_l_rejected(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--max-L", "4")
        assert code == EXIT_USAGE
        assert "odd" in err

    def test_out_of_range_max_l(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "--max-L", "27")
        assert code == EXIT_USAGE

    def test_failure_exit_path(self, capsys, monkeypatch):
        import fpsearch.cli as cli_module
        from fpsearch.verify import CheckResult

        def broken_suite(max_L, seed):
            return [
                CheckResult(
                    check_name="synthetic_failure", L=None, params={},
                    max_deviation=1.0, passed=False,
                )
            ]

        monkeypatch.setattr(cli_module, "run_verification", broken_suite)
        code, out, err = run_cli(capsys, "verify", "--max-L", "3")
        assert code == EXIT_VERIFY_FAILED
        assert "synthetic_failure" in err
        assert not json.loads(out)[0]["pass"]


class TestParser:
    def test_unknown_subcommand(self, capsys):
        code, _, _ = run_cli(capsys, "frobnicate")
        assert code == EXIT_USAGE

    def test_no_arguments(self, capsys):
        code, _, _ = run_cli(capsys)
        assert code == EXIT_USAGE

    def test_verify_failure_exit_code_is_distinct(self):
        assert EXIT_VERIFY_FAILED == 1
        assert EXIT_USAGE == 2
        assert EXIT_IO == 3
