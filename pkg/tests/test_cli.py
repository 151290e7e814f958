import json

import pytest

from cozero.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpectrumCommand:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "spectrum", "15")
        assert code == 0
        assert out == "n=15: 6^1 4^1 2^3 0^1\n"

    def test_prime_is_degenerate(self, capsys):
        code, out, _ = run(capsys, "spectrum", "7")
        assert code == 2
        assert "degenerate" in out

    def test_prime_power_is_degenerate_but_prints(self, capsys):
        code, out, _ = run(capsys, "spectrum", "9")
        assert code == 2
        assert "0^2" in out
        assert "null graph" in out

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "spectrum", "30", "--format", "json",
                           "--no-timestamp")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == 1
        assert doc["n"] == 30
        assert sum(e["multiplicity"] for e in doc["spectrum"]) == 21
        assert "timestamp" not in doc

    def test_json_timestamp_present_by_default(self, capsys):
        _, out, _ = run(capsys, "spectrum", "15", "--format", "json")
        assert "timestamp" in json.loads(out)

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "spectrum", "15", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "value,multiplicity,exact"

    def test_dot_is_rejected(self, capsys):
        code, _, err = run(capsys, "spectrum", "15", "--format", "dot")
        assert code == 64
        assert "structure" in err

    def test_deterministic_output(self, capsys):
        _, first, _ = run(capsys, "spectrum", "30", "--format", "json",
                          "--no-timestamp")
        _, second, _ = run(capsys, "spectrum", "30", "--format", "json",
                           "--no-timestamp")
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "spec.txt"
        code, out, _ = run(capsys, "spectrum", "15", "--out", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text() == "n=15: 6^1 4^1 2^3 0^1\n"


class TestVerifyCommand:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "30")
        assert code == 0
        assert out.startswith("n=30: PASS")

    def test_two_prime_case_reports_integral(self, capsys):
        code, out, _ = run(capsys, "verify", "15")
        assert code == 0
        assert "integral=true" in out

    def test_prime_degenerate(self, capsys):
        code, out, _ = run(capsys, "verify", "7919")
        assert code == 2
        assert "degenerate" in out

    def test_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "verify", "30", "--cap", "5")
        assert code == 3
        assert "cap" in err

    def test_cap_from_environment(self, capsys, monkeypatch):
        monkeypatch.setenv("COZERO_CAP", "5")
        code, _, err = run(capsys, "verify", "30")
        assert code == 3

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "verify", "15", "--format", "json",
                           "--no-timestamp")
        assert code == 0
        doc = json.loads(out)
        assert doc["matched"] is True
        assert doc["vertex_count"] == 6


class TestScanCommand:
    def test_two_prime_filter(self, capsys):
        code, out, _ = run(capsys, "scan", "6", "40", "--filter", "pq",
                           "--jobs", "1", "--no-timestamp")
        assert code == 0
        lines = out.splitlines()
        ns = [int(line.split(":")[0][2:]) for line in lines if line.startswith("n=")]
        assert ns == [6, 10, 14, 15, 21, 22, 26, 33, 34, 35, 38, 39]
        assert ns == sorted(ns)
        assert "0 failures" in lines[-1]
        assert f"{len(ns)} integral" in lines[-1]

    def test_single_value_range(self, capsys):
        code, out, _ = run(capsys, "scan", "6", "6", "--jobs", "1",
                           "--no-timestamp")
        assert code == 0
        assert out.splitlines()[0].startswith("n=6: PASS")

    def test_parallel_matches_serial(self, capsys):
        code1, serial, _ = run(capsys, "scan", "4", "30", "--jobs", "1",
                               "--no-timestamp")
        code2, parallel, _ = run(capsys, "scan", "4", "30", "--jobs", "4",
                                 "--no-timestamp")
        assert code1 == code2 == 0
        assert serial == parallel

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "scan", "6", "20", "--filter", "p2q",
                           "--jobs", "1", "--format", "json", "--no-timestamp")
        assert code == 0
        doc = json.loads(out)
        assert [row["n"] for row in doc["rows"]] == [12, 18, 20]
        assert doc["failures"] == 0

    def test_bad_range_is_usage_error(self, capsys):
        code, _, err = run(capsys, "scan", "30", "6", "--jobs", "1")
        assert code == 64
        assert "lo" in err


class TestStructureCommand:
    def test_dot_quotient(self, capsys):
        code, out, _ = run(capsys, "structure", "30", "--format", "dot")
        assert code == 0
        assert out.startswith("graph divisor_quotient_30 {")
        assert out.count(" -- ") == 9

    def test_text_table(self, capsys):
        code, out, _ = run(capsys, "structure", "12")
        assert code == 0
        assert "4 proper divisors" in out
        assert "edges: 2-3 3-4 4-6" in out

    def test_boundary_note_for_four(self, capsys):
        code, out, _ = run(capsys, "structure", "4")
        assert code == 0
        assert "boundary" in out

    def test_csv_is_laplacian(self, capsys):
        code, out, _ = run(capsys, "structure", "12", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "2,-2,0,0"

    def test_full_graph_dot(self, capsys):
        code, out, _ = run(capsys, "structure", "12", "--format", "dot", "--full")
        assert code == 0
        assert out.startswith("graph cozero_divisor_12 {")

    def test_prime_degenerate(self, capsys):
        code, out, _ = run(capsys, "structure", "11")
        assert code == 2

    def test_json(self, capsys):
        code, out, _ = run(capsys, "structure", "30", "--format", "json",
                           "--no-timestamp")
        doc = json.loads(out)
        assert doc["quotient_connectivity"] == "connected"
        assert len(doc["edges"]) == 9


class TestIntegralityCommand:
    def test_integral_case(self, capsys):
        code, out, _ = run(capsys, "integrality", "15")
        assert code == 0
        assert "laplacian_integral=true" in out

    def test_non_integral_case(self, capsys):
        code, out, _ = run(capsys, "integrality", "12")
        assert code == 0
        assert "laplacian_integral=false" in out

    def test_prime_degenerate(self, capsys):
        code, out, _ = run(capsys, "integrality", "13")
        assert code == 2


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate", "30"])
        assert exc.value.code == 64

    def test_negative_tolerance(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["spectrum", "15", "--tol", "-1"])
        assert exc.value.code == 64

    def test_missing_argument(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["spectrum"])
        assert exc.value.code == 64

    def test_n_below_two(self, capsys):
        code, _, err = run(capsys, "spectrum", "1")
        assert code == 1
