"""Integration tests for the eulercert command line."""

import json

import pytest

from src.core.polyarith import Poly
from src.main import EXIT_CAPACITY, EXIT_FAIL, EXIT_PASS, EXIT_USAGE, main

pytestmark = pytest.mark.integration


def _run_json(tmp_path, *argv):
    out = tmp_path / "out.json"
    code = main([*argv, "--format", "json", "--out", str(out)])
    return code, json.loads(out.read_text())


class TestTable:
    """Test cases for the table command."""

    def test_type_d_csv(self, tmp_path):
        out = tmp_path / "d.csv"

        code = main(["table", "--family", "D", "--n-max", "3", "--format", "csv", "--out", str(out)])

        assert code == EXIT_PASS
        assert out.read_text().splitlines() == [
            "n,c0,c1,c2,c3",
            "0,1,,,",
            "1,1,,,",
            "2,1,2,1,",
            "3,1,11,11,1",
        ]

    def test_small_d_json(self, tmp_path):
        code, data = _run_json(tmp_path, "table", "--family", "d", "--n-max", "4")

        assert code == EXIT_PASS
        assert [row["n"] for row in data["rows"]] == [2, 3, 4]
        assert data["rows"][-1]["coeffs"] == [1, 0, -12, 0, 12]

    def test_a_zero(self, tmp_path):
        code, data = _run_json(tmp_path, "table", "--family", "A", "--n-max", "0")

        assert code == EXIT_PASS
        assert data["rows"] == [{"n": 0, "coeffs": [0, 1]}]

    def test_brute_method(self, tmp_path):
        code, data = _run_json(tmp_path, "table", "--family", "B", "--n", "3", "--method", "brute")

        assert code == EXIT_PASS
        assert data["rows"][3]["coeffs"] == [1, 23, 23, 1]

    def test_stdout(self, capsys):
        code = main(["table", "--family", "Qtilde", "--n-max", "2"])

        assert code == EXIT_PASS
        data = json.loads(capsys.readouterr().out)
        assert data["rows"][2]["coeffs"] == [-1, 0, 2]

    def test_d_below_two_is_usage_error(self, tmp_path):
        assert main(["table", "--family", "d", "--n-max", "1", "--out", str(tmp_path / "x")]) == EXIT_USAGE

    def test_brute_capacity(self, tmp_path):
        argv = ["table", "--family", "B", "--n-max", "6", "--method", "brute", "--brute-cap", "5"]

        assert main([*argv, "--out", str(tmp_path / "x")]) == EXIT_CAPACITY

    def test_unknown_family(self):
        with pytest.raises(SystemExit) as exc_info:
            main(["table", "--family", "E"])

        assert exc_info.value.code == 2


class TestVerify:
    """Test cases for the verify command."""

    @pytest.mark.parametrize(
        "suite, n_max",
        [("stembridge", "5"), ("special-values", "8"), ("cvijovic", "6"), ("transforms", "6"), ("oracle", "4")],
    )
    def test_suites_pass(self, tmp_path, suite, n_max):
        code, records = _run_json(tmp_path, "verify", "--suite", suite, "--n-max", n_max)

        assert code == EXIT_PASS
        assert records
        assert all(r["pass"] for r in records)

    def test_all(self, tmp_path):
        code, records = _run_json(tmp_path, "verify", "--suite", "all", "--n-max", "4")

        assert code == EXIT_PASS
        checks = {r["check"] for r in records}
        assert {"stembridge_identity", "cvijovic_qtilde", "lead_d", "sturm_count_split"} <= checks

    def test_n_max_too_small(self, tmp_path):
        assert main(["verify", "--suite", "stembridge", "--n-max", "1", "--out", str(tmp_path / "x")]) == EXIT_USAGE

    def test_capacity(self, tmp_path):
        argv = ["verify", "--suite", "stembridge", "--n-max", "6", "--brute-cap", "5"]

        assert main([*argv, "--out", str(tmp_path / "x")]) == EXIT_CAPACITY

    def test_series_order_below_n_max(self, tmp_path):
        argv = ["verify", "--suite", "special-values", "--n-max", "10", "--series-order", "4"]

        assert main([*argv, "--out", str(tmp_path / "x")]) == EXIT_USAGE

    def test_cvijovic_series_order_below_n_max(self, tmp_path):
        argv = ["verify", "--suite", "cvijovic", "--n-max", "10", "--series-order", "10"]

        assert main([*argv, "--out", str(tmp_path / "x")]) == EXIT_USAGE

    def test_csv_report(self, tmp_path):
        out = tmp_path / "report.csv"

        code = main(["verify", "--suite", "stembridge", "--n-max", "3", "--format", "csv", "--out", str(out)])

        assert code == EXIT_PASS
        lines = out.read_text().splitlines()
        assert lines[0] == "check,n,expected,got,pass"
        assert len(lines) == 3


class TestCertify:
    """Test cases for the certify command."""

    def test_compat_single_n(self, tmp_path):
        code, certificates = _run_json(tmp_path, "certify", "--check", "compat", "--n", "2", "--samples", "16")

        assert code == EXIT_PASS
        assert [c["label"] for c in certificates] == ["{a_1, b_2, d_2}", "{A_1, B_2, D_2}"]
        assert all(c["seed"] == 0 for c in certificates)

    def test_rz_range(self, tmp_path):
        code, certificates = _run_json(tmp_path, "certify", "--check", "rz", "--n-max", "6")

        assert code == EXIT_PASS
        assert len(certificates) == 5
        assert all(c["verdict"] == "pass" for c in certificates)
        assert certificates[0]["evidence"]["roots"] == [{"lo": "-1/1", "hi": "-1/1", "mult": 2, "poly": 0}]

    def test_rz_worker_processes(self, tmp_path):
        code, certificates = _run_json(tmp_path, "certify", "--check", "rz", "--n-max", "5", "--jobs", "2")

        assert code == EXIT_PASS
        assert [c["label"] for c in certificates] == [f"D_{n} in (-inf,0)" for n in range(2, 6)]

    def test_interleave(self, tmp_path):
        code, certificates = _run_json(tmp_path, "certify", "--check", "interleave", "--n", "3")

        assert code == EXIT_PASS
        assert len(certificates) == 8

    def test_chains_and_signs(self, tmp_path):
        code, records = _run_json(tmp_path, "certify", "--check", "chains", "--n-max", "3")
        assert code == EXIT_PASS
        assert {r["n"] for r in records} == {1, 2, 3}

        code, records = _run_json(tmp_path, "certify", "--check", "signs", "--n-max", "3")
        assert code == EXIT_PASS
        assert all(r["pass"] for r in records)

    def test_csv_summary(self, tmp_path):
        out = tmp_path / "certs.csv"

        code = main(["certify", "--check", "rz", "--n", "3", "--format", "csv", "--out", str(out)])

        assert code == EXIT_PASS
        assert out.read_text().splitlines() == [
            "label,claim,degrees,roots,checkpoints,pairs,verdict",
            '"D_3 in (-inf,0)",real_rooted_in_region,3,3,0,0,pass',
        ]

    @pytest.mark.parametrize("check", ["chains", "signs"])
    def test_single_pair_checks_accept_one(self, tmp_path, check):
        code, records = _run_json(tmp_path, "certify", "--check", check, "--n", "1")

        assert code == EXIT_PASS
        assert {r["n"] for r in records} == {1}

    def test_rz_rejects_one(self, tmp_path):
        assert main(["certify", "--check", "rz", "--n", "1", "--out", str(tmp_path / "x")]) == EXIT_USAGE

    def test_missing_check(self, tmp_path):
        assert main(["certify", "--n", "3", "--out", str(tmp_path / "x")]) == EXIT_USAGE


class TestEnvironment:
    """Test cases for EULERCERT_* settings."""

    def test_env_format_and_out(self, env_setup, tmp_path):
        code = main(["table", "--family", "B", "--n-max", "2"])

        assert code == EXIT_PASS
        assert (tmp_path / "out.csv").read_text().splitlines()[-1] == "2,1,6,1"

    def test_flag_beats_env(self, env_setup, tmp_path):
        out = tmp_path / "flag.json"

        code = main(["table", "--family", "B", "--n-max", "1", "--format", "json", "--out", str(out)])

        assert code == EXIT_PASS
        assert json.loads(out.read_text())["rows"][1]["coeffs"] == [1, 1]

    def test_env_brute_cap(self, env_setup):
        assert main(["verify", "--suite", "oracle", "--n-max", "7"]) == EXIT_CAPACITY

    def test_env_selector_and_n_max(self, monkeypatch, tmp_path):
        monkeypatch.setenv("EULERCERT_SUITE", "cvijovic")
        monkeypatch.setenv("EULERCERT_N_MAX", "4")

        code, records = _run_json(tmp_path, "verify")

        assert code == EXIT_PASS
        assert max(r["n"] for r in records) == 4

    def test_invalid_env(self, monkeypatch):
        monkeypatch.setenv("EULERCERT_JOBS", "many")

        assert main(["table", "--family", "A", "--n-max", "1"]) == EXIT_USAGE

    def test_fail_exit_code(self, mocker, tmp_path):
        mocker.patch("src.main.eulerian_fast", return_value=Poly.from_coeffs([1, 0, 1]))

        assert main(["certify", "--check", "rz", "--n", "2", "--out", str(tmp_path / "x")]) == EXIT_FAIL
