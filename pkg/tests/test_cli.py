import json

import pytest

from twoquadrics import cli
from twoquadrics.motivic import VerificationReport

G4K1_TEXT_ROWS = [
    [1],
    [0, 0],
    [0, 1, 0],
    [0, 0, 0, 0],
    [0, 0, 2, 0, 0],
    [0, 0, 4, 4, 0, 0],
    [0, 0, 0, 2, 0, 0, 0],
    [0, 0, 0, 4, 4, 0, 0, 0],
    [0, 0, 0, 0, 3, 0, 0, 0, 0],
    [0, 0, 0, 0, 4, 4, 0, 0, 0, 0],
    [0, 0, 0, 0, 6, 18, 6, 0, 0, 0, 0],
    [0, 0, 0, 0, 4, 4, 0, 0, 0, 0],
    [0, 0, 0, 0, 3, 0, 0, 0, 0],
    [0, 0, 0, 4, 4, 0, 0, 0],
    [0, 0, 0, 2, 0, 0, 0],
    [0, 0, 4, 4, 0, 0],
    [0, 0, 2, 0, 0],
    [0, 0, 0, 0],
    [0, 1, 0],
    [0, 0],
    [1],
]


def run(capsys, argv):
    code = cli.main(argv)
    return code, capsys.readouterr().out


class TestDiamondCommand:
    def test_sym_text(self, capsys):
        code, out = run(capsys, ["diamond", "sym", "--g", "4", "--n", "2"])
        assert code == 0
        rows = [line.split() for line in out.strip().splitlines()]
        assert rows == [["1"], ["4", "4"], ["6", "17", "6"], ["4", "4"], ["1"]]

    def test_fano_odd_text_matches_reference_diamond(self, capsys):
        code, out = run(capsys, ["diamond", "fano-odd", "--g", "4", "--k", "1"])
        assert code == 0
        rows = [[int(v) for v in line.split()] for line in out.strip().splitlines()]
        assert rows == G4K1_TEXT_ROWS

    def test_fano_even_json(self, capsys):
        code, out = run(
            capsys, ["diamond", "fano-even", "--g", "2", "--k", "0", "--format", "json"]
        )
        assert code == 0
        obj = json.loads(out)
        assert obj == {"dimension": 2, "hodge": [[1, 0, 0], [0, 6, 0], [0, 0, 1]]}

    def test_jac_json(self, capsys):
        code, out = run(capsys, ["diamond", "jac", "--g", "1", "--format", "json"])
        assert code == 0
        assert json.loads(out) == {"dimension": 1, "hodge": [[1, 1], [1, 1]]}

    def test_missing_flag_is_usage_error(self, capsys):
        assert cli.main(["diamond", "sym", "--g", "4"]) == 2

    def test_extra_flag_is_usage_error(self, capsys):
        assert cli.main(["diamond", "jac", "--g", "2", "--k", "1"]) == 2


class TestVerifyCommand:
    def test_odd_json(self, capsys):
        code, out = run(
            capsys, ["verify", "odd", "--g", "4", "--k", "1", "--format", "json"]
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["status"] == "verified"
        assert obj["identity"] == "hyperelliptic-decomposition"
        assert obj["params"] == {"g": 4, "k": 1}
        assert obj["lhs"] == obj["rhs"]
        assert [entry[0] for entry in obj["effectivity"]] == [0, 1, 2]

    def test_json_round_trip_is_byte_identical(self, capsys):
        _, out = run(
            capsys, ["verify", "odd", "--g", "3", "--k", "1", "--format", "json"]
        )
        assert cli.canonical_json(json.loads(out)) == out

    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "even", "--g", "3", "--k", "1"],
            ["verify", "k0", "--g", "4"],
            ["verify", "bgmn", "--g", "5"],
            ["verify", "hochschild", "--g", "3", "--k", "0"],
        ],
    )
    def test_targets_pass(self, capsys, argv):
        code, out = run(capsys, argv)
        assert code == 0
        assert out.startswith("PASS")

    def test_domain_error_is_usage_error(self, capsys):
        assert cli.main(["verify", "odd", "--g", "1", "--k", "0"]) == 2

    def test_k_rejected_for_k0_target(self, capsys):
        assert cli.main(["verify", "k0", "--g", "3", "--k", "1"]) == 2


class TestIdentityCommand:
    def test_gessel(self, capsys):
        code, out = run(
            capsys, ["identity", "gessel", "--max-m", "6", "--max-a", "6", "--format", "json"]
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["status"] == "verified"
        assert obj["observations"]["failures"] == []
        assert obj["observations"]["instances"] == 7 * 4

    def test_chu_vandermonde(self, capsys):
        code, out = run(capsys, ["identity", "chu-vandermonde", "--max-n", "8"])
        assert code == 0
        assert out.startswith("PASS")


class TestSweepCommand:
    ARGS = [
        "--max-g", "4", "--max-g-even", "4",
        "--max-m", "4", "--max-a", "4", "--max-n", "5",
    ]

    def test_small_sweep_passes(self, capsys):
        code, out = run(capsys, ["sweep", *self.ARGS, "--format", "json"])
        assert code == 0
        obj = json.loads(out)
        assert obj["summary"]["failed"] == 0
        assert obj["summary"]["total"] == obj["summary"]["verified"] == 26

    def test_text_rows_sorted(self, capsys):
        code, out = run(capsys, ["sweep", *self.ARGS])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[-1] == "verified 26/26"
        assert lines[:-1] == sorted(lines[:-1])

    def test_parallel_output_identical(self, capsys):
        _, serial = run(capsys, ["sweep", *self.ARGS, "--format", "json"])
        _, parallel = run(capsys, ["sweep", *self.ARGS, "--format", "json", "--jobs", "2"])
        serial_obj, parallel_obj = json.loads(serial), json.loads(parallel)
        for report in (*serial_obj["reports"], *parallel_obj["reports"]):
            report["elapsed_ms"] = 0
        assert serial_obj == parallel_obj

    def test_failure_forces_exit_code_one(self, capsys, monkeypatch):
        def broken(g, k):
            return VerificationReport(
                identity="hyperelliptic-decomposition",
                params={"g": g, "k": k},
                status="failed",
                lhs=None,
                rhs=None,
            )

        monkeypatch.setattr(cli, "verify_decomposition", broken)
        code, out = run(capsys, ["sweep", *self.ARGS])
        assert code == 1
        assert "FAIL hyperelliptic-decomposition" in out
        assert "verified 20/26" in out


class TestOutputFile:
    def test_atomic_output(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        code = cli.main(
            ["verify", "bgmn", "--g", "3", "--format", "json", "--output", str(target)]
        )
        assert code == 0
        assert capsys.readouterr().out == ""
        obj = json.loads(target.read_text())
        assert obj["status"] == "verified"
        leftovers = [p for p in tmp_path.iterdir() if p.name != "report.json"]
        assert leftovers == []
