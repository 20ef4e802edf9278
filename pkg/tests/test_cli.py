"""
tests/test_cli.py
End-to-end runs of the command line through main(argv).
"""

import json
import time

import pytest

from src.cli import main
from src.spectrum import unitary_cyclic_spectrum

# 2 * 3^2 * 7 * 11 * 31 * 151 * 331, just under the integer cap
LARGE_N = 2147483646


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestSpectrumCommand:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--group", "cyclic:12", "--connection", "unitary", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == 12
        assert doc["degree"] == 4
        assert [p["multiplicity"] for p in doc["pairs"]] == [1, 2, 6, 2, 1]

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--group", "cyclic:5", "--connection", "unitary", "--format", "csv")
        assert code == 0
        assert out.splitlines() == ["value,multiplicity,exact", "4,1,True", "-1,4,True"]

    def test_exact_unavailable(self, capsys):
        code, _, err = run(capsys, "spectrum", "--group", "dihedral:5", "--connection", "explicit:r1,r4", "--exact")
        assert code == 4
        assert err.startswith("Error:")

    def test_degenerate_unitary_rejected(self, capsys):
        code, _, err = run(capsys, "spectrum", "--group", "cyclic:1", "--connection", "unitary")
        assert code == 2
        assert err.startswith("Error:")

    def test_large_unitary_cyclic_uses_divisors(self, capsys):
        start = time.perf_counter()
        code, out, _ = run(
            capsys, "spectrum", "--group", f"cyclic:{LARGE_N}", "--connection", "unitary", "--format", "json"
        )
        assert time.perf_counter() - start < 10
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == LARGE_N
        assert doc["degree"] == unitary_cyclic_spectrum(LARGE_N).degree

    def test_unitary_keyword_is_case_insensitive(self, capsys):
        code, out, _ = run(capsys, "spectrum", "--group", "cyclic:12", "--connection", " Unitary ", "--format", "json")
        assert code == 0
        assert json.loads(out) == unitary_cyclic_spectrum(12).to_dict()


class TestNullityCommand:
    def test_verified(self, capsys):
        code, out, err = run(
            capsys, "nullity", "--group", "cyclic:12", "--connection", "unitary", "--verify", "--format", "json"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["claimed"] == 6
        assert doc["oracle_max_multiplicity"] == 6
        assert doc["consistent"] is True
        assert doc["mr_upper"] == 6
        assert "Auditing" in err

    def test_per_divisor_json(self, capsys):
        code, out, _ = run(
            capsys, "nullity", "--group", "cyclic:12", "--connection", "unitary", "--per-divisor", "--format", "json"
        )
        assert code == 0
        assert len(json.loads(out)["per_divisor"]) == 6

    def test_per_divisor_csv_is_one_table(self, capsys):
        code, out, _ = run(
            capsys, "nullity", "--group", "cyclic:12", "--connection", "unitary", "--per-divisor", "--format", "csv"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 7
        assert lines[0] == (
            "order,claimed,oracle_max_multiplicity,consistent,effective_bound,mr_upper,kind,"
            "divisor,eigenvalue,multiplicity,pooled,bound"
        )
        assert all(line.startswith("12,6,") for line in lines[1:])
        assert all(len(line.split(",")) == 12 for line in lines[1:])

    def test_per_divisor_save_matches_output(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setattr("src.config.REPORTS_DIR", str(tmp_path))
        code, out, _ = run(
            capsys, "nullity", "--group", "cyclic:12", "--connection", "unitary",
            "--per-divisor", "--format", "csv", "--save",
        )
        assert code == 0
        (saved,) = tmp_path.glob("nullity_*.csv")
        assert saved.read_text().strip().splitlines() == out.strip().splitlines()

    def test_product_table(self, capsys):
        code, out, _ = run(
            capsys, "nullity", "--group", "cyclic:5 x dihedral:5", "--connection", "unitary ; explicit:r1,r2,r3,r4"
        )
        assert code == 0
        assert "product-claim" in out
        assert "32" in out

    def test_square_free(self, capsys):
        code, out, _ = run(capsys, "nullity", "--group", "cyclic:6", "--connection", "unitary", "--format", "json")
        assert code == 0
        assert json.loads(out)["effective_bound"] == 2

    def test_large_unitary_cyclic_uses_divisors(self, capsys):
        start = time.perf_counter()
        code, out, _ = run(
            capsys, "nullity", "--group", f"cyclic:{LARGE_N}", "--connection", "unitary", "--format", "json"
        )
        assert time.perf_counter() - start < 10
        assert code == 0
        assert json.loads(out)["order"] == LARGE_N

    def test_verify_refuses_large_group_before_building_set(self, capsys):
        start = time.perf_counter()
        code, _, err = run(capsys, "nullity", "--group", f"cyclic:{LARGE_N}", "--connection", "unitary", "--verify")
        assert time.perf_counter() - start < 10
        assert code == 4
        assert "cap" in err


class TestVerifyCommand:
    def test_match(self, capsys):
        code, out, err = run(
            capsys, "verify", "--group", "cyclic:3 x dihedral:5", "--connection", "explicit:1,2 ; explicit:r1,r4",
            "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["matched"] is True
        assert "matched" in err

    def test_closed_file_mismatch(self, capsys, tmp_path):
        doc = unitary_cyclic_spectrum(12).to_dict()
        doc["pairs"][2]["multiplicity"] = 5
        doc["pairs"].insert(3, {"value": -1, "multiplicity": 1, "exact": True})
        path = tmp_path / "closed.json"
        path.write_text(json.dumps(doc))
        code, out, err = run(
            capsys, "verify", "--group", "cyclic:12", "--connection", "unitary", "--closed", str(path), "--format", "json"
        )
        assert code == 3
        assert json.loads(out)["matched"] is False
        assert "MISMATCH" in err

    def test_closed_file_missing(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "verify", "--group", "cyclic:12", "--connection", "unitary", "--closed", str(tmp_path / "none.json")
        )
        assert code == 2
        assert "cannot read" in err

    @pytest.mark.parametrize("pair", [
        {"value": "x", "multiplicity": 1, "exact": False},
        {"value": 2.7, "multiplicity": 1.5, "exact": False},
        {"value": 1.5, "multiplicity": 1, "exact": True},
        {"value": 0, "multiplicity": 0, "exact": True},
    ])
    def test_closed_file_malformed_pair(self, capsys, tmp_path, pair):
        doc = unitary_cyclic_spectrum(12).to_dict()
        doc["pairs"].append(pair)
        path = tmp_path / "closed.json"
        path.write_text(json.dumps(doc))
        code, out, err = run(capsys, "verify", "--group", "cyclic:12", "--connection", "unitary", "--closed", str(path))
        assert code == 2
        assert out == ""
        assert err.startswith("Error:")

    def test_too_large(self, capsys):
        code, _, _ = run(capsys, "verify", "--group", "cyclic:50", "--connection", "unitary", "--max-order", "20")
        assert code == 4


class TestRamanujanCommand:
    def test_json(self, capsys):
        code, out, _ = run(capsys, "ramanujan", "6", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["n"] == 6
        assert [r["hoelder"] for r in doc["rows"]] == [2, 1, -1, -2, -1, 1]

    def test_direct_csv(self, capsys):
        code, out, _ = run(capsys, "ramanujan", "5", "--direct", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "r,hoelder,direct"
        assert len(lines) == 6

    def test_one(self, capsys):
        code, out, _ = run(capsys, "ramanujan", "1", "--format", "json")
        assert code == 0
        assert json.loads(out)["rows"] == [{"r": 0, "hoelder": 1}]

    def test_save_writes_report(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setattr("src.config.REPORTS_DIR", str(tmp_path))
        code, _, err = run(capsys, "ramanujan", "4", "--save")
        assert code == 0
        assert "Saved ramanujan report" in err
        assert len(list(tmp_path.glob("ramanujan_*.csv"))) == 1


class TestChartableCommand:
    def test_dihedral(self, capsys):
        code, out, _ = run(capsys, "chartable", "--group", "dihedral:5", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["order"] == 10
        assert [c["degree"] for c in doc["characters"]] == [2, 2, 1, 1]

    @pytest.mark.parametrize("group, degrees", [("cyclic:4", [1, 1, 1, 1]), ("cyclic:2 x cyclic:2", [1, 1, 1, 1])])
    def test_cyclic(self, capsys, group, degrees):
        code, out, _ = run(capsys, "chartable", "--group", group, "--format", "json")
        assert code == 0
        assert [c["degree"] for c in json.loads(out)["characters"]] == degrees

    def test_even_dihedral_unsupported(self, capsys):
        code, _, _ = run(capsys, "chartable", "--group", "dihedral:6")
        assert code == 4


class TestArguments:
    def test_bad_grammar(self, capsys):
        code, out, err = run(capsys, "spectrum", "--group", "klein:4", "--connection", "unitary")
        assert code == 2
        assert out == ""
        assert "klein:4" in err

    def test_not_inverse_closed(self, capsys):
        code, _, err = run(capsys, "spectrum", "--group", "cyclic:8", "--connection", "explicit:1")
        assert code == 2
        assert "inverse" in err

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
