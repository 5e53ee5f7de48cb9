import json
import subprocess
import sys
from pathlib import Path

import pytest

from nonassoc.cli import main

DATA = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def exflex1_file(tmp_path, capsys):
    path = tmp_path / "exflex1.json"
    assert run(capsys, "fixture", "ExFlex1", "--export", path)[0] == 0
    return path


class TestExitCodes:
    def test_holds(self, capsys):
        code, out, _ = run(capsys, "check", DATA / "exflex1.json", "flexible")
        assert code == 0 and out.strip() == "Flexible: holds"

    def test_fails(self, capsys):
        code, out, _ = run(capsys, "check", DATA / "ex31ii.json", "flexible-idempotent",
                           "--at", "a")
        assert code == 1
        assert "fails" in out and "x = y" in out

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"field": "Q", "basis": ["a"], "products": {"0,0": ["1", "2"]}}')
        code, _, err = run(capsys, "validate", bad)
        assert code == 2 and 'products["0,0"]' in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "validate", tmp_path / "nope.json")[0] == 2

    def test_unknown_basis_name(self, capsys):
        code, _, err = run(capsys, "analyze", DATA / "exflex1.json", "a + q")
        assert code == 2 and "q" in err

    def test_unknown_identity(self, capsys):
        assert run(capsys, "check", DATA / "exflex1.json", "associative")[0] == 2

    def test_bad_usage(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2
        assert run(capsys, "axes", DATA / "exflex1.json")[0] == 2

    def test_help(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_precondition_is_a_failing_property(self, capsys):
        code, _, err = run(capsys, "classify-pair", DATA / "ex31ii.json", "a", "a + y + y' + z")
        assert code == 1 and err.startswith("NotFlexible")

    def test_enumerate_over_rationals(self, capsys):
        assert run(capsys, "axes", DATA / "exflex1.json", "--enumerate")[0] == 2

    def test_bad_fixture_parameter(self, capsys):
        code, _, err = run(capsys, "fixture", "ExFlex1", "--param", "lam=0")
        assert code == 2 and "lambda" in err


class TestCommands:
    def test_enumerate_single_axis(self, capsys):
        code, out, _ = run(capsys, "axes", DATA / "ex31i_gf7.json", "--enumerate", "--json")
        assert code == 0
        doc = json.loads(out)
        assert [a["element"] for a in doc["axes"]] == [["1", "0", "0"]]

    def test_classify_model2(self, capsys):
        code, out, _ = run(capsys, "classify-pair", DATA / "exflex2.json", "a", "b")
        assert code == 0
        assert out.splitlines() == ["Model2(2)", "  a -> a", "  b -> b", "  x -> x"]

    def test_analyze_names_spaces(self, capsys):
        code, out, _ = run(capsys, "analyze", DATA / "exflex1.json", "a")
        assert code == 0
        assert "A_2(L_a) = span{ a - b }" in out
        assert "axis of Jordan type (2,-1)" in out

    def test_analyze_non_idempotent(self, capsys):
        code, out, _ = run(capsys, "analyze", DATA / "exflex1.json", "a + b")
        assert code == 1 and "not idempotent" in out

    def test_decompose(self, capsys):
        code, out, _ = run(capsys, "decompose", DATA / "ex31ii.json", "a",
                           "a + x + y + y' + z", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["alpha"] == "1" and all(doc["checks"].values())

    def test_axes_single(self, capsys):
        code, out, _ = run(capsys, "axes", DATA / "m2.json", "e11")
        assert code == 1 and "not absolutely primitive" in out

    def test_fixtures_list(self, capsys):
        code, out, _ = run(capsys, "fixtures", "list", "--json")
        assert code == 0
        names = [f["name"] for f in json.loads(out)["fixtures"]]
        assert names == ["Ex31i", "Ex31ii", "ExFlex1", "ExFlex2", "MatrixAlgebra", "RemarkB",
                         "OrthogonalPair"]

    def test_fixture_over_prime_field(self, capsys):
        code, out, _ = run(capsys, "fixture", "Ex31i", "--field", "7", "--param", "delta=4",
                           "--json")
        doc = json.loads(out)
        assert code == 0 and doc["field"] == {"prime": 7} and doc["dim"] == 3

    def test_export_stdout(self, capsys):
        code, out, _ = run(capsys, "fixture", "ExFlex1", "--export", "-")
        assert code == 0 and json.loads(out)["basis"] == ["a", "b"]

    def test_characteristic_three_summary(self, capsys, tmp_path):
        path = tmp_path / "gf3.json"
        path.write_text(json.dumps({"field": {"prime": 3}, "basis": ["e"],
                                    "products": {"0,0": ["1"]}}))
        code, out, _ = run(capsys, "validate", path, "--json")
        ids = json.loads(out)["identities"]
        assert code == 0 and ids["power-associative"] is None and ids["flexible"] is True


class TestRoundTrip:
    def test_export_then_validate_matches(self, capsys, exflex1_file):
        _, direct, _ = run(capsys, "fixture", "ExFlex1", "--json")
        _, loaded, _ = run(capsys, "validate", exflex1_file, "--json")
        assert direct == loaded

    @pytest.mark.parametrize("name", ["Ex31i", "Ex31ii", "ExFlex2", "MatrixAlgebra",
                                      "RemarkB", "OrthogonalPair"])
    def test_every_fixture(self, capsys, tmp_path, name):
        path = tmp_path / f"{name}.json"
        _, direct, _ = run(capsys, "fixture", name, "--field", "7", "--export", path, "--json")
        _, loaded, _ = run(capsys, "validate", path, "--json")
        assert direct == loaded

    def test_analysis_matches_in_memory(self, capsys, exflex1_file):
        from nonassoc import QQ
        from nonassoc import fixtures as fx
        from nonassoc.axes import detect_axis

        f = fx.exflex1(QQ)
        expected = json.dumps(detect_axis(f.algebra, f["a"]).to_json(), indent=2)
        _, out, _ = run(capsys, "axes", exflex1_file, "a", "--json")
        assert out.strip() == expected

    def test_deterministic(self, capsys):
        outs = {run(capsys, "analyze", DATA / "exflex2.json", "a", "--json")[1]
                for _ in range(3)}
        assert len(outs) == 1

    def test_shipped_files_match_fixtures(self, capsys):
        for fname, argv in [("exflex1.json", ["ExFlex1"]), ("exflex2.json", ["ExFlex2"]),
                            ("ex31i_gf7.json", ["Ex31i", "--field", "7"]),
                            ("ex31ii.json", ["Ex31ii"]), ("m2.json", ["MatrixAlgebra"])]:
            _, out, _ = run(capsys, "fixture", *argv, "--export", "-")
            assert (DATA / fname).read_text() == out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nonassoc", "check", str(DATA / "exflex1.json"),
                           "commutative"], capture_output=True, text=True)
    assert proc.returncode == 1
    assert proc.stdout.startswith("Commutative: fails")
