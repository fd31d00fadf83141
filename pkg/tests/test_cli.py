import json
import subprocess
import sys

import pytest

from coarraylab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyzeCommand:
    def test_holey_array_text(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--positions", "0,1,2,6")
        assert code == 0
        assert "Coarray has holes" in out
        assert "-3, 3" in out

    def test_hole_free_text(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--positions", "0,1,4,6")
        assert code == 0
        assert "Coarray is hole-free" in out

    def test_exit_zero_despite_holes(self, capsys):
        code, _, _ = run_cli(capsys, "analyze", "--ies", "2^7")
        assert code == 0

    def test_json_to_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--ies", "2^7", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema_version"] == 1
        assert doc["hole_free"] is False
        assert len(doc["holes"]) == 14
        assert sorted(abs(h) for h in doc["holes"])[::2] == [1, 3, 5, 7, 9, 11, 13]

    def test_json_round_trip(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--positions", "0,2,3,4,6,9", "--json")
        doc = json.loads(out)
        assert doc["source_positions"] == [0, 2, 3, 4, 6, 9]
        assert doc["normalized_positions"] == [0, 2, 3, 4, 6, 9]
        assert doc["sensor_count"] == 6
        assert doc["aperture"] == 9
        assert doc["holes"] == [-8, 8]
        assert doc["status"] == "Coarray has holes"
        assert doc["primary_weights"] == [2, 3, 3]
        pairs = doc["weight_function"]
        assert [p["lag"] for p in pairs] == list(range(-9, 10))
        assert sum(p["weight"] for p in pairs) == 36

    def test_single_sensor(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--positions", "0")
        assert code == 0
        assert "Coarray is hole-free" in out
        assert "Aperture" in out

    def test_json_and_svg_files(self, capsys, tmp_path):
        json_path = tmp_path / "out.json"
        svg_path = tmp_path / "plot.svg"
        code, out, _ = run_cli(
            capsys, "analyze", "--catalog", "mra-4",
            "--json", str(json_path), "--svg", str(svg_path),
        )
        assert code == 0
        assert "Coarray is hole-free" in out  # table still printed
        doc = json.loads(json_path.read_text())
        assert doc["aperture"] == 6
        svg = svg_path.read_text()
        assert svg.startswith("<svg")
        assert svg.count('class="stem"') == 13

    def test_parse_error_exit_one(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--positions", "abc")
        assert code == 1
        assert "unrecognized token" in err
        assert "offset 0" in err

    def test_unknown_catalog_exit_one(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--catalog", "nosuch")
        assert code == 1
        assert "nosuch" in err

    def test_io_failure_exit_two(self, capsys, tmp_path):
        target = tmp_path / "missing" / "out.svg"
        code, _, err = run_cli(
            capsys, "analyze", "--positions", "0,1", "--svg", str(target)
        )
        assert code == 2
        assert "io error" in err


class TestCompareCommand:
    def test_catalog_vs_catalog(self, capsys):
        code, out, _ = run_cli(
            capsys, "compare", "--a-catalog", "mra-4", "--b-catalog", "holey-4"
        )
        assert code == 0
        assert "hole set symm diff: -3, 3" in out

    def test_identical_inputs_zero_deltas(self, capsys):
        code, out, _ = run_cli(
            capsys, "compare",
            "--a-positions", "0,1,4,6", "--b-positions", "0,1,4,6",
        )
        assert code == 0
        assert "aperture          : 0" in out
        assert "hole set symm diff: (none)" in out

    def test_ula_vs_augmented_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "compare",
            "--a-catalog", "ula-15", "--b-ies", "1,1,2^6", "--json",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["a"]["hole_free"] and doc["b"]["hole_free"]
        assert doc["a"]["aperture"] == doc["b"]["aperture"] == 14
        assert doc["a"]["primary_weights"] == [14, 13, 12]
        assert doc["b"]["primary_weights"] == [2, 7, 1]
        assert doc["deltas"]["primary_weights"] == [12, 6, 11]
        assert doc["deltas"]["aperture"] == 0

    def test_bad_side_exit_one(self, capsys):
        code, _, err = run_cli(
            capsys, "compare", "--a-positions", "zz", "--b-positions", "0,1"
        )
        assert code == 1
        assert "unrecognized token" in err


class TestCatalogCommand:
    def test_list_has_all_entries(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "list")
        assert code == 0
        lines = [line for line in out.splitlines() if line.strip()]
        assert len(lines) >= 10
        assert any(line.startswith("mra-4") for line in lines)

    def test_show_z6_aperture(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "show", "z6-n10")
        assert code == 0
        assert "Aperture A" in out
        assert ": 38" in out
        assert "[PAPER]" in out

    def test_show_unknown_exit_one(self, capsys):
        code, _, err = run_cli(capsys, "catalog", "show", "nosuch")
        assert code == 1
        assert "nosuch" in err


class TestDeterminism:
    @pytest.mark.parametrize("entry_id", ["mra-4", "alt-8", "z6-n10"])
    def test_repeated_runs_byte_identical(self, capsys, entry_id):
        _, first_json, _ = run_cli(capsys, "analyze", "--catalog", entry_id, "--json")
        _, second_json, _ = run_cli(capsys, "analyze", "--catalog", entry_id, "--json")
        assert first_json == second_json

    def test_svg_byte_identical(self, capsys, tmp_path):
        paths = [tmp_path / "a.svg", tmp_path / "b.svg"]
        for path in paths:
            run_cli(capsys, "analyze", "--catalog", "alt-8", "--svg", str(path))
        assert paths[0].read_bytes() == paths[1].read_bytes()


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "coarraylab.cli", "analyze", "--positions", "0,1,2,6"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert "Coarray has holes" in result.stdout
