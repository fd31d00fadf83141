"""Acceptance suite: every criterion at its stated tolerance (exact).

Each test prints one [PASS]/[FAIL] line; run with `pytest -s` to see them.
Criteria 1-8 reproduce the reference-array corpus; 9-12 are property suites.
"""

import itertools
import json
import random
import time
from contextlib import contextmanager
from pathlib import Path

from coarraylab import (
    IesSpec,
    analyze,
    difference_coarray,
    format_ies,
    holes,
    ies_from_gaps,
    ies_to_positions,
    indicator_autocorrelation,
    parse_array,
    parse_ies,
    weight_function,
)
from coarraylab.cli import main as cli_main

from reference import (
    naive_dca,
    naive_holes,
    naive_weight,
    random_ies_terms,
    random_positions,
)

GOLDEN_DIR = Path(__file__).parent / "golden"


@contextmanager
def criterion(number, description):
    try:
        yield
    except Exception:
        print(f"[FAIL] criterion {number}: {description}")
        raise
    print(f"[PASS] criterion {number}: {description}")


def test_criterion_01_mra4_contiguous_dca():
    with criterion(1, "[0,1,4,6] hole-free with DCA exactly -6..6"):
        result = analyze([0, 1, 4, 6])
        assert result.hole_free is True
        assert result.dca == tuple(range(-6, 7))


def test_criterion_02_hole_at_three():
    with criterion(2, "[0,1,2,6] holes exactly {-3, 3}"):
        assert analyze([0, 1, 2, 6]).holes == (-3, 3)


def test_criterion_03_coprime_holes_at_eight():
    with criterion(3, "[0,2,3,4,6,9] holes exactly {-8, 8}"):
        assert analyze([0, 2, 3, 4, 6, 9]).holes == (-8, 8)


def test_criterion_04_odnra_nonredundant():
    with criterion(4, "[0,4,6,7,15,20] has holes and unit weights off zero"):
        result = analyze([0, 4, 6, 7, 15, 20])
        assert result.hole_free is False
        assert len([h for h in result.holes if h > 0]) >= 2
        for lag in result.dca:
            if lag != 0:
                assert result.weight_function.weight(lag) == 1


def test_criterion_05_z6_aperture():
    with criterion(5, "z6 aperture is 38 = 5N - 12"):
        result = analyze([-7, -4, 0, 5, 10, 15, 20, 25, 28, 31])
        n = result.source.count
        assert result.aperture == 38
        assert result.aperture == 5 * n - 12


def test_criterion_06_alternate_grid_odd_holes():
    with criterion(6, "ies '2^7': odd holes up to 13, w(1) = w(3) = 0"):
        result = analyze(parse_array("2^7", "ies"))
        expected = sorted({m for m in range(-13, 14) if m % 2 != 0})
        assert list(result.holes) == expected
        assert result.weight_function.weight(1) == 0
        assert result.weight_function.weight(3) == 0


def test_criterion_07_augmented_hole_free():
    with criterion(7, "ies '1,1,2^6' is hole-free"):
        assert analyze(parse_array("1,1,2^6", "ies")).hole_free is True


def test_criterion_08_ula_triangular_weights():
    with criterion(8, "ies 'ones(1,14)': hole-free with w(m) = 15 - |m|"):
        result = analyze(parse_array("ones(1,14)", "ies"))
        assert result.hole_free is True
        for m in range(-14, 15):
            assert result.weight_function.weight(m) == 15 - abs(m)


def test_criterion_09_random_property_suite():
    with criterion(9, "1000 random arrays: symmetry, mass, invariance, dual path"):
        rng = random.Random(202608)
        for _ in range(1000):
            positions = random_positions(rng, max_sensors=30, max_aperture=200)
            n = len(positions)
            result = analyze(positions)
            wf = result.weight_function

            assert wf.weight(0) == n
            assert sum(w for _, w in wf.pairs()) == n * n
            for lag, w in wf.pairs():
                assert w == wf.weight(-lag)

            shift = rng.randint(-300, 300)
            translated = analyze([p + shift for p in positions])
            mirrored = analyze([-p for p in positions])
            assert translated.normalized == result.normalized
            for other in (translated, mirrored):
                assert other.dca == result.dca
                assert other.holes == result.holes
                assert other.hole_free == result.hole_free
                assert other.primary_weights == result.primary_weights
                assert [w for _, w in other.weight_function.pairs()] == [
                    w for _, w in wf.pairs()
                ]

            autocorr = indicator_autocorrelation(positions)
            for m in range(result.aperture + 1):
                assert int(autocorr[m]) == wf.weight(m)
            assert result.primary_weights == (
                wf.weight(1), wf.weight(2), wf.weight(3),
            )


def test_criterion_10_exhaustive_oracle():
    with criterion(10, "exhaustive N<=6 subsets of {0..12} match naive reference"):
        start = time.monotonic()
        checked = 0
        for n in range(2, 7):
            for rest in itertools.combinations(range(1, 13), n - 1):
                positions = [0, *rest]
                assert difference_coarray(positions) == naive_dca(positions)
                assert holes(positions) == naive_holes(positions)
                wf = weight_function(positions)
                aperture = positions[-1]
                for m in range(-aperture, aperture + 1):
                    assert wf.weight(m) == naive_weight(positions, m)
                checked += 1
        elapsed = time.monotonic() - start
        assert checked == sum(
            len(list(itertools.combinations(range(1, 13), k))) for k in range(1, 6)
        )
        assert elapsed < 10.0, f"exhaustive sweep took {elapsed:.1f}s"


def test_criterion_11_ies_round_trip():
    with criterion(11, "500 random IES specs survive render/parse/expand/re-derive"):
        rng = random.Random(5150)
        for _ in range(500):
            spec = IesSpec(tuple(random_ies_terms(rng)))
            rendered = format_ies(spec)
            parsed = parse_ies(rendered)
            assert parsed == spec
            expanded = ies_to_positions(parsed)
            assert ies_from_gaps(expanded) == spec
            assert ies_to_positions(ies_from_gaps(expanded)) == expanded


def test_criterion_12_cli_determinism_golden(capsys, tmp_path):
    with criterion(12, "CLI JSON/SVG byte-identical across runs and golden files"):
        for entry_id in ("mra-4", "alt-8"):
            runs = []
            for _ in range(2):
                code = cli_main(["analyze", "--catalog", entry_id, "--json"])
                assert code == 0
                runs.append(capsys.readouterr().out)
            assert runs[0] == runs[1]
            golden_json = (GOLDEN_DIR / f"{entry_id}.json").read_text()
            assert runs[0] == golden_json

            svg_paths = [tmp_path / f"{entry_id}-{i}.svg" for i in range(2)]
            for path in svg_paths:
                code = cli_main(
                    ["analyze", "--catalog", entry_id, "--svg", str(path)]
                )
                assert code == 0
                capsys.readouterr()
            first, second = (p.read_bytes() for p in svg_paths)
            assert first == second
            golden_svg = (GOLDEN_DIR / f"{entry_id}.svg").read_bytes()
            assert first == golden_svg
