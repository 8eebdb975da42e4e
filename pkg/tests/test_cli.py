"""
Tests for the command-line interface and the run_* API
"""

import argparse
import json

import pytest

from stabverify import __version__
from stabverify.api import (
    parse_genera,
    resolve_m_range,
    run_scan,
    run_verify_nilpotent,
    run_verify_semisimple,
)
from stabverify.catalog import CATALOG_ENV, clear_catalog_cache, load_catalog
from stabverify.cli import RunManifest, build_parser, main, parse_m_range, render_scan
from stabverify.scan import ScanOptions, ScanResult, ScanStratum
from stabverify.torus import check_stratum


@pytest.fixture(autouse=True)
def packaged_catalogs(monkeypatch):
    monkeypatch.delenv(CATALOG_ENV, raising=False)
    clear_catalog_cache()
    yield
    clear_catalog_cache()


def run_json(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, json.loads(out), out


class TestArguments:
    """Parsing of genera, m ranges and manifests"""

    def test_parse_genera(self):
        """Test all, single and list forms."""
        assert parse_genera("all") == [7, 8, 9, 10]
        assert parse_genera("9,7,9") == [7, 9]
        with pytest.raises(ValueError):
            parse_genera("11")

    def test_parse_m_range(self):
        """Test LO:HI parsing."""
        assert parse_m_range("3:12") == (3, 12)
        with pytest.raises(argparse.ArgumentTypeError):
            parse_m_range("12:3")

    def test_manifest_validation(self):
        """Test that a manifest rejects impossible settings."""
        with pytest.raises(ValueError):
            RunManifest(command="scan", genera=[6])
        with pytest.raises(ValueError):
            RunManifest(command="scan", genera=[8], depth=-1)

    def test_manifest_drops_output(self):
        """Test that the output path is not part of the report."""
        data = RunManifest(command="scan", genera=[8], output="x.json").to_dict()
        assert "output" not in data
        assert data["version"] == __version__

    def test_subcommands(self):
        """Test that the parser knows both verify kinds and scan."""
        parser = build_parser()
        args = parser.parse_args(["verify", "nilpotent", "--genus", "8", "--no-matrices"])
        assert (args.command, args.kind, args.no_matrices) == ("verify", "nilpotent", True)
        args = parser.parse_args(["scan", "--depth", "1", "--cap", "50"])
        assert (args.depth, args.cap) == (1, 50)


def test_verify_nilpotent_json(capsys):
    """Test the JSON document of a nilpotent run."""
    code, data, _ = run_json(["verify", "nilpotent", "--genus", "8", "--no-matrices"], capsys)
    assert code == 0
    assert data["schema_version"] == 1
    assert data["command"] == "verify nilpotent"
    assert data["ok"] is True
    entry = data["genera"][0]
    assert entry["genus"] == 8
    assert entry["m_range"] == [3, 12]
    assert entry["equality"] == [{"case": "2^3", "m": 3}, {"case": "2^3", "m": 12}]
    assert entry["exceptional"] == []
    assert entry["cross_validation"]["ok"] is True


def test_verify_semisimple_json(capsys):
    """Test that the semisimple replay lists the catalogued exceptional cases."""
    code, data, _ = run_json(["verify", "semisimple", "--genus", "9"], capsys)
    assert code == 0
    entry = data["genera"][0]
    assert sorted(entry["exceptional"]) == ["gag9.1", "gag9.2"]
    assert entry["differences"] == []


def test_output_is_deterministic(tmp_path):
    """Test that two runs write byte-identical reports."""
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "semisimple", "--genus", "10"]
    assert main(args + ["-o", str(first)]) == 0
    assert main(args + ["-o", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_text_format(capsys):
    """Test the human readable report."""
    code = main(["verify", "nilpotent", "--genus", "10", "--no-matrices", "--format", "text"])
    out = capsys.readouterr().out
    assert code == 0
    assert "Genus 10: G2 on g2_adjoint" in out
    assert "status: OK" in out


def test_scan_command(capsys):
    """Test a shallow scan through the CLI."""
    code, data, _ = run_json(["scan", "--genus", "10", "--depth", "1"], capsys)
    assert code == 0
    assert data["manifest"]["depth"] == 1
    assert data["genera"][0]["complete"] is True


def test_scan_cap_fails(capsys):
    """Test that hitting the node cap gives exit code 1."""
    code, data, _ = run_json(["scan", "--genus", "10", "--depth", "2", "--cap", "1"], capsys)
    assert code == 1
    assert data["ok"] is False


def test_catalog_error_exit_code(tmp_path, capsys):
    """Test that an empty catalog directory gives exit code 2."""
    assert main(["verify", "semisimple", "--genus", "8", "--catalog", str(tmp_path)]) == 2
    assert capsys.readouterr().out == ""


def test_env_catalog_error_exit_code(tmp_path, monkeypatch):
    """Test that $STABVERIFY_CATALOG is honoured by the CLI."""
    monkeypatch.setenv(CATALOG_ENV, str(tmp_path))
    assert main(["verify", "nilpotent", "--genus", "10", "--no-matrices"]) == 2


def test_bad_genus_exit_code():
    """Test that an unsupported genus gives exit code 2."""
    assert main(["verify", "nilpotent", "--genus", "6"]) == 2


def test_bad_m_range_is_a_usage_error():
    """Test that argparse rejects a malformed range."""
    with pytest.raises(SystemExit) as info:
        main(["verify", "nilpotent", "--m-range", "nine"])
    assert info.value.code == 2


def test_unwritable_output(tmp_path):
    """Test that a write failure gives exit code 2."""
    target = tmp_path / "missing" / "report.json"
    assert main(["verify", "semisimple", "--genus", "10", "-o", str(target)]) == 2


def test_api_profiles():
    """Test that profiles are attached on request."""
    entry = run_verify_nilpotent([10], use_matrices=False, with_profiles=True)[0]
    assert all("profiles" in check for check in entry["checks"])
    entry = run_verify_semisimple([10], m_range=(2, 3))[0]
    assert all(len(s["checks"]) == 2 for s in entry["strata"])
    assert entry["ok"] is True


@pytest.mark.parametrize("args", [
    ["verify", "semisimple", "--genus", "10", "--m-range", "0:20"],
    ["verify", "nilpotent", "--genus", "10", "--no-matrices", "--m-range", "0:20"],
    ["scan", "--genus", "10", "--depth", "0", "--m-range", "2:15"],
])
def test_m_range_beyond_n_is_a_usage_error(args, capsys):
    """Test that HI > n gives exit code 2 and no report."""
    assert main(args) == 2
    assert capsys.readouterr().out == ""


def test_resolve_m_range():
    """Test the default range and the bounds check against n."""
    catalog = load_catalog(9)
    assert resolve_m_range(catalog) == (2, 12)
    assert resolve_m_range(catalog, (0, 14)) == (0, 14)
    with pytest.raises(ValueError):
        resolve_m_range(catalog, (3, 15))
    with pytest.raises(ValueError):
        resolve_m_range(catalog, (5, 4))


def test_verify_nilpotent_with_matrices(capsys):
    """Test the full cross-validation, matrix oracle included, for Sp6 and G2."""
    code, data, _ = run_json(["verify", "nilpotent", "--genus", "9,10"], capsys)
    assert code == 0
    for entry in data["genera"]:
        assert entry["cross_validation"] == {"ok": True, "matrices": True, "mismatches": []}
        assert entry["equality"] == []


def test_scan_text_marks_signature_matches_and_missed_cases(monkeypatch):
    """Test the text report of a scan with a signature-only stratum and an unreached case."""
    catalog = load_catalog(9)
    record = catalog.stratum("gag9.1")
    stratum = ScanStratum(
        id="g9.s1", key=(0,), substitution=record.substitution, partition=record.partition,
        class_dim=record.class_dim, depth=0,
        reports=check_stratum(catalog.config, record.substitution, "g9.s1", catalog.config.m_range))
    monkeypatch.setattr("stabverify.api.collapse_scan",
                        lambda genus, options, **kwargs: ScanResult(9, 0, 1, [stratum]))
    entries = run_scan([9], ScanOptions(depth=0))
    assert entries[0]["signature_matches"] == {"g9.s1": "gag9.1"}
    assert entries[0]["missed_exceptional"] == ["gag9.2"]
    text = render_scan(entries)
    assert "~gag9.1" in text
    assert "not reached: gag9.2" in text
    assert "status: FAIL" in text


def test_genera_is_a_list_in_genus_order(capsys):
    """Test that the report lists one object per genus, sorted by genus."""
    code, data, _ = run_json(["verify", "nilpotent", "--genus", "10,9", "--no-matrices"], capsys)
    assert code == 0
    assert isinstance(data["genera"], list)
    assert [entry["genus"] for entry in data["genera"]] == [9, 10]
