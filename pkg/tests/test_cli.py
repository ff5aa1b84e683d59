import json

import pytest

from titeica.cli import RunConfig, classify, main, parse_config, run, scan_grid
from titeica.errors import InconclusiveError, UsageError
from titeica.surfaces import catalog


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


def test_classify_function_sphere():
    verdict = classify(catalog("sphere-origin", R=1.0))
    assert verdict.is_titeica
    assert abs(verdict.ratio_constant - 1.0) <= 1e-9
    assert verdict.spread <= 1e-9
    assert verdict.points_evaluated == 400


def test_classify_function_translated_sphere():
    verdict = classify(catalog("sphere-translated", R=1.0, c=2.0))
    assert not verdict.is_titeica
    assert verdict.spread > 0.1


def test_classify_withholds_verdict_when_grid_is_singular():
    with pytest.raises(InconclusiveError):
        classify(catalog("plane"))


def test_scan_grid_records_skip_reasons():
    records = scan_grid(catalog("plane"), grid=(3, 3))
    assert len(records) == 9
    assert all(r.skipped for r in records)
    assert all(r.ratio is None for r in records)


def test_cli_classify_json(tmp_path):
    out = tmp_path / "verdict.json"
    code = main([
        "classify", "--surface", "sphere-origin", "--param", "R=1",
        "--format", "json", "--output", str(out),
    ])
    assert code == 0
    report = read_json(out)
    assert report["command"] == "classify"
    assert report["summary"]["is_titeica"] is True
    assert abs(report["summary"]["ratio_constant"] - 1.0) <= 1e-9
    assert len(report["results"]) == 400
    first = report["results"][0]
    assert set(first) == {"x", "y", "K", "d", "ratio", "skipped"}


def test_cli_classify_inconclusive_exit_code():
    assert main(["classify", "--surface", "plane"]) == 1


def test_cli_unknown_surface_exit_code(capsys):
    assert main(["classify", "--surface", "nope"]) == 2
    assert "unknown surface" in capsys.readouterr().err


def test_cli_grid_validation():
    assert main(["classify", "--surface", "plane", "--grid", "1", "9"]) == 2


def test_cli_bad_param_syntax():
    assert main(["classify", "--surface", "sphere-origin", "--param", "R"]) == 2


def test_cli_transform_check_pass(tmp_path):
    out = tmp_path / "scale.json"
    code = main([
        "transform-check", "--surface", "titeica-xyz",
        "--matrix", "2,0,0,0,1,0,0,0,1", "--tol", "1e-8",
        "--format", "json", "--output", str(out),
    ])
    assert code == 0
    report = read_json(out)
    assert abs(report["summary"]["scale_factor"] - 0.25) <= 1e-15
    assert report["summary"]["passed"] is True


def test_cli_transform_check_fails_on_absurd_tolerance():
    code = main([
        "transform-check", "--surface", "paraboloid",
        "--matrix", "2,0,0,0,1,0,0,0,1", "--tol", "1e-300",
    ])
    assert code == 1


def test_cli_transform_check_rejects_bad_matrix(capsys):
    assert main([
        "transform-check", "--surface", "paraboloid", "--matrix", "1,2,3",
    ]) == 2
    assert main([
        "transform-check", "--surface", "paraboloid",
        "--matrix", "1,0,0,0,1,0,1,1,0",
    ]) == 2
    assert "matrix" in capsys.readouterr().err


def test_cli_metric_check_chain():
    assert main(["metric-check", "--pair", "pseudosphere:half-plane", "--tol", "1e-9"]) == 0
    assert main(["metric-check", "--pair", "half-plane:disk", "--tol", "1e-9"]) == 0


def test_cli_metric_check_disk_variants(tmp_path):
    out = tmp_path / "disk.json"
    code = main([
        "metric-check", "--pair", "disk:minkowski-sphere",
        "--format", "json", "--output", str(out),
    ])
    assert code == 0
    summary = read_json(out)["summary"]
    assert summary["matching_variant"] == "radius"
    assert summary["variants"]["radius"]["passed"] is True
    assert summary["variants"]["squared-radius"]["passed"] is False


def test_cli_metric_check_unknown_pair():
    assert main(["metric-check", "--pair", "a:b"]) == 2


def test_cli_catalog_lists_everything(capsys):
    assert main(["catalog"]) == 0
    text = capsys.readouterr().out
    for name in ("sphere-origin", "titeica-xyz", "minkowski-sphere", "half-plane", "disk:minkowski-sphere"):
        assert name in text


def test_cli_invariants_csv(tmp_path):
    out = tmp_path / "table.csv"
    code = main([
        "invariants", "--surface", "paraboloid", "--grid", "4", "3",
        "--format", "csv", "--output", str(out),
    ])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "x,y,K,d,ratio,skipped"
    assert len(lines) == 13


def test_reports_are_byte_deterministic(tmp_path):
    argv = [
        "classify", "--surface", "titeica-xyz", "--format", "json",
        "--output", str(tmp_path / "r.json"),
    ]
    assert main(argv) == 0
    first = (tmp_path / "r.json").read_bytes()
    assert main(argv) == 0
    assert (tmp_path / "r.json").read_bytes() == first

    argv_csv = [
        "invariants", "--surface", "pseudosphere", "--format", "csv",
        "--output", str(tmp_path / "r.csv"),
    ]
    assert main(argv_csv) == 0
    first_csv = (tmp_path / "r.csv").read_bytes()
    assert main(argv_csv) == 0
    assert (tmp_path / "r.csv").read_bytes() == first_csv


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({
        "command": "classify",
        "surface": "sphere-origin",
        "params": {"R": 2.0},
        "grid": [6, 6],
        "format": "json",
    }))
    out = tmp_path / "out.json"
    code = main(["--config", str(cfg), "--output", str(out)])
    assert code == 0
    report = read_json(out)
    assert report["config"]["params"] == {"R": 2.0}
    assert report["config"]["grid"] == [6, 6]
    assert abs(report["summary"]["ratio_constant"] - 1.0 / 64.0) <= 1e-9

    # flags override file values
    code = main(["classify", "--config", str(cfg), "--param", "R=1", "--output", str(out)])
    assert code == 0
    report = read_json(out)
    assert abs(report["summary"]["ratio_constant"] - 1.0) <= 1e-9


def test_config_file_unknown_field(tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"command": "catalog", "gridd": [3, 3]}))
    assert main(["--config", str(cfg)]) == 2


def test_unwritable_output_path(capsys):
    code = main([
        "classify", "--surface", "sphere-origin",
        "--output", "/nonexistent-dir/report.json",
    ])
    assert code == 2
    assert "cannot write report" in capsys.readouterr().err


def test_run_validates_config():
    assert run(RunConfig(command="bogus")) == 2
    assert run(RunConfig(command="classify")) == 2  # missing surface
    assert run(RunConfig(command="classify", surface="plane", tolerance=-1.0)) == 2
    assert run(RunConfig(command="metric-check")) == 2
    assert run(RunConfig(command="transform-check", surface="plane")) == 2


def test_parse_config_requires_command():
    with pytest.raises(UsageError):
        parse_config([])


def test_cli_help_exits_zero():
    assert main(["--help"]) == 0
