"""Command-line driver and grid-level classification.

Commands
--------
catalog          list built-in surfaces, metrics and metric pairs
invariants       per-point K, d and K/d^4 table for a surface
classify         constant-ratio verdict for a surface over its grid
transform-check  scaling law under a centro-affine matrix
metric-check     pullback equality for a named metric pair

Reports are emitted as text, JSON or CSV.  File output is atomic (write
to a temporary file, then rename) and byte-deterministic for identical
configurations: the grid enumeration order is fixed and every float is
formatted with 17 significant digits.

Exit status: 0 on success or a passing check, 1 on a verification
failure or an inconclusive classification, 2 on configuration errors.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import tempfile
from dataclasses import dataclass, field
from typing import Optional

from .centroaffine import CentroAffineMap, verify_scaling
from .errors import (
    CatalogError,
    GeometryError,
    InconclusiveError,
    RegularityError,
    SignatureError,
    SingularPointError,
    UsageError,
)
from .invariants import point_invariants
from .metrics import check_pair, metric_entries, metric_pair, pair_names
from .surfaces import SurfaceDef, catalog, catalog_entries, eval_surface, grid_points

__all__ = ["PointRecord", "ClassifyVerdict", "RunConfig", "scan_grid", "classify", "run", "main"]

DEFAULT_GRID = (20, 20)
DEFAULT_TOL = 1e-8

# Spread is measured relative to the median ratio (floored to keep the
# zero-ratio case finite), so the verdict is invariant under uniform
# rescaling of the ratio.
REL_SPREAD_FLOOR = 1e-12


@dataclass(frozen=True)
class PointRecord:
    x: float
    y: float
    K: Optional[float] = None
    d: Optional[float] = None
    ratio: Optional[float] = None
    skipped: Optional[str] = None


@dataclass(frozen=True)
class ClassifyVerdict:
    surface: str
    is_titeica: bool
    ratio_constant: float
    spread: float
    points_evaluated: int
    points_skipped: int
    tolerance: float


def scan_grid(s: SurfaceDef, grid: tuple[int, int] = DEFAULT_GRID) -> list[PointRecord]:
    """Evaluate K, d and K/d^4 over the surface's domain grid, recording
    singular points as skipped with their reason."""
    nx, ny = grid
    records = []
    for x, y in grid_points(s.domain, nx, ny):
        try:
            inv = point_invariants(eval_surface(s, x, y), s.ambient)
        except (SingularPointError, RegularityError, SignatureError) as exc:
            records.append(PointRecord(x, y, skipped=str(exc)))
            continue
        records.append(PointRecord(x, y, K=inv.K, d=inv.d, ratio=inv.ratio))
    return records


def classify(
    s: SurfaceDef,
    grid: tuple[int, int] = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
) -> ClassifyVerdict:
    """Decide whether K/d^4 is constant over the grid.

    The verdict compares the relative spread around the median ratio with
    tol.  If more than 25% of the grid is singular the verdict is
    withheld via :class:`InconclusiveError`.
    """
    records = scan_grid(s, grid)
    return _verdict_from_records(s.name, records, grid, tol)


def _verdict_from_records(name, records, grid, tol) -> ClassifyVerdict:
    ratios = [r.ratio for r in records if r.skipped is None]
    total = grid[0] * grid[1]
    skipped = total - len(ratios)
    if skipped > 0.25 * total:
        raise InconclusiveError(
            f"{skipped}/{total} grid points of '{name}' were singular; verdict withheld"
        )
    median = statistics.median(ratios)
    spread = max(abs(r - median) for r in ratios) / max(REL_SPREAD_FLOOR, abs(median))
    return ClassifyVerdict(
        surface=name,
        is_titeica=spread <= tol,
        ratio_constant=median,
        spread=spread,
        points_evaluated=len(ratios),
        points_skipped=skipped,
        tolerance=tol,
    )


# --------------------------------------------------------------------------
# Run configuration


@dataclass
class RunConfig:
    command: str
    surface: Optional[str] = None
    params: dict = field(default_factory=dict)
    pair: Optional[str] = None
    grid: tuple[int, int] = DEFAULT_GRID
    matrix: Optional[tuple[float, ...]] = None
    tolerance: float = DEFAULT_TOL
    format: str = "text"
    output: Optional[str] = None

    def echo(self) -> dict:
        return {
            "command": self.command,
            "surface": self.surface,
            "params": dict(self.params),
            "pair": self.pair,
            "grid": list(self.grid),
            "matrix": list(self.matrix) if self.matrix is not None else None,
            "tolerance": self.tolerance,
            "format": self.format,
            "output": self.output,
        }


_COMMANDS = ("catalog", "invariants", "classify", "transform-check", "metric-check")


def _validate(config: RunConfig) -> None:
    if config.command not in _COMMANDS:
        raise UsageError(f"command: unknown command '{config.command}'")
    nx, ny = config.grid
    if nx < 2 or ny < 2:
        raise UsageError(f"grid: both axes need at least 2 points, got {nx} x {ny}")
    if config.tolerance <= 0.0:
        raise UsageError(f"tolerance: must be positive, got {config.tolerance}")
    if config.format not in ("text", "json", "csv"):
        raise UsageError(f"format: expected text, json or csv, got '{config.format}'")
    if config.command in ("invariants", "classify", "transform-check") and not config.surface:
        raise UsageError(f"surface: required for the {config.command} command")
    if config.command == "transform-check":
        if config.matrix is None:
            raise UsageError("matrix: required for the transform-check command")
        if len(config.matrix) != 9:
            raise UsageError(f"matrix: expected 9 row-major entries, got {len(config.matrix)}")
    if config.command == "metric-check" and not config.pair:
        raise UsageError("pair: required for the metric-check command")


# --------------------------------------------------------------------------
# Command handlers: each returns (exit_code, report dict)


def _cmd_catalog(config: RunConfig):
    results = []
    for name, description, defaults in catalog_entries():
        params = ", ".join(f"{k}={v:g}" for k, v in sorted(defaults.items())) or "-"
        results.append(
            {"kind": "surface", "name": name, "parameters": params, "description": description}
        )
    for name, description in metric_entries():
        results.append(
            {"kind": "metric", "name": name, "parameters": "-", "description": description}
        )
    for name in pair_names():
        results.append(
            {"kind": "metric-pair", "name": name, "parameters": "-", "description": "pullback equality check"}
        )
    summary = {"entries": len(results)}
    return 0, _report(config, results, summary)


def _surface_records(config: RunConfig):
    s = catalog(config.surface, **config.params)
    records = scan_grid(s, config.grid)
    rows = [
        {"x": r.x, "y": r.y, "K": r.K, "d": r.d, "ratio": r.ratio, "skipped": r.skipped}
        for r in records
    ]
    return s, records, rows


def _cmd_invariants(config: RunConfig):
    _, records, rows = _surface_records(config)
    evaluated = [r for r in records if r.skipped is None]
    summary = {
        "points_evaluated": len(evaluated),
        "points_skipped": len(records) - len(evaluated),
        "ratio_min": min((r.ratio for r in evaluated), default=None),
        "ratio_max": max((r.ratio for r in evaluated), default=None),
    }
    return 0, _report(config, rows, summary)


def _cmd_classify(config: RunConfig):
    s, records, rows = _surface_records(config)
    verdict = _verdict_from_records(s.name, records, config.grid, config.tolerance)
    summary = {
        "surface": verdict.surface,
        "is_titeica": verdict.is_titeica,
        "ratio_constant": verdict.ratio_constant,
        "spread": verdict.spread,
        "points_evaluated": verdict.points_evaluated,
        "points_skipped": verdict.points_skipped,
        "tolerance": verdict.tolerance,
    }
    return 0, _report(config, rows, summary)


def _cmd_transform_check(config: RunConfig):
    s = catalog(config.surface, **config.params)
    try:
        a = CentroAffineMap.of(config.matrix)
    except ValueError as exc:
        raise UsageError(f"matrix: {exc}") from exc
    nx, ny = config.grid
    report = verify_scaling(s, a, grid_points(s.domain, nx, ny), config.tolerance)
    rows = [
        {
            "x": p.x,
            "y": p.y,
            "ratio_before": p.ratio_before,
            "ratio_after": p.ratio_after,
            "ratio_residual": p.ratio_residual,
            "volume_residual": p.volume_residual,
            "numerator_residual": p.numerator_residual,
            "skipped": p.skipped,
        }
        for p in report.points
    ]
    summary = {
        "surface": report.surface,
        "det": report.det,
        "scale_factor": 1.0 / report.det**2,
        "max_ratio_residual": report.max_ratio_residual,
        "max_volume_residual": report.max_volume_residual,
        "max_numerator_residual": report.max_numerator_residual,
        "points_evaluated": report.n_evaluated,
        "points_skipped": report.n_skipped,
        "tolerance": report.tol,
        "passed": report.passed,
    }
    return (0 if report.passed else 1), _report(config, rows, summary)


def _cmd_metric_check(config: RunConfig):
    pair = metric_pair(config.pair)
    nx, ny = config.grid
    check = check_pair(pair, nx, ny, config.tolerance)
    rows = []
    for label, rep in check.variants:
        for p in rep.points:
            rows.append(
                {
                    "variant": label,
                    "x": p.x,
                    "y": p.y,
                    "diff_g11": p.diff_g11,
                    "diff_g12": p.diff_g12,
                    "diff_g22": p.diff_g22,
                }
            )
    summary = {
        "pair": check.pair,
        "variants": {label: {"max_diff": rep.max_diff, "passed": rep.passed} for label, rep in check.variants},
        "matching_variant": check.matching[0] if check.matching else None,
        "tolerance": check.tol,
        "passed": check.passed,
    }
    return (0 if check.passed else 1), _report(config, rows, summary)


def _report(config: RunConfig, results, summary) -> dict:
    return {
        "command": config.command,
        "config": config.echo(),
        "results": results,
        "summary": summary,
    }


_HANDLERS = {
    "catalog": _cmd_catalog,
    "invariants": _cmd_invariants,
    "classify": _cmd_classify,
    "transform-check": _cmd_transform_check,
    "metric-check": _cmd_metric_check,
}


# --------------------------------------------------------------------------
# Rendering


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".17g")
    return str(v)


def _json_text(value, indent: int = 0) -> str:
    # json.dumps formats floats with repr(); the report contract is 17
    # significant digits, so emit the document by hand.
    pad = "  " * indent
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        inner = ",\n".join(
            f"{pad}  {json.dumps(str(k))}: {_json_text(v, indent + 1)}" for k, v in value.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        inner = ",\n".join(f"{pad}  {_json_text(v, indent + 1)}" for v in value)
        return "[\n" + inner + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(value)!r}")


def _render_json(report: dict) -> str:
    return _json_text(report) + "\n"


def _render_csv(report: dict) -> str:
    rows = report["results"]
    if not rows:
        return ""
    columns = list(rows[0].keys())
    lines = [",".join(columns)]
    for row in rows:
        cells = []
        for c in columns:
            cell = _fmt(row.get(c))
            if "," in cell or '"' in cell:
                cell = '"' + cell.replace('"', '""') + '"'
            cells.append(cell)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    cfg = report["config"]
    for key in ("surface", "params", "pair", "grid", "matrix", "tolerance"):
        if cfg.get(key) not in (None, {}, []):
            lines.append(f"{key}: {cfg[key]}")
    rows = report["results"]
    if rows:
        columns = list(rows[0].keys())
        lines.append("")
        lines.append("  ".join(f"{c:>22}" for c in columns))
        for row in rows:
            lines.append("  ".join(f"{_fmt(row.get(c)):>22}" for c in columns))
    lines.append("")
    lines.append("summary:")

    def emit(key, value, depth):
        pad = "  " * depth
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for kk, vv in value.items():
                emit(kk, vv, depth + 1)
        else:
            lines.append(f"{pad}{key}: {_fmt(value)}")

    for k, v in report["summary"].items():
        emit(k, v, 1)
    return "\n".join(lines) + "\n"


_RENDERERS = {"text": _render_text, "json": _render_json, "csv": _render_csv}


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(output))
    tmp_path = None
    try:
        fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".titeica-", suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp_path, output)
    except OSError as exc:
        if tmp_path is not None and os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise UsageError(f"output: cannot write report to '{output}': {exc}") from exc


def run(config: RunConfig) -> int:
    """Execute one command and emit its report.  Returns the exit status."""
    try:
        _validate(config)
        exit_code, report = _HANDLERS[config.command](config)
        text = _RENDERERS[config.format](report)
        _emit(text, config.output)
        if config.output is not None:
            status = report["summary"].get("passed")
            print(f"wrote {config.format} report to {config.output}"
                  + ("" if status is None else f" ({'PASS' if status else 'FAIL'})"))
        return exit_code
    except (UsageError, CatalogError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return 1
    except GeometryError as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return 1


# --------------------------------------------------------------------------
# Argument parsing


def _parse_params(pairs) -> dict:
    params = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"param: expected KEY=VALUE, got '{item}'")
        try:
            params[key] = float(value)
        except ValueError as exc:
            raise UsageError(f"param: value of '{key}' is not a number: '{value}'") from exc
    return params


def _parse_matrix(text: str) -> tuple[float, ...]:
    try:
        entries = tuple(float(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError as exc:
        raise UsageError(f"matrix: could not parse '{text}'") from exc
    return entries


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help="JSON config file; flags override file values")
    common.add_argument("--grid", nargs=2, type=int, metavar=("NX", "NY"),
                        default=argparse.SUPPRESS, help="sample grid size (default 20 20)")
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help="tolerance (default 1e-8)")
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default=argparse.SUPPRESS, help="report format (default text)")
    common.add_argument("--output", default=argparse.SUPPRESS,
                        help="write the report to this path (atomic)")

    parser = argparse.ArgumentParser(
        prog="titeica",
        description="Surface invariant K/d^4: classification, scaling-law and metric checks.",
        parents=[common],
    )

    surface = argparse.ArgumentParser(add_help=False)
    surface.add_argument("--surface", default=argparse.SUPPRESS, help="catalog surface name")
    surface.add_argument("--param", action="append", default=argparse.SUPPRESS,
                         metavar="KEY=VALUE", help="surface parameter (repeatable)")

    sub = parser.add_subparsers(dest="command")
    sub.add_parser("catalog", parents=[common],
                   help="list built-in surfaces, metrics and metric pairs")
    sub.add_parser("invariants", parents=[common, surface],
                   help="per-point K, d, K/d^4 table for a surface")
    sub.add_parser("classify", parents=[common, surface],
                   help="constant-ratio verdict for a surface")
    tc = sub.add_parser("transform-check", parents=[common, surface],
                        help="verify the det^-2 scaling law under a matrix")
    tc.add_argument("--matrix", default=argparse.SUPPRESS,
                    help="9 row-major entries, comma separated")
    mc = sub.add_parser("metric-check", parents=[common],
                        help="pullback equality for a metric pair")
    mc.add_argument("--pair", default=argparse.SUPPRESS,
                    help=f"one of: {', '.join(pair_names())}")
    return parser


_CONFIG_KEYS = {
    "command", "surface", "params", "pair", "grid", "matrix", "tolerance", "format", "output",
}


def _load_config_file(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"config: cannot read '{path}': {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"config: '{path}' is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"config: '{path}' must hold a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise UsageError(f"config: unknown field(s) {sorted(unknown)} in '{path}'")
    return data


def parse_config(argv=None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    provided = {k: v for k, v in vars(ns).items() if v is not None}

    file_cfg = {}
    if provided.get("config"):
        file_cfg = _load_config_file(provided["config"])

    command = provided.get("command") or file_cfg.get("command")
    if not command:
        raise UsageError("command: no command given (on the command line or in the config file)")

    def pick(flag_key, file_key, default):
        if flag_key in provided:
            return provided[flag_key]
        if file_key in file_cfg:
            return file_cfg[file_key]
        return default

    params = dict(file_cfg.get("params") or {})
    if "param" in provided:
        params.update(_parse_params(provided["param"]))
    params = {str(k): float(v) for k, v in params.items()}

    matrix = pick("matrix", "matrix", None)
    if isinstance(matrix, str):
        matrix = _parse_matrix(matrix)
    elif isinstance(matrix, list):
        matrix = tuple(float(v) for v in matrix)

    grid = pick("grid", "grid", list(DEFAULT_GRID))
    if len(grid) != 2:
        raise UsageError(f"grid: expected two integers, got {grid}")

    return RunConfig(
        command=command,
        surface=pick("surface", "surface", None),
        params=params,
        pair=pick("pair", "pair", None),
        grid=(int(grid[0]), int(grid[1])),
        matrix=matrix,
        tolerance=float(pick("tol", "tolerance", DEFAULT_TOL)),
        format=pick("format", "format", "text"),
        output=pick("output", "output", None),
    )


def main(argv=None) -> int:
    try:
        config = parse_config(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse --help or syntax errors
        return int(exc.code or 0)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
