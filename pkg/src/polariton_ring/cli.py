"""Config-driven command line: solve, sweep, optimize, thermal, validate.

Usage:  polariton-ring <command> --config cfg.json --out data.csv [--workers N]

Each run writes the data CSV plus a ``<out>.summary.json`` with the echoed
configuration, solver diagnostics and wall time. Writes are atomic (temp file
plus rename), and a malformed config aborts before any file is created.
Exit codes: 0 success, 1 solver/validation failure, 2 config error.
The environment variable POLARITON_RING_THREADS overrides --workers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import __version__
from .experiments import (
    Axis,
    ObservableSpec,
    SweepError,
    SweepPlan,
    optimize_concurrence,
    run_sweep,
    signed_x_grid,
    solve_spec,
    thermal_map,
    validate_effective,
)
from .models import ModelSpec, model_spec_from_json, model_spec_to_json
from .steady import SteadyStateError

ENV_WORKERS = "POLARITON_RING_THREADS"


class ConfigError(ValueError):
    """The run configuration is malformed."""


def _require_keys(obj: dict, allowed: set[str], required: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise ConfigError(f"{where} must be a JSON object")
    unknown = set(obj) - allowed
    if unknown:
        raise ConfigError(f"unknown keys in {where}: {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ConfigError(f"missing keys in {where}: {sorted(missing)}")


def _decode_grid(obj, where: str) -> tuple[float, ...]:
    if isinstance(obj, list):
        if not obj:
            raise ConfigError(f"{where}: grid list is empty")
        return tuple(float(v) for v in obj)
    if isinstance(obj, dict):
        _require_keys(obj, {"start", "stop", "count"}, {"start", "stop", "count"}, where)
        count = int(obj["count"])
        if count < 1:
            raise ConfigError(f"{where}: count must be >= 1")
        return tuple(np.linspace(float(obj["start"]), float(obj["stop"]), count))
    raise ConfigError(f"{where}: grid must be a list or a start/stop/count object")


def _decode_model(obj, where: str = "model") -> ModelSpec:
    try:
        return model_spec_from_json(obj)
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def _decode_observable(obj, where: str) -> ObservableSpec:
    _require_keys(obj, {"kind", "sites", "level", "T", "omega"}, {"kind"}, where)
    try:
        return ObservableSpec(
            kind=obj["kind"],
            sites=tuple(obj["sites"]) if "sites" in obj else None,
            level=int(obj.get("level", 0)),
            T=float(obj["T"]) if "T" in obj else None,
            omega=float(obj.get("omega", 1.0)),
        )
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def _decode_sweep_plan(cfg: dict) -> SweepPlan:
    _require_keys(cfg, {"model", "axes", "observables"}, {"model", "axes", "observables"}, "sweep config")
    model = _decode_model(cfg["model"])
    if not isinstance(cfg["axes"], list) or not cfg["axes"]:
        raise ConfigError("sweep config: axes must be a nonempty list")
    axes = []
    for k, ax in enumerate(cfg["axes"]):
        _require_keys(ax, {"path", "grid"}, {"path", "grid"}, f"axes[{k}]")
        try:
            axes.append(Axis(path=str(ax["path"]), grid=_decode_grid(ax["grid"], f"axes[{k}].grid")))
        except ValueError as exc:
            raise ConfigError(f"axes[{k}]: {exc}") from exc
    if not isinstance(cfg["observables"], list) or not cfg["observables"]:
        raise ConfigError("sweep config: observables must be a nonempty list")
    observables = [_decode_observable(o, f"observables[{k}]") for k, o in enumerate(cfg["observables"])]
    try:
        return SweepPlan(model=model, axes=tuple(axes), observables=tuple(observables))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


# Each handler returns (csv_text, summary_payload); writing happens in main().


def _cmd_solve(cfg: dict, workers: int) -> tuple[str, dict]:
    _require_keys(cfg, {"model", "observables"}, {"model"}, "solve config")
    model = _decode_model(cfg["model"])
    observables = [
        _decode_observable(o, f"observables[{k}]") for k, o in enumerate(cfg.get("observables", []))
    ]
    report, rho = solve_spec(model)
    if not report.unique:
        raise SteadyStateError("steady state is not unique for this model")
    pops = [float(rho.mat[i, i].real) for i in range(rho.dim)]
    lines = ["index,population"] + [f"{i},{p:.12g}" for i, p in enumerate(pops)]
    payload = {
        "populations": pops,
        "residual": report.residual,
        "min_eigenvalue": report.min_eigenvalue,
        "unique": report.unique,
        "observables": {o.column: o.evaluate(rho) for o in observables},
    }
    return "\n".join(lines) + "\n", payload


def _cmd_sweep(cfg: dict, workers: int) -> tuple[str, dict]:
    plan = _decode_sweep_plan(cfg)
    result = run_sweep(plan, workers=workers)
    stats = {}
    for name in plan.header[len(plan.axes):]:
        col = result.column(name)
        stats[name] = {"min": float(col.min()), "max": float(col.max())}
    return result.to_csv(), {"rows": len(result.rows), "columns": result.header, "column_stats": stats}


def _cmd_optimize(cfg: dict, workers: int) -> tuple[str, dict]:
    _require_keys(
        cfg, {"model", "free", "bounds", "budget", "sites"}, {"model", "free", "bounds"}, "optimize config"
    )
    model = _decode_model(cfg["model"])
    free: list[str | tuple[str, ...]] = [
        tuple(entry) if isinstance(entry, list) else str(entry) for entry in cfg["free"]
    ]
    bounds = [(float(lo), float(hi)) for lo, hi in cfg["bounds"]]
    budget = int(cfg.get("budget", 2000))
    sites = tuple(cfg["sites"]) if "sites" in cfg else None
    try:
        report = optimize_concurrence(model, free, bounds, budget=budget, sites=sites)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    names = list(report.best_params)
    lines = [",".join(["improvement"] + names + ["concurrence"])]
    for k, (params, value) in enumerate(report.trace):
        lines.append(",".join([str(k)] + ["%.12g" % params[n] for n in names] + ["%.12g" % value]))
    payload = {
        "best_params": report.best_params,
        "best_value": report.best_value,
        "evaluations": report.evaluations,
    }
    return "\n".join(lines) + "\n", payload


def _cmd_thermal(cfg: dict, workers: int) -> tuple[str, dict]:
    _require_keys(cfg, {"x_grid", "t_grid", "y", "z"}, {"t_grid"}, "thermal config")
    x_grid = _decode_grid(cfg["x_grid"], "x_grid") if "x_grid" in cfg else signed_x_grid()
    t_grid = _decode_grid(cfg["t_grid"], "t_grid")
    try:
        result = thermal_map(x_grid, t_grid, y=float(cfg.get("y", 15.0)), z=float(cfg.get("z", 1.01)))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    d_col = result.column("d")
    payload = {"rows": len(result.rows), "d_min": float(d_col.min()), "d_max": float(d_col.max())}
    return result.to_csv(), payload


def _cmd_validate(cfg: dict, workers: int) -> tuple[str, dict]:
    _require_keys(cfg, {"micro", "j_over_kappa"}, {"micro"}, "validate config")
    model = _decode_model(cfg["micro"], "micro")
    if model.model != "micro":
        raise ConfigError("validate needs a micro model")
    base = model.params
    ratios = [float(v) for v in cfg.get("j_over_kappa", [])] or [max(base.J) / base.kappa]
    lines = ["j_over_kappa,distance"]
    distances = {}
    for ratio in ratios:
        scale = ratio * base.kappa / max(base.J)
        micro = replace(
            base,
            J=tuple(j * scale for j in base.J),
            alpha=tuple(a * scale for a in base.alpha),
        )
        try:
            dist = validate_effective(micro)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
        distances["%.12g" % ratio] = dist
        lines.append(f"{ratio:.12g},{dist:.12g}")
    return "\n".join(lines) + "\n", {"distances": distances}


_COMMANDS = {
    "solve": _cmd_solve,
    "sweep": _cmd_sweep,
    "optimize": _cmd_optimize,
    "thermal": _cmd_thermal,
    "validate": _cmd_validate,
}


def _atomic_write(path: Path, content: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def summary_path(out: Path) -> Path:
    return out.with_name(out.name + ".summary.json")


def _echo_config(cfg: dict) -> dict:
    echo = dict(cfg)
    for key in ("model", "micro"):
        if key in echo:
            echo[key] = model_spec_to_json(_decode_model(echo[key], key))
    return echo


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polariton-ring",
        description="Steady-state experiments on driven-dissipative cavity arrays",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="JSON run configuration")
        p.add_argument("--out", required=True, help="output CSV path")
        p.add_argument("--workers", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    workers = args.workers
    env = os.environ.get(ENV_WORKERS)
    if env is not None:
        try:
            workers = int(env)
        except ValueError:
            print(f"error: {ENV_WORKERS}={env!r} is not an integer", file=sys.stderr)
            return 2
    if workers < 1:
        print("error: workers must be >= 1", file=sys.stderr)
        return 2

    config_path = Path(args.config)
    try:
        cfg = json.loads(config_path.read_text())
    except FileNotFoundError:
        print(f"error: config file {config_path} not found", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(f"error: config is not valid JSON: {exc}", file=sys.stderr)
        return 2
    if not isinstance(cfg, dict):
        print("error: config must be a JSON object", file=sys.stderr)
        return 2

    started = time.perf_counter()
    try:
        csv_text, payload = _COMMANDS[args.command](cfg, workers)
        echo = _echo_config(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (SteadyStateError, SweepError, RuntimeError, FloatingPointError) as exc:
        print(f"run failed: {exc}", file=sys.stderr)
        return 1

    summary = {
        "command": args.command,
        "version": __version__,
        "workers": workers,
        "config": echo,
        "wall_time_s": time.perf_counter() - started,
        **payload,
    }
    out = Path(args.out)
    try:
        _atomic_write(out, csv_text)
        _atomic_write(summary_path(out), json.dumps(summary, indent=2, sort_keys=True) + "\n")
    except OSError as exc:
        print(f"error: cannot write outputs at {out}: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
