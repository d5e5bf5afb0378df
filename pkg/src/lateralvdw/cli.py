"""Command-line front end: force curves, emission spectra, velocities, checks.

Four verbs write plotting-ready tables:

    lateralvdw force-curve --r-min 1e-7 --r-max 2e-6 --points 400
    lateralvdw emission-spectrum --r 632e-9 --phi-points 64
    lateralvdw velocity --p1 1e-2 --delta-t 1e-2
    lateralvdw validate

Output is CSV with '#'-prefixed metadata lines, or JSON with a "meta"
object and a "rows" array (--format json).  Every number is rendered
with repr() so a fixed configuration yields byte-identical files; the
metadata timestamp is suppressed by --no-timestamp for that purpose.
Settings may come from a flat key=value config file (--config), with
command-line flags taking precedence.

Exit status: 0 on success, 1 when the validate verb finds a failing
identity, 2 on configuration or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass, replace
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .constants import (
    CESIUM_DIPOLE,
    CESIUM_MASS,
    CESIUM_WAVELENGTH,
    RUBIDIUM_POLARIZABILITY,
)
from .dynamics import DrivingParams, steady_state_population
from .emission import emission_spectrum
from .forces import lateral_force_closed_form, resonant_force_on_a, resonant_force_on_b
from .quadrature import QuadratureConfig
from .system import TwoAtomSystem
from .validation import run_identity_checks


class ConfigError(ValueError):
    """Raised for malformed config files or inconsistent settings."""


@dataclass
class RunConfig:
    """Effective settings for one CLI invocation.

    Populated from defaults, then an optional config file, then flags.
    ``p1`` stays None until resolved: either set explicitly, derived
    from a drive specification, or filled with the per-verb default.
    """

    dipole_moment: float = CESIUM_DIPOLE
    wavelength: float = CESIUM_WAVELENGTH
    alpha_b: float = RUBIDIUM_POLARIZABILITY
    mass_a: float = CESIUM_MASS
    handedness: str = "right"
    r_min: float = 100e-9
    r_max: float = 2e-6
    points: int = 400
    log_scale: bool = False
    r: float = 632e-9
    phi_points: int = 64
    p1: float | None = None
    rabi: float | None = None
    detuning: float | None = None
    rabi_over_detuning: float | None = None
    delta_t: float = 10e-3
    quad_rel_tol: float | None = None
    quad_abs_tol: float | None = None
    output: str | None = None
    format: str = "csv"
    timestamp: bool = True
    f3_scale: float = 1.0


def _parse_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


# key -> parser for the flat config-file grammar; values land on RunConfig
# fields of the same name.
_CONFIG_PARSERS = {
    "dipole_moment": float,
    "wavelength": float,
    "alpha_b": float,
    "mass_a": float,
    "handedness": str,
    "r_min": float,
    "r_max": float,
    "points": int,
    "log_scale": _parse_bool,
    "r": float,
    "phi_points": int,
    "p1": float,
    "rabi": float,
    "detuning": float,
    "rabi_over_detuning": float,
    "delta_t": float,
    "quad_rel_tol": float,
    "quad_abs_tol": float,
    "output": str,
    "format": str,
    "timestamp": _parse_bool,
    "f3_scale": float,
}


def parse_config_file(path: str) -> dict:
    """Parse a flat ``key = value`` file.

    Blank lines and lines starting with '#' are ignored.  Keys must be
    known RunConfig fields; values are parsed per field type.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    values = {}
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {stripped!r}")
        key, _, text = stripped.partition("=")
        key = key.strip()
        text = text.strip()
        parser = _CONFIG_PARSERS.get(key)
        if parser is None:
            raise ConfigError(f"{path}:{lineno}: unknown setting {key!r}")
        try:
            values[key] = parser(text)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return values


_DEFAULT_P1 = {"force-curve": 1.0, "velocity": 1e-2}
_DEFAULT_OUTPUT = {
    "force-curve": "force_curve",
    "emission-spectrum": "emission_spectrum",
    "velocity": "velocity",
    "validate": "validation_report",
}


def _validate_config(config: RunConfig, verb: str) -> None:
    if config.format not in ("csv", "json"):
        raise ConfigError(f"format must be csv or json, got {config.format!r}")
    if config.handedness not in ("left", "right"):
        raise ConfigError(f"handedness must be left or right, got {config.handedness!r}")
    if config.dipole_moment <= 0.0:
        raise ConfigError("dipole_moment must be positive")
    if config.wavelength <= 0.0:
        raise ConfigError("wavelength must be positive")
    if config.alpha_b < 0.0:
        raise ConfigError("alpha_b must be non-negative")
    if config.mass_a <= 0.0:
        raise ConfigError("mass_a must be positive")
    if config.delta_t <= 0.0:
        raise ConfigError("delta_t must be positive")
    if config.f3_scale <= 0.0:
        raise ConfigError("f3_scale must be positive")
    if verb in ("force-curve", "velocity"):
        if config.r_min <= 0.0:
            raise ConfigError("r_min must be positive")
        if config.points < 1:
            raise ConfigError("points must be at least 1")
        if config.points > 1 and config.r_max <= config.r_min:
            raise ConfigError("r_max must exceed r_min for a sweep")
    if verb == "emission-spectrum":
        if config.r <= 0.0:
            raise ConfigError("r must be positive")
        if config.phi_points < 8:
            raise ConfigError("phi_points must be at least 8")
    if config.p1 is not None and not 0.0 <= config.p1 <= 1.0:
        raise ConfigError("p1 must lie in [0, 1]")


def _resolve_population(config: RunConfig, verb: str) -> float:
    """Excited-state population: explicit p1, else drive-derived, else default."""
    if config.p1 is not None:
        return config.p1
    if config.rabi_over_detuning is not None:
        ratio = config.rabi_over_detuning
        if ratio <= 0.0:
            raise ConfigError("rabi_over_detuning must be positive")
        return min(0.25 * ratio * ratio, 1.0)
    if config.rabi is not None or config.detuning is not None:
        if config.rabi is None or config.detuning is None:
            raise ConfigError("rabi and detuning must be given together")
        try:
            drive = DrivingParams(
                rabi=config.rabi, detuning=config.detuning, duration=config.delta_t
            )
            return steady_state_population(drive)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    return _DEFAULT_P1.get(verb, 1.0)


def _system_at(config: RunConfig, separation: float) -> TwoAtomSystem:
    return TwoAtomSystem.cs_rb(
        separation,
        handedness=config.handedness,
        dipole_moment=config.dipole_moment,
        wavelength=config.wavelength,
        alpha_b=config.alpha_b,
        mass_a=config.mass_a,
    )


def _sweep(config: RunConfig) -> np.ndarray:
    if config.points == 1:
        return np.array([config.r_min])
    if config.log_scale:
        return np.geomspace(config.r_min, config.r_max, config.points)
    return np.linspace(config.r_min, config.r_max, config.points)


def _pyval(value):
    """Collapse numpy scalars so repr/json render plain Python numbers."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    return value


def _format_value(value) -> str:
    value = _pyval(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _base_meta(config: RunConfig, verb: str) -> dict:
    meta = {
        "tool": "lateralvdw",
        "version": __version__,
        "verb": verb,
        "handedness": config.handedness,
        "dipole_moment": config.dipole_moment,
        "wavelength": config.wavelength,
        "alpha_b": config.alpha_b,
    }
    if config.timestamp:
        meta["generated"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return meta


def _render(meta: dict, columns: list, rows: list, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "meta": {key: _pyval(value) for key, value in meta.items()},
            "rows": [dict(zip(columns, (_pyval(v) for v in row))) for row in rows],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = [f"# {key} = {_format_value(meta[key])}" for key in sorted(meta)]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(_format_value(value) for value in row))
    return "\n".join(lines) + "\n"


def _write_atomic(path: str, payload: str) -> None:
    # Temp file in the destination directory so os.replace stays atomic.
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".lateralvdw-", suffix=".tmp")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(payload)
        os.replace(tmp_path, path)
    except BaseException:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise


def _output_path(config: RunConfig, verb: str) -> str:
    if config.output is not None:
        return config.output
    return f"{_DEFAULT_OUTPUT[verb]}.{config.format}"


def _emit(config: RunConfig, verb: str, meta: dict, columns: list, rows: list) -> str:
    path = _output_path(config, verb)
    _write_atomic(path, _render(meta, columns, rows, config.format))
    return path


def cmd_force_curve(config: RunConfig) -> int:
    p1 = _resolve_population(config, "force-curve")
    columns = ["r", "xi", "F_x", "F_z_A", "F_z_B", "F_x_shape"]
    rows = []
    for separation in _sweep(config):
        system = _system_at(config, separation)
        lateral = lateral_force_closed_form(system, p1)
        on_a = resonant_force_on_a(system, p1)
        on_b = resonant_force_on_b(system, p1)
        rows.append(
            [
                float(separation),
                system.xi,
                lateral,
                float(on_a.force[2]),
                float(on_b.force[2]),
                float(on_a.shape_factor[0]),
            ]
        )
    meta = _base_meta(config, "force-curve")
    meta.update(
        p1=p1,
        r_min=config.r_min,
        r_max=config.r_max,
        points=config.points,
        log_scale=config.log_scale,
    )
    path = _emit(config, "force-curve", meta, columns, rows)
    print(f"wrote {path} ({len(rows)} rows)")
    return 0


def cmd_emission_spectrum(config: RunConfig) -> int:
    system = _system_at(config, config.r)
    spectrum = emission_spectrum(system, config.phi_points)
    rates = np.array([rate for _, rate in spectrum.samples])
    peak = rates.max()
    scale = 1.0 / peak if peak > 0.0 else 0.0
    columns = ["phi", "R", "R_normalized"]
    rows = [
        [phi, rate, rate * scale]
        for (phi, _), rate in zip(spectrum.samples, rates)
    ]
    meta = _base_meta(config, "emission-spectrum")
    meta.update(
        r=config.r,
        xi=spectrum.xi,
        phi_points=config.phi_points,
        f1=spectrum.f1,
        f2=spectrum.f2,
        f3=spectrum.f3,
    )
    path = _emit(config, "emission-spectrum", meta, columns, rows)
    print(f"wrote {path} ({len(rows)} rows)")
    return 0


def cmd_velocity(config: RunConfig) -> int:
    p1 = _resolve_population(config, "velocity")
    columns = ["r", "F_x", "v"]
    rows = []
    for separation in _sweep(config):
        system = _system_at(config, separation)
        force = lateral_force_closed_form(system, p1)
        velocity = force * config.delta_t / config.mass_a
        rows.append([float(separation), force, velocity])
    meta = _base_meta(config, "velocity")
    meta.update(
        p1=p1,
        delta_t=config.delta_t,
        mass_a=config.mass_a,
        r_min=config.r_min,
        r_max=config.r_max,
        points=config.points,
        log_scale=config.log_scale,
    )
    path = _emit(config, "velocity", meta, columns, rows)
    print(f"wrote {path} ({len(rows)} rows)")
    return 0


def cmd_validate(config: RunConfig) -> int:
    quad = None
    if config.quad_rel_tol is not None or config.quad_abs_tol is not None:
        quad = QuadratureConfig(
            rel_tol=config.quad_rel_tol if config.quad_rel_tol is not None else 1e-10,
            abs_tol=config.quad_abs_tol if config.quad_abs_tol is not None else 1e-30,
        )
    checks = run_identity_checks(config=quad, f3_scale=config.f3_scale)
    columns = ["name", "passed", "achieved_error", "tolerance", "detail"]
    rows = [
        [check.name, check.passed, check.achieved_error, check.tolerance, check.detail]
        for check in checks
    ]
    all_passed = all(check.passed for check in checks)
    meta = _base_meta(config, "validate")
    meta.update(f3_scale=config.f3_scale, all_passed=all_passed)
    path = _emit(config, "validate", meta, columns, rows)
    for check in checks:
        status = "pass" if check.passed else "FAIL"
        print(
            f"{status}  {check.name}: error {check.achieved_error:.3e}"
            f" (tolerance {check.tolerance:.0e})"
        )
    print(f"wrote {path}")
    return 0 if all_passed else 1


_COMMANDS = {
    "force-curve": cmd_force_curve,
    "emission-spectrum": cmd_emission_spectrum,
    "velocity": cmd_velocity,
    "validate": cmd_validate,
}


def _add_shared_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="flat key = value settings file")
    parser.add_argument("--output", metavar="PATH", help="output file path")
    parser.add_argument("--format", choices=("csv", "json"), help="output format")
    parser.add_argument("--r-min", type=float, help="sweep start separation in m")
    parser.add_argument("--r-max", type=float, help="sweep end separation in m")
    parser.add_argument("--points", type=int, help="number of sweep points")
    parser.add_argument(
        "--log-scale", action="store_true", default=None, help="logarithmic sweep spacing"
    )
    parser.add_argument("--phi-points", type=int, help="azimuthal sample count")
    parser.add_argument("--delta-t", type=float, help="drive duration in s")
    parser.add_argument("--p1", type=float, help="excited-state population in [0, 1]")
    parser.add_argument(
        "--handedness", choices=("left", "right"), help="circular dipole handedness"
    )
    parser.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit the generated-at metadata line (reproducible output)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lateralvdw",
        description="Lateral van der Waals force and emission-spectrum tables.",
    )
    parser.add_argument("--version", action="version", version=f"lateralvdw {__version__}")
    subparsers = parser.add_subparsers(dest="verb", required=True)

    sub = subparsers.add_parser(
        "force-curve", help="lateral and longitudinal forces over a separation sweep"
    )
    _add_shared_flags(sub)

    sub = subparsers.add_parser(
        "emission-spectrum", help="azimuthal recoil spectrum at one separation"
    )
    _add_shared_flags(sub)
    sub.add_argument("--r", type=float, help="separation in m (default 632e-9)")

    sub = subparsers.add_parser(
        "velocity", help="accumulated lateral velocity over a separation sweep"
    )
    _add_shared_flags(sub)

    sub = subparsers.add_parser("validate", help="run the cross-validation identities")
    _add_shared_flags(sub)
    sub.add_argument(
        "--f3-scale",
        type=float,
        help="perturb the closed-form asymmetry coefficient (sensitivity hook)",
    )

    return parser


# argparse dest -> RunConfig field for flags that override config-file values.
_FLAG_FIELDS = (
    "output",
    "format",
    "r_min",
    "r_max",
    "points",
    "log_scale",
    "phi_points",
    "delta_t",
    "p1",
    "handedness",
    "r",
    "f3_scale",
)


def _build_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig()
    if args.config is not None:
        config = replace(config, **parse_config_file(args.config))
    overrides = {}
    for field_name in _FLAG_FIELDS:
        value = getattr(args, field_name, None)
        if value is not None:
            overrides[field_name] = value
    if getattr(args, "no_timestamp", False):
        overrides["timestamp"] = False
    return replace(config, **overrides)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        config = _build_config(args)
        _validate_config(config, args.verb)
        return _COMMANDS[args.verb](config)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
