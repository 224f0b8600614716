"""Scenario files: INI syntax, parsed into validated run descriptions.

A scenario file has up to four kinds of sections:

    [grid]       n_points, length
    [evolution]  epsilon, n_kicks, kick, tau, substep_dt
    [record]     at, comoving, snapshots, snapshot_stride
    [initial.X]  kind, kicked, velocity, center, width, odd_coeff,
                 even_coeff, path   (one section per curve, X is the label)
    [physical]   atom_count, mass_u, scattering_length_nm,
                 transverse_length_um, kick_duration_us, kick_period_ms

A file with only [physical] is a valid input for the estimate verb; the
run verb needs grid, evolution and at least one initial section.  All
validation failures raise ConfigError naming the offending key.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from pathlib import Path

from .propagator import (
    GAUSSIAN,
    INSTANTANEOUS,
    RECORD_BOTH,
    RECORD_HALVES,
    RECORD_KICKS,
    KickModel,
    RecordSpec,
)
from .units import ATOMIC_MASS_KG, ExperimentalParams, PhysicalParams, lambda_from_experiment

INITIAL_KINDS = ("gaussian", "phi0", "soliton", "file")

_GRID_KEYS = {"n_points", "length"}
_EVOLUTION_KEYS = {"epsilon", "n_kicks", "kick", "tau", "substep_dt"}
_RECORD_KEYS = {"at", "comoving", "snapshots", "snapshot_stride"}
_INITIAL_KEYS = {
    "kind",
    "kicked",
    "velocity",
    "center",
    "width",
    "odd_coeff",
    "even_coeff",
    "path",
}
_PHYSICAL_KEYS = {
    "atom_count",
    "mass_u",
    "scattering_length_nm",
    "transverse_length_um",
    "kick_duration_us",
    "kick_period_ms",
}


class ConfigError(ValueError):
    """Raised for unreadable, incomplete or inconsistent scenario files."""


@dataclass(frozen=True)
class InitialSpec:
    """One initial state (one output curve) of a scenario."""

    label: str
    kind: str
    kicked: bool = True
    velocity: float = 0.0
    center: float = 0.0
    width: float | None = None
    odd_coeff: float = 0.0
    even_coeff: float = 0.0
    path: str | None = None


@dataclass(frozen=True)
class PhysicalSection:
    """Laboratory parameters in the units their keys declare."""

    atom_count: float
    mass_u: float
    scattering_length_nm: float
    transverse_length_um: float
    kick_duration_us: float
    kick_period_ms: float

    def to_si(self) -> tuple[ExperimentalParams, float, float]:
        """Returns (experimental params, mass in kg, period in s)."""
        mass_kg = self.mass_u * ATOMIC_MASS_KG
        exp = ExperimentalParams(
            atom_count=self.atom_count,
            scattering_length_m=self.scattering_length_nm * 1e-9,
            transverse_length_m=self.transverse_length_um * 1e-6,
            kick_duration_s=self.kick_duration_us * 1e-6,
        )
        return exp, mass_kg, self.kick_period_ms * 1e-3

    def physical_params(self) -> PhysicalParams:
        exp, mass_kg, period_s = self.to_si()
        return PhysicalParams(
            mass_kg=mass_kg,
            kick_length_m=lambda_from_experiment(exp, mass_kg),
            period_s=period_s,
        )


@dataclass(frozen=True)
class Scenario:
    """A fully validated run description."""

    grid_points: int
    grid_length: float
    epsilon: float
    n_kicks: int
    kick_variant: str = INSTANTANEOUS
    tau: float | None = None
    substep_dt: float | None = None
    record_at: str = RECORD_KICKS
    comoving: bool = False
    snapshots: bool = False
    snapshot_stride: int = 1
    initials: tuple[InitialSpec, ...] = field(default_factory=tuple)

    def kick_model(self) -> KickModel:
        return KickModel(self.kick_variant, self.tau, self.substep_dt)

    def record_spec(self, initial: InitialSpec) -> RecordSpec:
        velocity = initial.velocity if self.comoving else 0.0
        return RecordSpec(
            at=self.record_at,
            comoving_velocity=velocity,
            snapshots=self.snapshots,
            snapshot_stride=self.snapshot_stride,
        )


@dataclass(frozen=True)
class RunConfig:
    """Parsed scenario file: simulation part, physical part, or both."""

    path: str
    scenario: Scenario | None
    physical: PhysicalSection | None


def _fail(key: str, message: str) -> ConfigError:
    return ConfigError(f"{key}: {message}")


_REQUIRED = object()


def _get(cp: configparser.ConfigParser, section: str, key: str, cast, default=_REQUIRED):
    if not cp.has_option(section, key):
        if default is _REQUIRED:
            raise _fail(f"{section}.{key}", "required key is missing")
        return default
    raw = cp.get(section, key)
    try:
        return cast(raw)
    except ValueError:
        raise _fail(f"{section}.{key}", f"cannot parse {raw!r}") from None


def _as_bool(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ValueError(raw)


def _as_int(raw: str) -> int:
    return int(raw.strip())


def _as_float(raw: str) -> float:
    return float(raw.strip())


def _check_keys(cp: configparser.ConfigParser, section: str, allowed: set[str]) -> None:
    for key in cp[section]:
        if key not in allowed:
            raise _fail(f"{section}.{key}", "unknown key")


def _parse_initial(cp: configparser.ConfigParser, section: str, label: str) -> InitialSpec:
    _check_keys(cp, section, _INITIAL_KEYS)
    kind = _get(cp, section, "kind", str.strip)
    if kind not in INITIAL_KINDS:
        raise _fail(f"{section}.kind", f"must be one of {', '.join(INITIAL_KINDS)}")
    spec = InitialSpec(
        label=label,
        kind=kind,
        kicked=_get(cp, section, "kicked", _as_bool, True),
        velocity=_get(cp, section, "velocity", _as_float, 0.0),
        center=_get(cp, section, "center", _as_float, 0.0),
        width=_get(cp, section, "width", _as_float) if cp.has_option(section, "width") else None,
        odd_coeff=_get(cp, section, "odd_coeff", _as_float, 0.0),
        even_coeff=_get(cp, section, "even_coeff", _as_float, 0.0),
        path=cp.get(section, "path").strip() if cp.has_option(section, "path") else None,
    )
    if spec.kind == "file" and not spec.path:
        raise _fail(f"{section}.path", "required for kind = file")
    if spec.kind != "file" and spec.path:
        raise _fail(f"{section}.path", "only valid for kind = file")
    if spec.width is not None and not spec.width > 0.0:
        raise _fail(f"{section}.width", "must be positive")
    return spec


def _parse_scenario(cp: configparser.ConfigParser) -> Scenario:
    _check_keys(cp, "grid", _GRID_KEYS)
    _check_keys(cp, "evolution", _EVOLUTION_KEYS)
    grid_points = _get(cp, "grid", "n_points", _as_int)
    grid_length = _get(cp, "grid", "length", _as_float)
    if grid_points < 16:
        raise _fail("grid.n_points", "must be >= 16")
    if not grid_length > 0.0:
        raise _fail("grid.length", "must be positive")

    epsilon = _get(cp, "evolution", "epsilon", _as_float)
    n_kicks = _get(cp, "evolution", "n_kicks", _as_int)
    if not epsilon > 0.0:
        raise _fail("evolution.epsilon", "must be positive for a kicked run")
    if n_kicks < 1:
        raise _fail("evolution.n_kicks", "must be >= 1")
    kick_variant = _get(cp, "evolution", "kick", str.strip, INSTANTANEOUS)
    if kick_variant not in (INSTANTANEOUS, GAUSSIAN):
        raise _fail("evolution.kick", f"must be {INSTANTANEOUS} or {GAUSSIAN}")
    tau = _get(cp, "evolution", "tau", _as_float) if cp.has_option("evolution", "tau") else None
    substep_dt = (
        _get(cp, "evolution", "substep_dt", _as_float)
        if cp.has_option("evolution", "substep_dt")
        else None
    )
    if kick_variant == GAUSSIAN:
        if tau is None or not tau > 0.0:
            raise _fail("evolution.tau", "gaussian kick requires tau > 0")
        if tau > 0.1 * epsilon:
            raise _fail("evolution.tau", "must be <= epsilon/10 so the pulse fits the period")
        if substep_dt is not None and not substep_dt > 0.0:
            raise _fail("evolution.substep_dt", "must be positive")
    elif tau is not None or substep_dt is not None:
        raise _fail("evolution.tau", "only valid for kick = gaussian")

    record_at = RECORD_KICKS
    comoving = False
    snapshots = False
    snapshot_stride = 1
    if cp.has_section("record"):
        _check_keys(cp, "record", _RECORD_KEYS)
        record_at = _get(cp, "record", "at", str.strip, RECORD_KICKS)
        if record_at not in (RECORD_KICKS, RECORD_HALVES, RECORD_BOTH):
            raise _fail(
                "record.at",
                f"must be {RECORD_KICKS}, {RECORD_HALVES} or {RECORD_BOTH}",
            )
        comoving = _get(cp, "record", "comoving", _as_bool, False)
        snapshots = _get(cp, "record", "snapshots", _as_bool, False)
        snapshot_stride = _get(cp, "record", "snapshot_stride", _as_int, 1)
        if snapshot_stride < 1:
            raise _fail("record.snapshot_stride", "must be >= 1")

    initials = []
    for section in cp.sections():
        if section == "initial":
            initials.append(_parse_initial(cp, section, "initial"))
        elif section.startswith("initial."):
            label = section.split(".", 1)[1]
            if not label:
                raise _fail(section, "empty initial label")
            initials.append(_parse_initial(cp, section, label))
    if not initials:
        raise ConfigError("scenario defines no [initial] section")
    labels = [spec.label for spec in initials]
    if len(set(labels)) != len(labels):
        raise ConfigError("initial labels must be unique")

    return Scenario(
        grid_points=grid_points,
        grid_length=grid_length,
        epsilon=epsilon,
        n_kicks=n_kicks,
        kick_variant=kick_variant,
        tau=tau,
        substep_dt=substep_dt,
        record_at=record_at,
        comoving=comoving,
        snapshots=snapshots,
        snapshot_stride=snapshot_stride,
        initials=tuple(initials),
    )


def _parse_physical(cp: configparser.ConfigParser) -> PhysicalSection:
    _check_keys(cp, "physical", _PHYSICAL_KEYS)
    values = {key: _get(cp, "physical", key, _as_float) for key in sorted(_PHYSICAL_KEYS)}
    for key, value in values.items():
        if not value > 0.0:
            raise _fail(f"physical.{key}", "must be positive")
    return PhysicalSection(**values)


def parse_config(path: str | Path) -> RunConfig:
    """Read and validate a scenario file."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    cp = configparser.ConfigParser(
        interpolation=None, inline_comment_prefixes=(";", "#")
    )
    try:
        with open(path) as fh:
            cp.read_file(fh)
    except (configparser.Error, OSError) as exc:
        raise ConfigError(f"{path}: {exc}") from exc

    known = {"grid", "evolution", "record", "physical"}
    for section in cp.sections():
        if section not in known and section != "initial" and not section.startswith("initial."):
            raise ConfigError(f"unknown section [{section}]")

    has_run = cp.has_section("grid") or cp.has_section("evolution")
    scenario = None
    if has_run:
        if not cp.has_section("grid"):
            raise ConfigError("missing [grid] section")
        if not cp.has_section("evolution"):
            raise ConfigError("missing [evolution] section")
        scenario = _parse_scenario(cp)
    physical = _parse_physical(cp) if cp.has_section("physical") else None
    if scenario is None and physical is None:
        raise ConfigError(f"{path}: no [grid]/[evolution] and no [physical] section")
    return RunConfig(path=str(path), scenario=scenario, physical=physical)
