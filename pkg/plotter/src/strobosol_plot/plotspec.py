"""Plot description files and the trajectory CSV reader.

A plot spec is a small INI file with one [figure] section and one
[curve.<name>] section per curve:

    [figure]
    kind = fidelity          ; fidelity | width (optional, checked
                             ; against the CLI verb when present)
    output = figures/decay   ; stem, extensions appended per format
    formats = png, pdf       ; default
    title = ...              ; optional
    epsilon = 0.1            ; optional kick period; fidelity figures
                             ; then use the kick number as x axis and
                             ; width figures may show an early-time inset
    inset = false            ; width figures only, needs epsilon

    [curve.gaussian]
    csv = ../out/run/gaussian/trajectory.csv
    label = gaussian         ; default: the section suffix
    style = gaussian         ; named style, default: the section suffix

Relative csv paths are resolved against the spec file's directory.  The
plotter only knows the public trajectory schema (t,fidelity,width,norm
with one float row per sample) and never writes to its inputs.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

TRAJECTORY_HEADER = "t,fidelity,width,norm"

KIND_FIDELITY = "fidelity"
KIND_WIDTH = "width"
KINDS = (KIND_FIDELITY, KIND_WIDTH)

DEFAULT_FORMATS = ("png", "pdf")

_FIGURE_KEYS = {"kind", "output", "formats", "title", "epsilon", "inset"}
_CURVE_KEYS = {"csv", "label", "style"}


class PlotSpecError(ValueError):
    """Raised for unreadable, incomplete, or inconsistent plot specs."""


class PlotDataError(ValueError):
    """Raised when an input CSV does not match the trajectory schema."""


@dataclass(frozen=True)
class CurveSpec:
    csv: Path
    label: str
    style: str


@dataclass(frozen=True)
class PlotSpec:
    output: Path
    curves: tuple[CurveSpec, ...]
    kind: str = ""
    formats: tuple[str, ...] = DEFAULT_FORMATS
    title: str = ""
    epsilon: float | None = None
    inset: bool = False

    def __post_init__(self) -> None:
        if self.kind and self.kind not in KINDS:
            raise PlotSpecError(f"unknown figure kind {self.kind!r}")
        if not self.curves:
            raise PlotSpecError("a plot spec needs at least one curve")
        if not self.formats:
            raise PlotSpecError("empty format list")
        if self.epsilon is not None and self.epsilon <= 0.0:
            raise PlotSpecError("epsilon must be positive")
        if self.inset and self.epsilon is None:
            raise PlotSpecError("inset requires epsilon")


@dataclass(frozen=True)
class TrajectoryData:
    """Columns of one trajectory CSV."""

    times: np.ndarray = field(repr=False)
    fidelities: np.ndarray = field(repr=False)
    widths: np.ndarray = field(repr=False)
    norms: np.ndarray = field(repr=False)


def _reject_unknown(section: str, present, allowed: set[str]) -> None:
    for key in present:
        if key not in allowed:
            raise PlotSpecError(f"unknown key {section}.{key}")


def parse_plot_spec(path: str | Path) -> PlotSpec:
    """Read and validate a plot spec file.

    Every referenced CSV must exist; paths come back resolved against
    the spec file's directory.
    """
    path = Path(path)
    if not path.is_file():
        raise PlotSpecError(f"no such spec file: {path}")
    parser = configparser.ConfigParser(
        interpolation=None, inline_comment_prefixes=(";", "#")
    )
    try:
        with open(path) as fh:
            parser.read_file(fh)
    except configparser.Error as exc:
        raise PlotSpecError(f"cannot parse {path}: {exc}") from exc

    if "figure" not in parser:
        raise PlotSpecError("missing [figure] section")
    fig = parser["figure"]
    _reject_unknown("figure", fig, _FIGURE_KEYS)
    if "output" not in fig:
        raise PlotSpecError("figure.output is required")

    base = path.parent
    output = Path(fig["output"])
    if not output.is_absolute():
        output = base / output

    formats = DEFAULT_FORMATS
    if "formats" in fig:
        formats = tuple(
            part.strip() for part in fig["formats"].split(",") if part.strip()
        )

    epsilon = None
    if "epsilon" in fig:
        try:
            epsilon = float(fig["epsilon"])
        except ValueError as exc:
            raise PlotSpecError(f"figure.epsilon: {fig['epsilon']!r}") from exc

    try:
        inset = fig.getboolean("inset", fallback=False)
    except ValueError as exc:
        raise PlotSpecError(f"figure.inset: {fig['inset']!r}") from exc

    curves = []
    for section in parser.sections():
        if section == "figure":
            continue
        if not section.startswith("curve."):
            raise PlotSpecError(f"unknown section [{section}]")
        name = section[len("curve.") :]
        if not name:
            raise PlotSpecError("empty curve name")
        body = parser[section]
        _reject_unknown(section, body, _CURVE_KEYS)
        if "csv" not in body:
            raise PlotSpecError(f"{section}.csv is required")
        csv = Path(body["csv"])
        if not csv.is_absolute():
            csv = base / csv
        if not csv.is_file():
            raise PlotSpecError(f"{section}: no such file {csv}")
        curves.append(
            CurveSpec(
                csv=csv,
                label=body.get("label", name),
                style=body.get("style", name),
            )
        )

    return PlotSpec(
        output=output,
        curves=tuple(curves),
        kind=fig.get("kind", ""),
        formats=formats,
        title=fig.get("title", ""),
        epsilon=epsilon,
        inset=inset,
    )


def read_trajectory(path: str | Path) -> TrajectoryData:
    """Load one trajectory CSV, validating the public schema."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise PlotDataError(f"cannot read {path}: {exc}") from exc
    lines = text.splitlines()
    if not lines or lines[0].strip() != TRAJECTORY_HEADER:
        raise PlotDataError(
            f"{path}: expected header {TRAJECTORY_HEADER!r}"
        )
    body = [ln for ln in lines[1:] if ln.strip()]
    if not body:
        raise PlotDataError(f"{path}: no data rows")
    try:
        data = np.array(
            [[float(cell) for cell in ln.split(",")] for ln in body]
        )
    except ValueError as exc:
        raise PlotDataError(f"{path}: bad row: {exc}") from exc
    if data.ndim != 2 or data.shape[1] != 4:
        raise PlotDataError(f"{path}: expected 4 columns")
    return TrajectoryData(data[:, 0], data[:, 1], data[:, 2], data[:, 3])
