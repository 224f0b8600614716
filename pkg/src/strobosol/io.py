"""Delimited output with a stable, documented format.

Trajectory CSVs carry the header `t,fidelity,width,norm`; snapshot CSVs
carry `x,re,im,density`.  Floats are written with %.17g, which is
enough digits to round-trip IEEE doubles exactly, and files always use
LF line endings so byte-identical reruns diff clean on any platform.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .core import Grid, WaveFunction
from .propagator import Trajectory

TRAJECTORY_HEADER = "t,fidelity,width,norm"
SNAPSHOT_HEADER = "x,re,im,density"
SERIES_HEADER = "t,value"

SCHEMA_VERSION = 1


def fmt(value: float) -> str:
    return "%.17g" % value


def write_trajectory_csv(trajectory: Trajectory, path: str | Path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(TRAJECTORY_HEADER + "\n")
        for t, f, w, n in zip(
            trajectory.times, trajectory.fidelities, trajectory.widths, trajectory.norms
        ):
            fh.write(f"{fmt(t)},{fmt(f)},{fmt(w)},{fmt(n)}\n")


def read_trajectory_csv(path: str | Path) -> Trajectory:
    data = _read_csv(path, TRAJECTORY_HEADER)
    return Trajectory(data[:, 0], data[:, 1], data[:, 2], data[:, 3])


def write_snapshot_csv(wf: WaveFunction, path: str | Path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(SNAPSHOT_HEADER + "\n")
        for x, v in zip(wf.grid.x, wf.values):
            fh.write(
                f"{fmt(x)},{fmt(v.real)},{fmt(v.imag)},{fmt(abs(v) ** 2)}\n"
            )


def read_snapshot_csv(path: str | Path, grid: Grid) -> WaveFunction:
    """Load a snapshot, checking that it matches the given grid."""
    data = _read_csv(path, SNAPSHOT_HEADER)
    if data.shape[0] != grid.n_points:
        raise ValueError(
            f"snapshot {path} has {data.shape[0]} rows, grid expects {grid.n_points}"
        )
    if not np.allclose(data[:, 0], grid.x, rtol=0.0, atol=1e-9 * max(1.0, grid.length)):
        raise ValueError(f"snapshot {path} was sampled on a different grid")
    return WaveFunction(grid, data[:, 1] + 1j * data[:, 2])


def write_series_csv(times, values, path: str | Path) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(SERIES_HEADER + "\n")
        for t, v in zip(times, values):
            fh.write(f"{fmt(t)},{fmt(v)}\n")


def write_manifest(payload: dict, path: str | Path) -> None:
    """JSON manifest describing a run; keys sorted for stable diffs."""
    payload = dict(payload)
    payload.setdefault("schema_version", SCHEMA_VERSION)
    with open(path, "w", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _read_csv(path: str | Path, expected_header: str) -> np.ndarray:
    with open(path, "r", newline="") as fh:
        header = fh.readline().strip()
        if header != expected_header:
            raise ValueError(
                f"{path}: expected header {expected_header!r}, found {header!r}"
            )
        body = fh.read()
    if not body.strip():
        raise ValueError(f"{path}: no data rows")
    data = np.loadtxt(body.splitlines(), delimiter=",", ndmin=2)
    n_cols = expected_header.count(",") + 1
    if data.shape[1] != n_cols:
        raise ValueError(f"{path}: expected {n_cols} columns, found {data.shape[1]}")
    return data
