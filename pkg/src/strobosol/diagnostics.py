"""Observables derived from states and trajectories.

Fidelity here is the squared overlap |<ref|state>|^2.  For unit-norm
states it lies in [0, 1] up to rounding; curves of 1 - F are clipped at
zero so they can be plotted on a log scale without spurious negatives.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import WaveFunction, inner_product, translate
from .propagator import Trajectory


@dataclass
class ObservableSeries:
    """A labeled scalar time series extracted from a trajectory."""

    times: np.ndarray
    values: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        self.times = np.asarray(self.times, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.times.size != self.values.size:
            raise ValueError("series times and values have different lengths")
        if self.times.size == 0:
            raise ValueError("series must contain at least one sample")


def fidelity(reference: WaveFunction, state: WaveFunction) -> float:
    """Squared overlap |<reference|state>|^2."""
    return abs(inner_product(reference, state)) ** 2


def comoving_fidelity(
    reference: WaveFunction, state: WaveFunction, velocity: float, t: float
) -> float:
    """Fidelity against the reference translated to its comoving position v*t."""
    if velocity == 0.0 or t == 0.0:
        return fidelity(reference, state)
    return fidelity(translate(reference, velocity * t), state)


def fidelity_error_curve(trajectory: Trajectory, label: str = "") -> ObservableSeries:
    """1 - F along the trajectory, clipped at zero."""
    return ObservableSeries(
        trajectory.times, np.clip(1.0 - trajectory.fidelities, 0.0, None), label
    )


def width_curve(trajectory: Trajectory, label: str = "") -> ObservableSeries:
    """Density standard deviation along the trajectory."""
    return ObservableSeries(trajectory.times, trajectory.widths.copy(), label)


def norm_drift_curve(trajectory: Trajectory, label: str = "") -> ObservableSeries:
    """|norm(t) - norm(0)| along the trajectory; a unitarity check."""
    drift = np.abs(trajectory.norms - trajectory.norms[0])
    return ObservableSeries(trajectory.times, drift, label)


def free_gaussian_width(sigma0: float, t: np.ndarray | float) -> np.ndarray | float:
    """Closed-form density width of a free Gaussian that starts at sigma0."""
    if not sigma0 > 0.0:
        raise ValueError(f"sigma0 must be positive, got {sigma0}")
    return sigma0 * np.sqrt(1.0 + (np.asarray(t, dtype=float) / (2.0 * sigma0**2)) ** 2)
