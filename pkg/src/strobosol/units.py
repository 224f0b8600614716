"""Conversion between laboratory parameters and the dimensionless map.

The kicked equation has a single dimensionless parameter

    epsilon = m * lam^2 / (hbar * T)

where T is the kick period and lam is the effective one-dimensional
interaction length accumulated per kick.  For a cigar-shaped cold-atom
cloud with N atoms, scattering length a_s, transverse confinement
length a_perp and kick duration dt,

    lam = 2 * N * hbar * a_s * dt / (m * a_perp^2).

Physical quantities map onto dimensionless ones by pure rescaling:

    x = (m*lam / (hbar*T))   * x_phys
    t = (m*lam^2 / (hbar*T^2)) * t_phys
    psi = sqrt(hbar*T / (m*lam)) * psi_phys

so kick instants t_phys = n*T land on t = n*epsilon, and the L2 norm of
a one-dimensional amplitude is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass

HBAR = 1.054571817e-34  # J s
ATOMIC_MASS_KG = 1.66053906660e-27  # kg


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0.0:
            raise ValueError(f"{name} must be positive, got {value}")


@dataclass(frozen=True)
class PhysicalParams:
    """Mass, interaction length per kick, and kick period, all SI."""

    mass_kg: float
    kick_length_m: float
    period_s: float

    def __post_init__(self) -> None:
        _require_positive(
            mass_kg=self.mass_kg,
            kick_length_m=self.kick_length_m,
            period_s=self.period_s,
        )


@dataclass(frozen=True)
class ExperimentalParams:
    """Cold-atom quantities that determine the interaction length."""

    atom_count: float
    scattering_length_m: float
    transverse_length_m: float
    kick_duration_s: float

    def __post_init__(self) -> None:
        _require_positive(
            atom_count=self.atom_count,
            scattering_length_m=self.scattering_length_m,
            transverse_length_m=self.transverse_length_m,
            kick_duration_s=self.kick_duration_s,
        )


def lambda_from_experiment(exp: ExperimentalParams, mass_kg: float) -> float:
    """Interaction length per kick from cold-atom parameters, in meters."""
    _require_positive(mass_kg=mass_kg)
    return (
        2.0
        * exp.atom_count
        * HBAR
        * exp.scattering_length_m
        * exp.kick_duration_s
        / (mass_kg * exp.transverse_length_m**2)
    )


def epsilon_from_physical(params: PhysicalParams) -> float:
    """The dimensionless kick interval for a physical parameter set."""
    return params.mass_kg * params.kick_length_m**2 / (HBAR * params.period_s)


@dataclass(frozen=True)
class ScaleFactors:
    """Multipliers taking SI quantities to dimensionless ones.

    position is 1/m, time is 1/s, amplitude is sqrt(m); dividing by them
    converts back.
    """

    position: float
    time: float
    amplitude: float


def scale_factors(params: PhysicalParams) -> ScaleFactors:
    x_scale = params.mass_kg * params.kick_length_m / (HBAR * params.period_s)
    return ScaleFactors(
        position=x_scale,
        time=x_scale * params.kick_length_m / params.period_s,
        amplitude=1.0 / x_scale**0.5,
    )


def rescale(params: PhysicalParams, position_m, time_s, amplitude=None):
    """Map physical (x, t[, psi]) to dimensionless values.

    Accepts scalars or arrays; returns a tuple in the same order, with
    the amplitude omitted when not given.
    """
    s = scale_factors(params)
    out = (position_m * s.position, time_s * s.time)
    if amplitude is None:
        return out
    return out + (amplitude * s.amplitude,)


def rescale_back(params: PhysicalParams, position, time, amplitude=None):
    """Inverse of rescale: dimensionless (x, t[, psi]) to SI."""
    s = scale_factors(params)
    out = (position / s.position, time / s.time)
    if amplitude is None:
        return out
    return out + (amplitude / s.amplitude,)
