"""Simulator and analysis toolkit for the periodically kicked cubic
Schrodinger equation, including its stroboscopically invariant soliton
profiles."""

__version__ = "1.0.0"

from .core import (
    Grid,
    WaveFunction,
    boost,
    edge_amplitude,
    from_samples,
    inner_product,
    make_grid,
    moments,
    norm_sq,
    normalize,
    spectral_derivative,
    translate,
    width,
)
from .diagnostics import (
    ObservableSeries,
    comoving_fidelity,
    fidelity,
    fidelity_error_curve,
    free_gaussian_width,
    norm_drift_curve,
    width_curve,
)
from .propagator import (
    GAUSSIAN,
    INSTANTANEOUS,
    RECORD_BOTH,
    RECORD_HALVES,
    RECORD_KICKS,
    KickModel,
    RecordSpec,
    Trajectory,
    evolve,
    free_evolve,
    free_step,
    kick,
    kicked_step,
)
from .refiner import (
    RefinerOptions,
    RefinerReport,
    extract_alpha,
    find_fixed_point,
    fixed_point_residual,
)
from .soliton import (
    SolitonParams,
    matched_gaussian,
    phi0,
    phi1,
    residual_phi0,
    residual_phi1,
    soliton_state,
)
from .units import (
    ExperimentalParams,
    PhysicalParams,
    epsilon_from_physical,
    lambda_from_experiment,
    rescale,
    rescale_back,
    scale_factors,
)

__all__ = [
    "Grid",
    "WaveFunction",
    "boost",
    "edge_amplitude",
    "from_samples",
    "inner_product",
    "make_grid",
    "moments",
    "norm_sq",
    "normalize",
    "spectral_derivative",
    "translate",
    "width",
    "ObservableSeries",
    "comoving_fidelity",
    "fidelity",
    "fidelity_error_curve",
    "free_gaussian_width",
    "norm_drift_curve",
    "width_curve",
    "GAUSSIAN",
    "INSTANTANEOUS",
    "RECORD_BOTH",
    "RECORD_HALVES",
    "RECORD_KICKS",
    "KickModel",
    "RecordSpec",
    "Trajectory",
    "evolve",
    "free_evolve",
    "free_step",
    "kick",
    "kicked_step",
    "RefinerOptions",
    "RefinerReport",
    "extract_alpha",
    "find_fixed_point",
    "fixed_point_residual",
    "SolitonParams",
    "matched_gaussian",
    "phi0",
    "phi1",
    "residual_phi0",
    "residual_phi1",
    "soliton_state",
    "ExperimentalParams",
    "PhysicalParams",
    "epsilon_from_physical",
    "lambda_from_experiment",
    "rescale",
    "rescale_back",
    "scale_factors",
]
