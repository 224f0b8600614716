import numpy as np
import pytest

import strobosol as ss
from strobosol.units import ATOMIC_MASS_KG, HBAR

# lithium-7 cloud with a microsecond Feshbach pulse every 5 ms
LI7 = ss.ExperimentalParams(
    atom_count=1e5,
    scattering_length_m=10e-9,
    transverse_length_m=10e-6,
    kick_duration_s=10e-6,
)
LI7_MASS = 7.016 * ATOMIC_MASS_KG
LI7_PERIOD = 5e-3


def li7_physical() -> ss.PhysicalParams:
    lam = ss.lambda_from_experiment(LI7, LI7_MASS)
    return ss.PhysicalParams(LI7_MASS, lam, LI7_PERIOD)


def test_lambda_from_experiment_formula():
    lam = ss.lambda_from_experiment(LI7, LI7_MASS)
    by_hand = 2.0 * 1e5 * HBAR * 10e-9 * 10e-6 / (LI7_MASS * (10e-6) ** 2)
    assert lam == pytest.approx(by_hand, rel=1e-14)
    assert lam == pytest.approx(1.81e-6, rel=1e-3)


def test_epsilon_for_lithium_cloud():
    eps = ss.epsilon_from_physical(li7_physical())
    assert eps == pytest.approx(0.0724148, abs=1e-6)
    assert abs(eps - 0.072) <= 0.002


def test_epsilon_scaling_laws():
    p = li7_physical()
    doubled_lam = ss.PhysicalParams(p.mass_kg, 2.0 * p.kick_length_m, p.period_s)
    assert ss.epsilon_from_physical(doubled_lam) == pytest.approx(
        4.0 * ss.epsilon_from_physical(p), rel=1e-14
    )
    doubled_period = ss.PhysicalParams(p.mass_kg, p.kick_length_m, 2.0 * p.period_s)
    assert ss.epsilon_from_physical(doubled_period) == pytest.approx(
        0.5 * ss.epsilon_from_physical(p), rel=1e-14
    )


def test_epsilon_invariant_under_joint_rescaling():
    # lam -> c*lam together with T -> c^2*T leaves epsilon unchanged
    p = li7_physical()
    c = 3.7
    q = ss.PhysicalParams(p.mass_kg, c * p.kick_length_m, c**2 * p.period_s)
    assert ss.epsilon_from_physical(q) == pytest.approx(
        ss.epsilon_from_physical(p), rel=1e-14
    )


def test_transverse_confinement_scaling():
    tighter = ss.ExperimentalParams(
        LI7.atom_count,
        LI7.scattering_length_m,
        2.0 * LI7.transverse_length_m,
        LI7.kick_duration_s,
    )
    assert ss.lambda_from_experiment(tighter, LI7_MASS) == pytest.approx(
        0.25 * ss.lambda_from_experiment(LI7, LI7_MASS), rel=1e-14
    )


def test_kick_instants_map_to_epsilon_lattice():
    p = li7_physical()
    eps = ss.epsilon_from_physical(p)
    n = np.arange(1, 8)
    _, t_dimless = ss.rescale(p, 0.0, n * p.period_s)
    assert np.allclose(t_dimless, n * eps, rtol=1e-12)


def test_rescale_roundtrip():
    p = li7_physical()
    x = np.linspace(-1e-4, 1e-4, 11)
    t = np.linspace(0.0, 1.0, 11)
    psi = np.exp(1j * np.linspace(0.0, 2.0, 11))
    xd, td, pd = ss.rescale(p, x, t, psi)
    xb, tb, pb = ss.rescale_back(p, xd, td, pd)
    assert np.allclose(xb, x, rtol=1e-12)
    assert np.allclose(tb, t, rtol=1e-12)
    assert np.allclose(pb, psi, rtol=1e-12)


def test_rescale_preserves_normalization():
    # a normalized physical 1D amplitude stays normalized in
    # dimensionless variables
    p = li7_physical()
    sigma = 25e-6
    x = np.linspace(-60 * sigma, 60 * sigma, 20001)
    psi = (2.0 * np.pi * sigma**2) ** -0.25 * np.exp(-(x**2) / (4.0 * sigma**2))
    assert np.trapezoid(np.abs(psi) ** 2, x) == pytest.approx(1.0, abs=1e-10)
    xd, _, pd = ss.rescale(p, x, 0.0, psi)
    assert np.trapezoid(np.abs(pd) ** 2, xd) == pytest.approx(1.0, abs=1e-10)


def test_parameter_validation():
    with pytest.raises(ValueError):
        ss.PhysicalParams(-1.0, 1e-6, 1e-3)
    with pytest.raises(ValueError):
        ss.PhysicalParams(1e-26, 0.0, 1e-3)
    with pytest.raises(ValueError):
        ss.ExperimentalParams(0.0, 1e-9, 1e-5, 1e-5)
    with pytest.raises(ValueError):
        ss.lambda_from_experiment(LI7, 0.0)
