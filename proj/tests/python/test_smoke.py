"""Smoke tests for the python bindings."""

import math

import pytest

import njcsim as nj


def test_critical_detunings():
    p = nj.SingleModeParams(1.0, 1e-3, 1e-4, 0.0)
    assert nj.critical_detuning_single(30.0, p) == pytest.approx(0.016061, abs=1e-12)
    p2 = nj.SingleModeParams(1.0, 1e-3, 1e-3, 0.0)
    assert nj.critical_detuning_single(30.0, p2) == pytest.approx(0.061061, abs=1e-12)
    q = nj.TwoModeParams(0.5, 0.5, 2e-3, 2e-3, 0.0)
    assert nj.critical_detuning_two(3.0, q) == pytest.approx(0.0161, abs=1e-4)


def test_spectral_quantities():
    assert nj.eta_single(3, 0.0) == pytest.approx(2.0)
    assert nj.eta_two(2, 2e-3) == pytest.approx(3.012)
    p = nj.SingleModeParams(1.0, 1e-3, 0.0, 0.0)
    assert nj.rabi_single(0, p) == pytest.approx(2e-3)


def test_states_and_means():
    f = nj.coherent(math.sqrt(30.0), 96)
    assert nj.mean_photon_number(f) == pytest.approx(30.0, abs=1e-9)
    assert f.truncated_tail < 1e-12

    pc = nj.pair_coherent(1.778, 40)
    assert nj.mean_photon_number(pc) == pytest.approx(3.0, abs=0.05)

    with pytest.raises(ValueError):
        nj.coherent(math.sqrt(30.0), 20)  # tail too fat for the default budget


def test_single_mode_evolution():
    f = nj.coherent(math.sqrt(30.0), 96)
    p = nj.SingleModeParams(1.0, 1e-3, 0.0, 0.0)
    a = nj.evolve_single(f, p, 1.0 / 1e-3)
    assert a.norm_sq() == pytest.approx(1.0, abs=1e-12)
    assert nj.inversion_single(a) == pytest.approx(0.067216042773, abs=1e-9)
    rho = nj.atomic_density_single(a)
    w = rho.ee - rho.gg
    L = nj.linear_entropy_single(a)
    coh = nj.coherence_single(a)
    assert L == pytest.approx(1.0 - w * w - 4.0 * coh * coh, abs=1e-12)


def test_two_mode_measures():
    pc = nj.pair_coherent(1.778, 19)
    p = nj.TwoModeParams(0.5, 0.5, 2e-3, 0.0, 0.0)
    rec = nj.measures_at(nj.evolve_two(pc, p, 1.0 / 2e-3))
    assert rec.tangle_af1_f2 == rec.tangle_af2_f1
    assert rec.tangle_a_ff == pytest.approx(0.210987799680, abs=1e-9)
    assert rec.relative_entropy >= 0.0

    mean = nj.mean_measures(pc, p, 2.0 / 2e-3, 0.005 / 2e-3)
    assert 0.0 <= mean.tangle_a_ff <= 1.0


def test_oracle_agreement():
    f = nj.coherent(math.sqrt(5.0), 60)
    p = nj.SingleModeParams(1.0, 1e-3, 1e-3, 0.0)
    t = 10.0 / 1e-3
    brute = nj.oracle_evolve_single(f, p, t)
    closed = nj.evolve_single(f, p, t)
    stacked = list(closed.c_e) + list(closed.c_g)
    dev = max(abs(abs(x) - abs(y)) for x, y in zip(stacked, brute))
    assert dev < 1e-8


def test_algebra_and_presets():
    assert nj.check_algebra(40, 0.0, 38) < 1e-12
    names = nj.preset_names()
    assert "fig1a" in names and "fig9f" in names
    assert "model=two" in nj.describe_preset("fig8a")
