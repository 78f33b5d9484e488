"""Eigenstates: exact energies, normalization, orthogonality, and the radial ODE."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from landau_ladder import (
    FieldConfig,
    LaguerreIndex,
    LandauState,
    QuantumNumbers,
    build_rule,
    default_order,
    energy,
    laguerre_deriv,
    laguerre_eval,
    laguerre_second_deriv,
    ode_operator,
    ode_residual,
    overlap,
    radial_value,
    spectral_params,
    wavefunction_value,
)


def test_energy_pinned_values():
    assert energy(QuantumNumbers(0, 0), FieldConfig(1.0)) == 0.5
    assert energy(QuantumNumbers(1, 1), FieldConfig(1.0)) == 2.5
    assert energy(QuantumNumbers(0, -1), FieldConfig(1.0)) == 0.5
    assert energy(QuantumNumbers(1, 2), FieldConfig(1.0)) == 3.5
    assert energy(QuantumNumbers(2, -3), FieldConfig(2.0)) == 5.0


def test_negative_m_degeneracy_is_exact():
    # E = B(n + 1/2) for every m <= 0, in exact floating point for any B
    for b in (0.5, 1.0, 2.0, 0.7, 3.0):
        fc = FieldConfig(b)
        for n in range(11):
            base = energy(QuantumNumbers(n, 0), fc)
            for m in range(-10, 1):
                assert energy(QuantumNumbers(n, m), fc) == base


def test_level_spacing_exact_for_power_of_two_fields():
    for b in (0.5, 1.0, 2.0):
        fc = FieldConfig(b)
        for m in (-5, -1, 0, 2, 7):
            for n in range(10):
                step = energy(QuantumNumbers(n + 1, m), fc) - energy(QuantumNumbers(n, m), fc)
                assert step == b


def test_level_spacing_general_fields_within_ulps():
    fc = FieldConfig(0.7)
    for m in (-3, 0, 4):
        for n in range(10):
            lo = energy(QuantumNumbers(n, m), fc)
            hi = energy(QuantumNumbers(n + 1, m), fc)
            # the subtraction is exact; the error budget is the two roundings
            assert abs((hi - lo) - 0.7) <= 8.0 * math.ulp(max(abs(lo), abs(hi), 0.7))


def test_spectral_params_recover_n_exactly():
    for b in (0.5, 1.0, 2.0):
        fc = FieldConfig(b)
        for n in range(11):
            for m in range(-10, 11):
                sp = spectral_params(QuantumNumbers(n, m), fc)
                assert sp.beta == 2.0 * energy(QuantumNumbers(n, m), fc)
                assert sp.lam - (abs(m) + 1) / 2 == n


def test_norm_const_matches_factorials():
    fc = FieldConfig(2.0)
    assert abs(LandauState(QuantumNumbers(0, 0), fc).norm_const - math.sqrt(2.0)) <= 1e-15
    for n, m in ((1, 1), (2, 3), (5, -4), (8, 8)):
        want = math.sqrt(2.0 * fc.sigma * math.factorial(n) / math.factorial(n + abs(m)))
        got = LandauState(QuantumNumbers(n, m), fc).norm_const
        assert abs(got - want) <= 1e-13 * want


def test_radial_value_closed_forms():
    fc = FieldConfig(2.0)
    ground = LandauState(QuantumNumbers(0, 0), fc)
    assert radial_value(ground, 0.0) == ground.norm_const
    # R_{1,1} = sqrt(2 sigma / 2) e^{-z/2} sqrt(z) (2 - z)
    state = LandauState(QuantumNumbers(1, 1), fc)
    for z in (0.25, 1.0, 2.0, 5.0):
        want = math.exp(-z / 2.0) * math.sqrt(z) * (2.0 - z)
        assert abs(radial_value(state, z) - want) <= 1e-14 * (1.0 + abs(want))


def test_wavefunction_origin_values():
    fc = FieldConfig(2.0)
    psi = wavefunction_value(LandauState(QuantumNumbers(0, 0), fc), 0.0, 0.0)
    assert abs(psi - 1.0 / math.sqrt(math.pi)) <= 1e-15
    assert psi.imag == 0.0
    assert wavefunction_value(LandauState(QuantumNumbers(0, 1), fc), 0.0, 0.3) == 0j


@given(
    rho=st.floats(min_value=0.0, max_value=8.0),
    phi=st.floats(min_value=-10.0, max_value=10.0),
    n=st.integers(min_value=0, max_value=6),
    m=st.integers(min_value=-6, max_value=6),
)
@settings(max_examples=150, deadline=None)
def test_phase_never_changes_magnitude(rho, phi, n, m):
    state = LandauState(QuantumNumbers(n, m), FieldConfig(1.0))
    here = wavefunction_value(state, rho, phi)
    reference = wavefunction_value(state, rho, 0.0)
    assert abs(abs(here) - abs(reference)) <= 1e-15 * (1.0 + abs(reference))


def test_conjugation_flips_m():
    state_plus = LandauState(QuantumNumbers(2, 3), FieldConfig(1.0))
    state_minus = LandauState(QuantumNumbers(2, -3), FieldConfig(1.0))
    rho = np.linspace(0.0, 5.0, 41)
    phi = np.linspace(-math.pi, math.pi, 41)
    a = wavefunction_value(state_plus, rho, phi)
    b = wavefunction_value(state_minus, rho, phi)
    assert np.max(np.abs(b - np.conj(a))) == 0.0


def test_orthonormality_block():
    fc = FieldConfig(1.0)
    order = default_order(5, 4)
    for m in range(-4, 5):
        rule = build_rule(float(abs(m)), order)
        states = [LandauState(QuantumNumbers(n, m), fc) for n in range(6)]
        for i, a in enumerate(states):
            for j, b in enumerate(states):
                want = 1.0 if i == j else 0.0
                assert abs(overlap(a, b, rule) - want) <= 1e-12


def test_overlap_angular_selection_is_exact_zero():
    fc = FieldConfig(1.0)
    rule = build_rule(0.0, 16)
    a = LandauState(QuantumNumbers(1, 2), fc)
    b = LandauState(QuantumNumbers(1, 3), fc)
    assert overlap(a, b, rule) == 0j


def test_overlap_rejects_mismatched_fields():
    rule = build_rule(0.0, 16)
    a = LandauState(QuantumNumbers(0, 0), FieldConfig(1.0))
    b = LandauState(QuantumNumbers(0, 0), FieldConfig(2.0))
    with pytest.raises(ValueError):
        overlap(a, b, rule)


def test_ode_residual_small_on_eigenstates():
    nodes = build_rule(0.0, 32).nodes
    for n in range(8):
        for m in range(-6, 7):
            qn = QuantumNumbers(n, m)
            idx = LaguerreIndex(n, float(abs(m)))
            scale = (
                1.0
                + np.abs(laguerre_eval(idx, nodes))
                + np.abs(laguerre_deriv(idx, nodes))
                + np.abs(laguerre_second_deriv(idx, nodes))
            )
            assert np.max(np.abs(ode_residual(qn, nodes)) / scale) <= 1e-9


def test_ode_detects_perturbation():
    # G -> G + eps zeta shifts G and G' but not G''; the operator must notice
    qn = QuantumNumbers(1, 0)
    z = 1.0
    eps = 1e-3
    idx = LaguerreIndex(1, 0.0)
    g = laguerre_eval(idx, z) + eps * z
    gp = laguerre_deriv(idx, z) + eps
    gpp = laguerre_second_deriv(idx, z)
    assert abs(ode_operator(qn, z, g, gp, gpp)) > 1e-4


def test_ode_residual_rejects_nonpositive_zeta():
    with pytest.raises(ValueError):
        ode_residual(QuantumNumbers(1, 0), 0.0)
    with pytest.raises(ValueError):
        ode_residual(QuantumNumbers(1, 0), np.array([1.0, -2.0]))


def test_field_config_validation():
    with pytest.raises(ValueError):
        FieldConfig(0.0)
    with pytest.raises(ValueError):
        FieldConfig(-1.0)
    with pytest.raises(ValueError):
        FieldConfig(float("nan"))
    assert FieldConfig(3.0).sigma == 1.5


def test_quantum_number_validation():
    with pytest.raises(ValueError):
        QuantumNumbers(-1, 0)
    with pytest.raises(ValueError):
        QuantumNumbers(0.5, 0)
    with pytest.raises(ValueError):
        QuantumNumbers(0, 1.5)
    qn = QuantumNumbers(3, -2)
    assert (qn.n, qn.m) == (3, -2)
