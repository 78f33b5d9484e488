"""Finite-difference velocity operators: gauge terms, commutator, spectrum checks."""

import math

import numpy as np
import pytest

from landau_ladder import (
    BOUNDARY_RINGS,
    CartesianGrid,
    FieldConfig,
    GridField,
    LandauState,
    QuantumNumbers,
    commutator_residual,
    default_half_extent,
    eigen_residual,
    energy,
    grid_norm,
    hamiltonian_apply,
    qp_commutator_residual,
    qp_hamiltonian_apply,
    sample_state,
    velocity_apply,
)


def test_grid_geometry():
    grid = CartesianGrid(10.0, 41)
    assert grid.spacing == 0.5
    ax = grid.axis()
    assert ax[0] == -10.0 and ax[-1] == 10.0
    assert ax[20] == 0.0  # odd N puts the origin on the grid


def test_grid_validation():
    with pytest.raises(ValueError):
        CartesianGrid(0.0, 41)
    with pytest.raises(ValueError):
        CartesianGrid(10.0, 40)  # even
    with pytest.raises(ValueError):
        CartesianGrid(10.0, 31)  # too small
    with pytest.raises(ValueError):
        CartesianGrid(10.0, 41.0)


def test_grid_field_validation():
    grid = CartesianGrid(5.0, 33)
    with pytest.raises(ValueError):
        GridField(grid=grid, values=np.zeros((32, 33), dtype=complex))
    bad = np.zeros((33, 33), dtype=complex)
    bad[3, 3] = complex("nan")
    with pytest.raises(ValueError):
        GridField(grid=grid, values=bad)
    ok = GridField(grid=grid, values=np.ones((33, 33)))
    assert ok.interior().shape == (33 - 2 * BOUNDARY_RINGS, 33 - 2 * BOUNDARY_RINGS)


def test_sample_state_origin_and_conjugation():
    fc = FieldConfig(2.0)
    grid = CartesianGrid(6.0, 33)
    center = 16
    ground = sample_state(LandauState(QuantumNumbers(0, 0), fc), grid)
    assert abs(ground.values[center, center] - 1.0 / math.sqrt(math.pi)) <= 1e-15
    ring = sample_state(LandauState(QuantumNumbers(0, 1), fc), grid)
    assert ring.values[center, center] == 0j
    plus = sample_state(LandauState(QuantumNumbers(1, 2), fc), grid)
    minus = sample_state(LandauState(QuantumNumbers(1, -2), fc), grid)
    assert np.max(np.abs(minus.values - np.conj(plus.values))) == 0.0


def test_default_half_extent_scales_with_state():
    fc = FieldConfig(1.0)
    small = default_half_extent(LandauState(QuantumNumbers(0, 0), fc))
    large = default_half_extent(LandauState(QuantumNumbers(6, 8), fc))
    assert small == 6.0 * math.sqrt(2.0)
    assert large > small


def test_velocity_on_constant_field_is_pure_gauge():
    # f = 1: the derivative term vanishes, leaving A_x = -By/2 and A_y = +Bx/2
    fc = FieldConfig(1.0)
    grid = CartesianGrid(4.0, 33)
    f = GridField(grid=grid, values=np.ones((33, 33)))
    ax = grid.axis()
    vx = velocity_apply("x", fc, f).values
    vy = velocity_apply("y", fc, f).values
    for i in (1, 7, 16, 31):
        for j in (1, 9, 16, 31):
            assert vx[i, j] == -0.5 * ax[j]
            assert vy[i, j] == 0.5 * ax[i]
    # the outermost ring is marked invalid by zeroing
    assert np.all(vx[0, :] == 0) and np.all(vx[-1, :] == 0)
    assert np.all(vx[:, 0] == 0) and np.all(vx[:, -1] == 0)


def test_velocity_apply_rejects_bad_axis():
    grid = CartesianGrid(4.0, 33)
    f = GridField(grid=grid, values=np.ones((33, 33)))
    with pytest.raises(ValueError):
        velocity_apply("z", FieldConfig(1.0), f)


def test_commutator_residual_scales_h_squared():
    fc = FieldConfig(1.0)
    state = LandauState(QuantumNumbers(0, 0), fc)
    res = {}
    for points in (65, 129):
        grid = CartesianGrid(10.0, points)
        res[points] = commutator_residual(fc, sample_state(state, grid))
        assert res[points] <= 1.0 * grid.spacing**2
    order = math.log2(res[65] / res[129])
    assert abs(order - 2.0) <= 0.3


def test_eigen_residual_targets_exact_energies():
    fc = FieldConfig(1.0)
    for qn, e_exact in ((QuantumNumbers(0, 0), 0.5), (QuantumNumbers(1, 2), 3.5)):
        assert energy(qn, fc) == e_exact
        grid = CartesianGrid(10.0, 129)
        f = sample_state(LandauState(qn, fc), grid)
        at_eigenvalue = eigen_residual(fc, f, e_exact)
        off_eigenvalue = eigen_residual(fc, f, e_exact + 0.2)
        assert at_eigenvalue <= 10.0 * grid.spacing**2
        # shifting E by 0.2 must surface as a residual near 0.2
        assert off_eigenvalue > 0.15


def test_eigen_residual_convergence_order():
    fc = FieldConfig(1.0)
    for qn in (QuantumNumbers(0, 0), QuantumNumbers(1, 2)):
        e = energy(qn, fc)
        res = {}
        for points in (65, 129):
            grid = CartesianGrid(10.0, points)
            res[points] = eigen_residual(fc, sample_state(LandauState(qn, fc), grid), e)
        order = math.log2(res[65] / res[129])
        assert abs(order - 2.0) <= 0.3


def test_qp_rescaling_is_exact_for_power_of_two_field():
    fc = FieldConfig(4.0)
    grid = CartesianGrid(6.0, 65)
    f = sample_state(LandauState(QuantumNumbers(0, 0), fc), grid)
    assert qp_commutator_residual(fc, f) * fc.B == commutator_residual(fc, f)


def test_qp_hamiltonian_is_the_same_operator():
    fc = FieldConfig(2.0)
    grid = CartesianGrid(6.0, 65)
    f = sample_state(LandauState(QuantumNumbers(1, 1), fc), grid)
    direct = hamiltonian_apply(fc, f)
    rescaled = qp_hamiltonian_apply(fc, f)
    assert np.array_equal(direct.values, rescaled.values)


def test_hamiltonian_is_linear():
    fc = FieldConfig(1.0)
    grid = CartesianGrid(10.0, 65)
    f = sample_state(LandauState(QuantumNumbers(0, 0), fc), grid)
    g = sample_state(LandauState(QuantumNumbers(1, 2), fc), grid)
    a, b = 0.7 - 0.3j, -1.2 + 0.5j
    combo = GridField(grid=grid, values=a * f.values + b * g.values)
    lhs = hamiltonian_apply(fc, combo).interior()
    rhs = a * hamiltonian_apply(fc, f).values + b * hamiltonian_apply(fc, g).values
    rhs_int = rhs[BOUNDARY_RINGS:-BOUNDARY_RINGS, BOUNDARY_RINGS:-BOUNDARY_RINGS]
    scale = np.max(np.abs(rhs_int))
    assert np.max(np.abs(lhs - rhs_int)) <= 1e-12 * scale


def test_grid_norm_of_normalized_state():
    fc = FieldConfig(1.0)
    grid = CartesianGrid(10.0, 129)
    f = sample_state(LandauState(QuantumNumbers(0, 0), fc), grid)
    assert abs(grid_norm(f) - 1.0) <= 1.0 * grid.spacing**2
