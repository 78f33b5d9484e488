"""Velocity operators on a Cartesian grid and their commutation/Hamiltonian checks.

With charge -1 in the symmetric gauge, v = -i grad + A where
A = (B/2)(-y, x).  Derivatives are second-order central differences, so a
single application cannot fill the outermost ring of the grid and two
chained applications (commutators, the Hamiltonian) cannot fill two.  The
outermost ring of every operator output is therefore zeroed as an invalid
marker, and all reductions (maxima, norms) run over the interior obtained
by discarding the outermost two rings.

Discrete identities checked here: [v_x, v_y] f + i B f vanishes like h^2,
H = (v_x^2 + v_y^2)/2 applied to an exact eigenstate leaves an O(h^2)
residual, and the rescaled pair Q = v_y / sqrt(B), P = v_x / sqrt(B)
satisfies [Q, P] = i with a residual that is exactly the commutator
residual divided by B.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .states import FieldConfig, LandauState, wavefunction_value

__all__ = [
    "CartesianGrid",
    "GridField",
    "BOUNDARY_RINGS",
    "default_half_extent",
    "sample_state",
    "velocity_apply",
    "commutator_residual",
    "qp_commutator_residual",
    "hamiltonian_apply",
    "qp_hamiltonian_apply",
    "eigen_residual",
    "grid_norm",
]

# rings discarded from every reduction; two chained stencils invalidate two
BOUNDARY_RINGS = 2

_MIN_POINTS = 33


@dataclass(frozen=True)
class CartesianGrid:
    """Square grid on [-L, L]^2 with an odd number of points per axis."""

    half_extent: float
    points_per_axis: int
    spacing: float = field(init=False)

    def __post_init__(self):
        l = float(self.half_extent)
        n = self.points_per_axis
        if not math.isfinite(l) or l <= 0:
            raise ValueError(f"half_extent must be finite and > 0, got {self.half_extent!r}")
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
            raise ValueError(f"points_per_axis must be an integer, got {n!r}")
        if n < _MIN_POINTS or n % 2 == 0:
            raise ValueError(f"points_per_axis must be odd and >= {_MIN_POINTS}, got {n}")
        object.__setattr__(self, "half_extent", l)
        object.__setattr__(self, "points_per_axis", int(n))
        object.__setattr__(self, "spacing", 2.0 * l / (int(n) - 1))

    def axis(self) -> np.ndarray:
        return np.linspace(-self.half_extent, self.half_extent, self.points_per_axis)


@dataclass(frozen=True, eq=False)
class GridField:
    """Complex samples over a CartesianGrid, indexed values[ix, iy]."""

    grid: CartesianGrid
    values: np.ndarray

    def __post_init__(self):
        n = self.grid.points_per_axis
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (n, n):
            raise ValueError(f"values must have shape ({n}, {n}), got {v.shape}")
        if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
            raise ValueError("values must be finite")
        object.__setattr__(self, "values", v)

    def interior(self) -> np.ndarray:
        b = BOUNDARY_RINGS
        return self.values[b:-b, b:-b]


def default_half_extent(state: LandauState) -> float:
    """6 max(1, sqrt((2n+|m|+1)/sigma)): comfortably past the classical turning radius."""
    n, am = state.qn.n, abs(state.qn.m)
    return 6.0 * max(1.0, math.sqrt((2.0 * n + am + 1.0) / state.field.sigma))


def sample_state(state: LandauState, grid: CartesianGrid) -> GridField:
    """psi sampled on the grid; the origin gets phi = 0 by the atan2 convention."""
    ax = grid.axis()
    x, y = np.meshgrid(ax, ax, indexing="ij")
    rho = np.hypot(x, y)
    phi = np.arctan2(y, x)
    return GridField(grid=grid, values=wavefunction_value(state, rho, phi))


def _zero_ring(values: np.ndarray) -> np.ndarray:
    values[0, :] = 0.0
    values[-1, :] = 0.0
    values[:, 0] = 0.0
    values[:, -1] = 0.0
    return values


def velocity_apply(axis: str, field_config: FieldConfig, f: GridField) -> GridField:
    """(-i d/daxis + A_axis) f with central differences; outer ring zeroed as invalid."""
    if axis not in ("x", "y"):
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    grid = f.grid
    v = f.values
    h = grid.spacing
    ax = grid.axis()

    deriv = np.zeros_like(v)
    if axis == "x":
        deriv[1:-1, :] = (v[2:, :] - v[:-2, :]) / (2.0 * h)
        gauge = -0.5 * field_config.B * ax[np.newaxis, :]  # A_x = -B y / 2
    else:
        deriv[:, 1:-1] = (v[:, 2:] - v[:, :-2]) / (2.0 * h)
        gauge = 0.5 * field_config.B * ax[:, np.newaxis]  # A_y = +B x / 2
    out = -1j * deriv + gauge * v
    return GridField(grid=grid, values=_zero_ring(out))


def commutator_residual(field_config: FieldConfig, f: GridField) -> float:
    """max |[v_x, v_y] f + i B f| / max |f| over the interior; O(h^2) for smooth f."""
    vx_vy = velocity_apply("x", field_config, velocity_apply("y", field_config, f))
    vy_vx = velocity_apply("y", field_config, velocity_apply("x", field_config, f))
    g = GridField(
        grid=f.grid,
        values=vx_vy.values - vy_vx.values + 1j * field_config.B * f.values,
    )
    denom = float(np.max(np.abs(f.interior())))
    if denom == 0.0:
        raise ValueError("field vanishes on the interior")
    return float(np.max(np.abs(g.interior()))) / denom


def qp_commutator_residual(field_config: FieldConfig, f: GridField) -> float:
    """Residual of [Q, P] f - i f for Q = v_y/sqrt(B), P = v_x/sqrt(B).

    Algebraically (and in the arithmetic actually performed) this is the
    commutator residual divided by B.
    """
    return commutator_residual(field_config, f) / field_config.B


def hamiltonian_apply(field_config: FieldConfig, f: GridField) -> GridField:
    """H f = (v_x(v_x f) + v_y(v_y f)) / 2; valid on the interior margin."""
    vxx = velocity_apply("x", field_config, velocity_apply("x", field_config, f))
    vyy = velocity_apply("y", field_config, velocity_apply("y", field_config, f))
    return GridField(grid=f.grid, values=0.5 * (vxx.values + vyy.values))


def qp_hamiltonian_apply(field_config: FieldConfig, f: GridField) -> GridField:
    """(B/2)(Q^2 + P^2) f: the sqrt(B) rescalings cancel, so this IS hamiltonian_apply."""
    return hamiltonian_apply(field_config, f)


def eigen_residual(field_config: FieldConfig, f: GridField, energy_value: float) -> float:
    """||H f - E f|| / ||f|| in the interior Riemann norm; O(h^2) for exact eigenstates."""
    hf = hamiltonian_apply(field_config, f)
    resid = hf.interior() - energy_value * f.interior()
    denom = math.sqrt(float(np.sum(np.abs(f.interior()) ** 2)))
    if denom == 0.0:
        raise ValueError("field vanishes on the interior")
    return math.sqrt(float(np.sum(np.abs(resid) ** 2))) / denom


def grid_norm(f: GridField) -> float:
    """Riemann-sum L2 norm h sqrt(sum |f|^2) over the interior."""
    return f.grid.spacing * math.sqrt(float(np.sum(np.abs(f.interior()) ** 2)))
