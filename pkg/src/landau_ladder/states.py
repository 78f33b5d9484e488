"""Exact eigenstates of a charged particle in a uniform perpendicular magnetic field.

Conventions: atomic-style units (hbar = mass = 1, charge -1), symmetric
gauge with vector potential A = (B/2)(-y, x, 0), field strength B > 0 and
sigma = B/2.  In polar coordinates (rho, phi) the normalized states are

    psi_{n m}(rho, phi) = (2 pi)^{-1/2} R_{n m}(zeta) e^{i m phi},
    R_{n m}(zeta) = sqrt(2 sigma n! / (n+|m|)!) e^{-zeta/2} zeta^{|m|/2} L_n^{|m|}(zeta),

with zeta = sigma rho^2.  Energies are E = B (n + m/2 + (|m|+1)/2), so all
m <= 0 states of a given n are degenerate at B (n + 1/2).

Radial inner products reduce to integrals in zeta with measure
d zeta / (2 sigma); ``overlap`` evaluates them with a Gauss-Laguerre rule
whose weight absorbs the exponential and power factors, which makes the
integrand a polynomial and the quadrature exact at the default orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .laguerre import LaguerreIndex, laguerre_deriv, laguerre_eval, laguerre_second_deriv
from .quadrature import QuadratureRule

__all__ = [
    "FieldConfig",
    "QuantumNumbers",
    "SpectralParams",
    "LandauState",
    "energy",
    "spectral_params",
    "radial_value",
    "wavefunction_value",
    "overlap",
    "ode_operator",
    "ode_residual",
]

_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class FieldConfig:
    """Uniform field strength B > 0; sigma = B/2 is derived."""

    B: float
    sigma: float = field(init=False)

    def __post_init__(self):
        b = float(self.B)
        if not math.isfinite(b) or b <= 0:
            raise ValueError(f"field strength B must be finite and > 0, got {self.B!r}")
        object.__setattr__(self, "B", b)
        object.__setattr__(self, "sigma", b / 2.0)


@dataclass(frozen=True)
class QuantumNumbers:
    """Radial quantum number n >= 0 and angular momentum m (any integer)."""

    n: int
    m: int

    def __post_init__(self):
        for name, value in (("n", self.n), ("m", self.m)):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))


@dataclass(frozen=True)
class SpectralParams:
    """Auxiliary spectral quantities beta = 2E, tau = beta - 2 sigma m, lam = tau/(4 sigma)."""

    beta: float
    tau: float
    lam: float


def energy(qn: QuantumNumbers, field_config: FieldConfig) -> float:
    """E = B (n + m/2 + (|m|+1)/2); independent of m for m <= 0."""
    return field_config.B * (qn.n + qn.m / 2 + (abs(qn.m) + 1) / 2)


def spectral_params(qn: QuantumNumbers, field_config: FieldConfig) -> SpectralParams:
    """beta, tau, lam for the state; lam - (|m|+1)/2 recovers n."""
    beta = 2.0 * energy(qn, field_config)
    tau = beta - 2.0 * field_config.sigma * qn.m
    lam = tau / (4.0 * field_config.sigma)
    return SpectralParams(beta=beta, tau=tau, lam=lam)


@dataclass(frozen=True)
class LandauState:
    """Quantum numbers, field, and the radial normalization constant.

    norm_const = sqrt(2 sigma n! / (n+|m|)!), evaluated through log-gamma
    so large indices never overflow the factorials.
    """

    qn: QuantumNumbers
    field: FieldConfig
    norm_const: float = field(init=False)

    def __post_init__(self):
        n, am = self.qn.n, abs(self.qn.m)
        log_ratio = math.lgamma(n + 1.0) - math.lgamma(n + am + 1.0)
        nc = math.exp(0.5 * log_ratio + 0.5 * math.log(2.0 * self.field.sigma))
        object.__setattr__(self, "norm_const", nc)


def _coerce_nonneg(x, name: str):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    if np.any(arr < 0):
        raise ValueError(f"{name} must be >= 0")
    if arr.ndim == 0:
        return float(arr)
    return arr


def radial_value(state: LandauState, zeta):
    """R_{n m}(zeta) for zeta >= 0, elementwise over scalar or array input."""
    z = _coerce_nonneg(zeta, "zeta")
    n, am = state.qn.n, abs(state.qn.m)
    poly = laguerre_eval(LaguerreIndex(n, float(am)), z)
    return state.norm_const * np.exp(-z / 2.0) * np.power(z, am / 2.0) * poly


def wavefunction_value(state: LandauState, rho, phi):
    """psi_{n m}(rho, phi) for rho >= 0; complex, elementwise with broadcasting."""
    r = _coerce_nonneg(rho, "rho")
    zeta = state.field.sigma * r * r
    radial = radial_value(state, zeta)
    phase = np.exp(1j * state.qn.m * np.asarray(phi, dtype=float))
    out = radial * phase / _SQRT_2PI
    if np.ndim(out) == 0:
        return complex(out)
    return out


def overlap(a: LandauState, b: LandauState, rule: QuadratureRule) -> complex:
    """<psi_a | psi_b> over the plane; exactly zero when the angular numbers differ.

    For matching m the radial integral is evaluated with the supplied rule:
    the rule's weight supplies e^{-zeta} zeta^alpha, the residual power
    zeta^{|m| - alpha} is folded into the integrand, and the remaining
    factor is the polynomial product of the two Laguerre parts.  Use
    alpha = |m| (or alpha = 0 with a correspondingly larger order) so the
    integrand is a polynomial within the rule's exactness degree.
    """
    if a.field != b.field:
        raise ValueError("states live in different field configurations")
    if a.qn.m != b.qn.m:
        return 0j
    am = abs(a.qn.m)
    nodes = rule.nodes
    pa = laguerre_eval(LaguerreIndex(a.qn.n, float(am)), nodes)
    pb = laguerre_eval(LaguerreIndex(b.qn.n, float(am)), nodes)
    residual_power = np.power(nodes, am - rule.alpha)
    integrand = a.norm_const * b.norm_const * residual_power * pa * pb / (2.0 * a.field.sigma)
    total = math.fsum((rule.weights * integrand).tolist())
    return complex(total, 0.0)


def ode_operator(qn: QuantumNumbers, zeta, g, gp, gpp):
    """zeta g'' + (1+|m|-zeta) g' + n g, the radial operator applied to samples."""
    am = abs(qn.m)
    return zeta * gpp + (1.0 + am - zeta) * gp + qn.n * g


def ode_residual(qn: QuantumNumbers, zeta):
    """Residual of the radial equation at G = L_n^{|m|}, for zeta > 0.

    Exactly solvable states should give residuals at rounding level:
    |residual| <= 1e-9 (1 + |G| + |G'| + |G''|) across the verification
    sweeps.  Elementwise over scalar or array input.
    """
    z = np.asarray(zeta, dtype=float)
    if not np.all(np.isfinite(z)) or np.any(z <= 0):
        raise ValueError("zeta must be finite and > 0")
    if z.ndim == 0:
        z = float(z)
    idx = LaguerreIndex(qn.n, float(abs(qn.m)))
    g = laguerre_eval(idx, z)
    gp = laguerre_deriv(idx, z)
    gpp = laguerre_second_deriv(idx, z)
    return ode_operator(qn, z, g, gp, gpp)
