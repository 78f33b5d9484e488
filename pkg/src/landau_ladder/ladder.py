"""Ladder operators that shift both quantum numbers of a Landau state at once.

Acting on psi_{n m}, the raising operator produces
sqrt((n+1)(n+|m|+1)(n+|m|+2)) psi_{n+1, m+1} and the lowering operator
produces sqrt(n (n+|m|) (n+|m|-1)) psi_{n-1, m-1}; lowering annihilates
every n = 0 state.  The angular factor e^{+/- i phi} is exact index
bookkeeping, so everything numerical happens on the radial profile
R(zeta).  The radial actions, written with the removable (n+1-zeta) and
(n-zeta) factors multiplied through so there is nothing singular to
cancel, are

    D+ R = -(n+1-zeta) sqrt(zeta) R'
           + (n+1-zeta) sqrt(zeta) (1/2 - (n+|m|/2+1)/zeta) R
           + (n+1)(n+|m|+1) R / sqrt(zeta)

    D- R =  (n-zeta) sqrt(zeta) R'
           - (n-zeta) sqrt(zeta) (-1/2 + |m|/(2 zeta)) R
           + n (|m|+zeta) R / sqrt(zeta)

The factored forms (with the explicit rational coefficient) are kept in
``factored_radial_action`` as a cross-check away from their removable
singularities.

The coefficient identities above are exact for the validated domain:
raising from m >= 0, lowering from m >= 1 (plus the trivial annihilation
at n = 0).  Outside it the operators still evaluate mechanically but are
not asserted against a target state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .quadrature import QuadratureRule
from .states import FieldConfig, LandauState, QuantumNumbers, radial_value

__all__ = [
    "LadderDirection",
    "LadderApplication",
    "LadderVerification",
    "ANALYTIC",
    "FINITE_DIFFERENCE",
    "raise_coefficient",
    "lower_coefficient",
    "target_numbers",
    "in_validated_domain",
    "radial_derivative",
    "apply_ladder",
    "factored_radial_action",
    "verify_ladder",
]

ANALYTIC = "analytic"
FINITE_DIFFERENCE = "fd"

# analytic radial derivatives divide by zeta; refuse essentially-zero arguments
_MIN_ANALYTIC_ZETA = 1e-12


class LadderDirection(Enum):
    RAISE = "raise"
    LOWER = "lower"


def _coerce_direction(direction) -> LadderDirection:
    if isinstance(direction, LadderDirection):
        return direction
    return LadderDirection(direction)


def raise_coefficient(qn: QuantumNumbers) -> float:
    """sqrt((n+1)(n+|m|+1)(n+|m|+2))."""
    n, am = qn.n, abs(qn.m)
    return math.sqrt((n + 1.0) * (n + am + 1.0) * (n + am + 2.0))


def lower_coefficient(qn: QuantumNumbers) -> float:
    """sqrt(n (n+|m|) (n+|m|-1)); exactly zero at n = 0."""
    if qn.n == 0:
        return 0.0
    n, am = qn.n, abs(qn.m)
    return math.sqrt(n * (n + am) * (n + am - 1.0))


def target_numbers(qn: QuantumNumbers, direction) -> QuantumNumbers | None:
    """Quantum numbers after one ladder step; None when lowering annihilates."""
    d = _coerce_direction(direction)
    if d is LadderDirection.RAISE:
        return QuantumNumbers(qn.n + 1, qn.m + 1)
    if qn.n == 0:
        return None
    return QuantumNumbers(qn.n - 1, qn.m - 1)


def in_validated_domain(qn: QuantumNumbers, direction) -> bool:
    """Whether the coefficient identity is asserted for this source state."""
    d = _coerce_direction(direction)
    if d is LadderDirection.RAISE:
        return qn.m >= 0
    return qn.m >= 1 or qn.n == 0


@dataclass(frozen=True)
class LadderApplication:
    """Result of applying one ladder operator to sampled radial profiles."""

    source: QuantumNumbers
    target: QuantumNumbers | None
    direction: LadderDirection
    coefficient: float
    samples: tuple[tuple[float, float], ...]

    def values(self) -> np.ndarray:
        return np.array([v for _, v in self.samples])

    def zetas(self) -> np.ndarray:
        return np.array([z for z, _ in self.samples])


def _coerce_zetas(zetas) -> np.ndarray:
    z = np.atleast_1d(np.asarray(zetas, dtype=float))
    if z.ndim != 1 or z.size == 0:
        raise ValueError("zetas must be a non-empty 1-d collection")
    if not np.all(np.isfinite(z)) or np.any(z <= 0):
        raise ValueError("zetas must be finite and > 0")
    return z


def radial_derivative(state: LandauState, zeta, mode: str = ANALYTIC):
    """dR/dzeta, either from the Laguerre derivative identity or central differences.

    Finite differences use step h = 1e-6 max(1, zeta), so zeta must exceed h.
    """
    from .laguerre import LaguerreIndex, laguerre_deriv, laguerre_eval

    z = np.asarray(zeta, dtype=float)
    n, am = state.qn.n, abs(state.qn.m)
    if mode == ANALYTIC:
        if np.any(z < _MIN_ANALYTIC_ZETA):
            raise ValueError(f"analytic mode needs zeta >= {_MIN_ANALYTIC_ZETA}")
        idx = LaguerreIndex(n, float(am))
        base = state.norm_const * np.exp(-z / 2.0) * np.power(z, am / 2.0)
        poly = laguerre_eval(idx, z)
        dpoly = laguerre_deriv(idx, z)
        return base * ((am / (2.0 * z) - 0.5) * poly + dpoly)
    if mode == FINITE_DIFFERENCE:
        h = 1e-6 * np.maximum(1.0, z)
        if np.any(z - h <= 0):
            raise ValueError("finite-difference mode needs zeta larger than its step")
        return (radial_value(state, z + h) - radial_value(state, z - h)) / (2.0 * h)
    raise ValueError(f"unknown mode {mode!r}")


def apply_ladder(state: LandauState, direction, zetas, mode: str = ANALYTIC) -> LadderApplication:
    """Sample D+/- R at the given zeta points.

    Returns the coefficient and target quantum numbers alongside the raw
    samples; on the validated domain the samples equal
    coefficient * R_target(zeta) to rounding.
    """
    d = _coerce_direction(direction)
    z = _coerce_zetas(zetas)
    n, am = state.qn.n, abs(state.qn.m)

    r = radial_value(state, z)
    rp = radial_derivative(state, z, mode=mode)
    s = np.sqrt(z)

    if d is LadderDirection.RAISE:
        w = (n + 1.0 - z) * s
        vals = -w * rp + w * (0.5 - (n + am / 2.0 + 1.0) / z) * r \
            + (n + 1.0) * (n + am + 1.0) * r / s
        coefficient = raise_coefficient(state.qn)
    else:
        w = (n - z) * s
        vals = w * rp - w * (-0.5 + am / (2.0 * z)) * r + n * (am + z) * r / s
        coefficient = lower_coefficient(state.qn)

    return LadderApplication(
        source=state.qn,
        target=target_numbers(state.qn, d),
        direction=d,
        coefficient=coefficient,
        samples=tuple(zip(z.tolist(), vals.tolist())),
    )


def factored_radial_action(state: LandauState, direction, zetas, mode: str = ANALYTIC) -> np.ndarray:
    """The same radial action written with its rational coefficient left in place.

    Singular at zeta = n+1 (raise) / zeta = n (lower); callers must keep
    away from those points.  Used as an independent cross-check of the
    expanded form.
    """
    d = _coerce_direction(direction)
    z = _coerce_zetas(zetas)
    n, am = state.qn.n, abs(state.qn.m)
    r = radial_value(state, z)
    rp = radial_derivative(state, z, mode=mode)
    s = np.sqrt(z)
    if d is LadderDirection.RAISE:
        coeff = 0.5 - (n + am / 2.0 + 1.0) / z + (n + 1.0) * (n + am + 1.0) / (z * (n + 1.0 - z))
        return (n + 1.0 - z) * s * (-rp + coeff * r)
    coeff = -0.5 + am / (2.0 * z) - n * (am + z) / (z * (n - z))
    return (n - z) * s * (rp - coeff * r)


@dataclass(frozen=True)
class LadderVerification:
    """Measured deviations of one ladder application from its exact target."""

    source: QuantumNumbers
    direction: LadderDirection
    field: FieldConfig
    coefficient: float
    pointwise_deviation: float
    overlap_deviation: float

    @property
    def max_deviation(self) -> float:
        return max(self.pointwise_deviation, self.overlap_deviation)


def verify_ladder(qn: QuantumNumbers, field_config: FieldConfig, direction, rule: QuadratureRule) -> LadderVerification:
    """Check one ladder application against coefficient * R_target on the rule's nodes.

    Pointwise deviation is max |D R - c R_target| normalized by the largest
    |c R_target| over the nodes (by norm_const when the application
    annihilates).  Overlap deviation is |<psi_target, L psi_source> - c|,
    with the inner product evaluated on the same rule.  Raises for source
    states outside the validated domain (raise needs m >= 0, lower needs
    m >= 1).
    """
    d = _coerce_direction(direction)
    if d is LadderDirection.RAISE and qn.m < 0:
        raise ValueError("raising is validated only for m >= 0")
    if d is LadderDirection.LOWER and qn.m < 1:
        raise ValueError("lowering is validated only for m >= 1")

    state = LandauState(qn, field_config)
    app = apply_ladder(state, d, rule.nodes)
    vals = app.values()

    if app.target is None:
        # annihilation: the only content is that the samples vanish
        pointwise = float(np.max(np.abs(vals))) / state.norm_const
        return LadderVerification(
            source=qn,
            direction=d,
            field=field_config,
            coefficient=app.coefficient,
            pointwise_deviation=pointwise,
            overlap_deviation=0.0,
        )

    target_state = LandauState(app.target, field_config)
    nodes = rule.nodes
    if float(nodes.max()) > 700.0:
        raise ValueError("rule order too large: overlap integrand would overflow")
    reference = app.coefficient * radial_value(target_state, nodes)
    scale = float(np.max(np.abs(reference)))
    pointwise = float(np.max(np.abs(vals - reference))) / scale

    # fold the rule's weight back out so the product of radial profiles
    # (which already carries e^{-zeta} zeta^{|m_target|}) integrates exactly
    integrand = (
        radial_value(target_state, nodes)
        * vals
        * np.exp(nodes)
        * np.power(nodes, -rule.alpha)
        / (2.0 * field_config.sigma)
    )
    ov = math.fsum((rule.weights * integrand).tolist())
    return LadderVerification(
        source=qn,
        direction=d,
        field=field_config,
        coefficient=app.coefficient,
        pointwise_deviation=pointwise,
        overlap_deviation=abs(ov - app.coefficient),
    )
