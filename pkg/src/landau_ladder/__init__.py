"""Landau levels in symmetric gauge: exact states, ladder operators, and their verification.

The package is organized around five numerical concerns:

- ``laguerre``: stable evaluation of associated Laguerre polynomials plus
  residual oracles for the recurrence and derivative identities.
- ``quadrature``: generalized Gauss-Laguerre rules for weight
  zeta^alpha e^{-zeta}, built from the Jacobi matrix.
- ``states``: the exact eigenstates, their energies, and radial inner
  products evaluated with those rules.
- ``ladder``: operators that raise or lower (n, m) -> (n+/-1, m+/-1) with
  closed-form coefficients, applied to sampled radial profiles.
- ``velocity``: the finite-difference velocity-operator form of the
  Hamiltonian on a Cartesian grid, with commutator and eigenvalue checks.

``verification`` turns every numerical claim above into runnable checks;
``cli`` exposes everything from the command line.
"""

from .laguerre import (
    SINGULAR_WINDOW,
    Identity,
    LaguerreIndex,
    identity_residual,
    identity_sides,
    laguerre_deriv,
    laguerre_eval,
    laguerre_second_deriv,
)
from .quadrature import MAX_ORDER, QuadratureRule, build_rule, default_order, integrate
from .states import (
    FieldConfig,
    LandauState,
    QuantumNumbers,
    SpectralParams,
    energy,
    ode_operator,
    ode_residual,
    overlap,
    radial_value,
    spectral_params,
    wavefunction_value,
)
from .ladder import (
    ANALYTIC,
    FINITE_DIFFERENCE,
    LadderApplication,
    LadderDirection,
    LadderVerification,
    apply_ladder,
    factored_radial_action,
    in_validated_domain,
    lower_coefficient,
    radial_derivative,
    raise_coefficient,
    target_numbers,
    verify_ladder,
)
from .velocity import (
    BOUNDARY_RINGS,
    CartesianGrid,
    GridField,
    commutator_residual,
    default_half_extent,
    eigen_residual,
    grid_norm,
    hamiltonian_apply,
    qp_commutator_residual,
    qp_hamiltonian_apply,
    sample_state,
    velocity_apply,
)
from .verification import SUITES, SuiteConfig, VerificationRecord, run_suites

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # laguerre
    "SINGULAR_WINDOW",
    "Identity",
    "LaguerreIndex",
    "identity_residual",
    "identity_sides",
    "laguerre_deriv",
    "laguerre_eval",
    "laguerre_second_deriv",
    # quadrature
    "MAX_ORDER",
    "QuadratureRule",
    "build_rule",
    "default_order",
    "integrate",
    # states
    "FieldConfig",
    "LandauState",
    "QuantumNumbers",
    "SpectralParams",
    "energy",
    "ode_operator",
    "ode_residual",
    "overlap",
    "radial_value",
    "spectral_params",
    "wavefunction_value",
    # ladder
    "ANALYTIC",
    "FINITE_DIFFERENCE",
    "LadderApplication",
    "LadderDirection",
    "LadderVerification",
    "apply_ladder",
    "factored_radial_action",
    "in_validated_domain",
    "lower_coefficient",
    "radial_derivative",
    "raise_coefficient",
    "target_numbers",
    "verify_ladder",
    # velocity
    "BOUNDARY_RINGS",
    "CartesianGrid",
    "GridField",
    "commutator_residual",
    "default_half_extent",
    "eigen_residual",
    "grid_norm",
    "hamiltonian_apply",
    "qp_commutator_residual",
    "qp_hamiltonian_apply",
    "sample_state",
    "velocity_apply",
    # verification
    "SUITES",
    "SuiteConfig",
    "VerificationRecord",
    "run_suites",
]
