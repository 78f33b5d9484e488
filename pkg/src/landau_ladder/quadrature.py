"""Generalized Gauss-Laguerre quadrature built by the Golub-Welsch procedure.

For the weight x^alpha e^{-x} on (0, inf) the Jacobi matrix has diagonal
a_k = 2k + alpha + 1 and off-diagonal b_k = sqrt(k (k + alpha)).  Nodes are
its eigenvalues; the weight attached to a node is Gamma(alpha+1) times the
squared first component of the corresponding eigenvector.  The symmetric
tridiagonal eigenproblem is solved in-repo with the implicit-shift QL
algorithm, accumulating only the first row of the rotation product, so the
whole construction is O(K^2), dependency-free and bit-reproducible.

Gamma values go through ``math.lgamma`` so that large orders never
overflow intermediates.  Note that for very large rules (K beyond ~180)
the true weights at the largest nodes fall below the subnormal range of
binary64 and underflow to zero; the orders used by the verification
suites (K <= 64 or so) are far from that regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["QuadratureRule", "MAX_ORDER", "build_rule", "integrate", "default_order"]

MAX_ORDER = 512

# Iteration cap per eigenvalue for the QL sweep; 2-3 is typical.
_MAX_QL_ITERATIONS = 60


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes and weights integrating f against x^alpha e^{-x} on (0, inf)."""

    alpha: float
    order: int
    nodes: np.ndarray
    weights: np.ndarray


def _gamma(x: float) -> float:
    """Gamma(x) for x >= 1 via log-gamma (safe for large arguments)."""
    return math.exp(math.lgamma(x))


def _tridiag_eigen_first_row(diag, offdiag):
    """Eigenvalues of a symmetric tridiagonal matrix plus first eigenvector components.

    Implicit-shift QL with the classic rounding-level deflation test.  Only
    the first row of the accumulated orthogonal transform is carried: entry
    j of the returned row is the first component of the eigenvector paired
    with eigenvalue j (unsorted).
    """
    n = len(diag)
    d = [float(v) for v in diag]
    e = [float(v) for v in offdiag] + [0.0]
    z = [0.0] * n
    z[0] = 1.0

    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) + dd == dd:
                    break
                m += 1
            if m == l:
                break
            iterations += 1
            if iterations > _MAX_QL_ITERATIONS:
                raise RuntimeError(
                    f"tridiagonal QL failed to converge for eigenvalue {l} "
                    f"within {_MAX_QL_ITERATIONS} iterations"
                )
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    # recover from rounding underflow and retry the sweep
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d, z


def build_rule(alpha: float, order: int) -> QuadratureRule:
    """Construct the generalized Gauss-Laguerre rule of the given order.

    Deterministic: identical inputs give bit-identical nodes and weights.
    """
    a = float(alpha)
    if not math.isfinite(a) or a < 0:
        raise ValueError(f"alpha must be finite and >= 0, got {alpha!r}")
    if isinstance(order, bool) or not isinstance(order, (int, np.integer)):
        raise ValueError(f"order must be an integer, got {order!r}")
    if not 1 <= order <= MAX_ORDER:
        raise ValueError(f"order must be in [1, {MAX_ORDER}], got {order}")

    k = int(order)
    diag = [2.0 * j + a + 1.0 for j in range(k)]
    off = [math.sqrt(j * (j + a)) for j in range(1, k)]
    eigvals, first = _tridiag_eigen_first_row(diag, off)

    perm = sorted(range(k), key=lambda j: eigvals[j])
    nodes = np.array([eigvals[j] for j in perm])
    comp2 = np.array([first[j] * first[j] for j in perm])
    # explicit renormalization keeps sum(weights) = Gamma(alpha+1) to rounding
    weights = _gamma(a + 1.0) * comp2 / math.fsum(comp2.tolist())

    if np.any(nodes <= 0) or np.any(np.diff(nodes) <= 0):
        raise RuntimeError("eigensolver produced non-increasing or non-positive nodes")
    return QuadratureRule(alpha=a, order=k, nodes=nodes, weights=weights)


def integrate(rule: QuadratureRule, f):
    """Sum of weights times f(node); exact for polynomials up to degree 2K-1.

    ``f`` maps a positive real to a real or complex value.  Returns a float
    when every sample is real, otherwise a complex number.  Accumulation is
    exactly-rounded (fsum) in a fixed node order.
    """
    values = [f(x) for x in rule.nodes.tolist()]
    if any(isinstance(v, complex) for v in values):
        vals = [complex(v) for v in values]
        if not all(math.isfinite(v.real) and math.isfinite(v.imag) for v in vals):
            raise ValueError("integrand returned a non-finite value at a node")
        w = rule.weights.tolist()
        return complex(
            math.fsum(wi * v.real for wi, v in zip(w, vals)),
            math.fsum(wi * v.imag for wi, v in zip(w, vals)),
        )
    vals = [float(v) for v in values]
    if not all(math.isfinite(v) for v in vals):
        raise ValueError("integrand returned a non-finite value at a node")
    return math.fsum(wi * v for wi, v in zip(rule.weights.tolist(), vals))


def default_order(n_max: int, m_max: int) -> int:
    """Rule order used by the verification suites for inner products."""
    return 2 * (int(n_max) + abs(int(m_max))) + 16
