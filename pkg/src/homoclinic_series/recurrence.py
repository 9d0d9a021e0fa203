"""Series coefficient recurrences.

Substituting u = sum_k a_k e^{k alpha z} into the ODE and collecting the
e^{k alpha z} modes gives, for k > 1,

    p(k alpha) a_k = F1(k) + F2(k) + F3(k)

where F1 collects the quadratic nonlinear terms, F2 the cubic h u^3 term and
F3 the quartic s u^3 u' term.  Every term of order k is a monomial of total
degree k in lower coefficients, so a_k = phi_k a_1^k with phi_k independent
of a_1; the tables below store phi_k (a_1 normalized to 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import ResonanceError
from .model import SystemParams
from .spectrum import resonance_poly


class TableKind(enum.Enum):
    FORWARD_DECAYING = "ForwardDecaying"   # Re(alpha) < 0, valid for z > 0
    BACKWARD_GROWING = "BackwardGrowing"   # Re(alpha) > 0, valid for z < 0


@dataclass(frozen=True)
class CoefficientTable:
    """Base rate alpha, truncation K and the functionals phi_k
    (realized coefficients are phi_k * amplitude^k)."""

    alpha: complex
    K: int
    phi: tuple[complex, ...]  # phi[0] unused placeholder; phi[k] for k=1..K
    kind: TableKind

    def __post_init__(self):
        if self.K < 1:
            raise ValueError("K must be >= 1")
        if len(self.phi) != self.K + 1:
            raise ValueError("phi must have K+1 entries (index 0 unused)")
        if self.phi[1] != 1.0:
            raise ValueError("phi[1] must be exactly 1")
        if self.kind is TableKind.FORWARD_DECAYING and self.alpha.real >= 0:
            raise ValueError("ForwardDecaying table needs Re(alpha) < 0")
        if self.kind is TableKind.BACKWARD_GROWING and self.alpha.real <= 0:
            raise ValueError("BackwardGrowing table needs Re(alpha) > 0")

    def realized(self, amplitude: complex) -> list[complex]:
        """Coefficients a_k = phi_k * amplitude^k for k = 1..K (index 0 dropped)."""
        out = []
        amp_k = 1.0 + 0.0j
        for k in range(1, self.K + 1):
            amp_k *= amplitude
            out.append(self.phi[k] * amp_k)
        return out


def rhs_quadratic(
    k: int, alpha: complex, params: SystemParams, coeffs: Sequence[complex]
) -> complex:
    """F1(k): the mode-k contribution of the quadratic terms
    c u u'' + d u'^2 + g u^2 + p u u''' + q u u'' + r u u'.

    coeffs[i-1] holds the realized coefficient a_i.
    """
    if k < 2:
        raise ValueError(f"rhs_quadratic needs k >= 2, got {k}")
    if len(coeffs) < k - 1:
        raise ValueError("coeffs must cover a_1 .. a_{k-1}")
    c, d, g = params.c, params.d, params.g
    p, q, r = params.p, params.q, params.r
    a2 = alpha * alpha
    a3 = a2 * alpha
    total = 0.0 + 0.0j
    for i in range(1, k):
        m = k - i
        bracket = (
            p * m**3 * a3
            + m**2 * (c + i * q * alpha) * a2
            + r * m * alpha
            + d * m * i * a2
            + g
        )
        total += bracket * coeffs[m - 1] * coeffs[i - 1]
    return total


def rhs_cubic(k: int, params: SystemParams, coeffs: Sequence[complex]) -> complex:
    """F2(k): the mode-k contribution of h u^3,
    h * sum_{j=2}^{k-1} sum_{l=1}^{j-1} a_{k-j} a_{j-l} a_l."""
    if k < 3:
        raise ValueError(f"rhs_cubic needs k >= 3, got {k}")
    if params.h == 0.0:
        return 0.0 + 0.0j
    total = 0.0 + 0.0j
    for j in range(2, k):
        for l in range(1, j):
            total += coeffs[k - j - 1] * coeffs[j - l - 1] * coeffs[l - 1]
    return params.h * total


def rhs_quartic(
    k: int, alpha: complex, params: SystemParams, coeffs: Sequence[complex]
) -> complex:
    """F3(k): the mode-k contribution of s u^3 u'.

    Since u^3 u' = (u^4)'/4, this is s * (k alpha / 4) times the mode-k
    coefficient of u^4,

        sum_{i=3}^{k-1} sum_{j=2}^{i-1} sum_{l=1}^{j-1} a_{k-i} a_{j-l} a_l a_{i-j},

    the triple sum running over all ordered 4-part compositions of k
    ((k-i)+(j-l)+l+(i-j) = k).  The k alpha / 4 prefactor is required for the
    series to satisfy the ODE; the brute-force substitution oracle and the
    published matching roots both confirm it.
    """
    if k < 4:
        raise ValueError(f"rhs_quartic needs k >= 4, got {k}")
    if params.s == 0.0:
        return 0.0 + 0.0j
    total = 0.0 + 0.0j
    for i in range(3, k):
        for j in range(2, i):
            for l in range(1, j):
                total += (
                    coeffs[k - i - 1]
                    * coeffs[j - l - 1]
                    * coeffs[l - 1]
                    * coeffs[i - j - 1]
                )
    return params.s * (k * alpha / 4.0) * total


def _build_table(
    params: SystemParams,
    alpha: complex,
    K: int,
    a: float,
    b: float,
    kind: TableKind,
) -> CoefficientTable:
    if K < 1:
        raise ValueError("K must be >= 1")
    phi: list[complex] = [0.0 + 0.0j, 1.0 + 0.0j]
    for k in range(2, K + 1):
        rhs = rhs_quadratic(k, alpha, params, phi[1:])
        if k >= 3:
            rhs += rhs_cubic(k, params, phi[1:])
        if k >= 4:
            rhs += rhs_quartic(k, alpha, params, phi[1:])
        denom = resonance_poly(k, alpha, a, b)
        if abs(denom) < 1e-300:
            raise ResonanceError(k, denom)
        phi.append(rhs / denom)
    return CoefficientTable(alpha=alpha, K=K, phi=tuple(phi), kind=kind)


def phi_table(
    params: SystemParams, alpha: complex, K: int, a: float, b: float
) -> CoefficientTable:
    """phi_k functionals for the decaying z > 0 branch (Re(alpha) < 0)."""
    return _build_table(params, alpha, K, a, b, TableKind.FORWARD_DECAYING)


def psi_table(
    params: SystemParams, alpha4: complex, K: int, a: float, b: float
) -> CoefficientTable:
    """psi_k functionals for the z < 0 branch, evaluated at the growing rate
    alpha4 (= -alpha1 in Region 1).  In the reversible case psi_k == phi_k
    because the brackets involve only even powers of alpha."""
    return _build_table(params, alpha4, K, a, b, TableKind.BACKWARD_GROWING)
