"""Boundary matching at z = 0.

The truncated half-orbit series evaluated at z = 0 is a degree-K polynomial
in the leading amplitude,

    P(x) = x + sum_{k=2}^{K} phi_k x^k,

whose nontrivial roots are the admissible amplitudes.  All K-1 nontrivial
roots are computed simultaneously (Aberth-Ehrlich iteration on a
coefficient-balanced rescaling) because the solutions are not unique and
different roots select different orbits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SolverError
from .recurrence import CoefficientTable


@dataclass
class RootCandidate:
    """One nontrivial root of the matching polynomial.

    orbit_residual and decay_margin are filled in by the verification pass;
    until then they are NaN.
    """

    value: complex
    polynomial_residual: float
    orbit_residual: float = field(default=math.nan)
    decay_margin: float = field(default=math.nan)


def matching_polynomial_eval(table: CoefficientTable, x: complex) -> complex:
    """P(x) = x + sum_{k=2}^{K} phi_k x^k.

    Accumulated term by term so an overflow can be reported with the order
    at which it occurred.
    """
    total = complex(x)
    xk = complex(x)
    for k in range(2, table.K + 1):
        xk *= x
        total += table.phi[k] * xk
        if not (math.isfinite(total.real) and math.isfinite(total.imag)):
            raise OverflowError(f"matching polynomial overflowed at order k={k}")
    return total


def _poly_scale(table: CoefficientTable) -> float:
    """Balancing scale sigma for the substitution x = sigma w."""
    if table.phi[2] != 0:
        return 1.0 / abs(table.phi[2])
    mags = [
        abs(table.phi[k]) ** (-1.0 / (k - 1))
        for k in range(2, table.K + 1)
        if table.phi[k] != 0
    ]
    if not mags:
        return 1.0
    return math.exp(sum(math.log(m) for m in mags) / len(mags))


def _aberth_all_roots(coeffs: np.ndarray, max_iter: int = 400, tol: float = 1e-14) -> np.ndarray:
    """All roots of sum_j coeffs[j] w^j (ascending order, coeffs[-1] != 0)."""
    n = len(coeffs) - 1
    deriv = coeffs[1:] * np.arange(1, n + 1)

    # Cauchy-style initial radius, roots of unity with an irrational phase
    # offset so no start aligns with a symmetry axis
    radius = 1.0 + max(abs(coeffs[:-1] / coeffs[-1]))
    angles = 2.0 * np.pi * (np.arange(n) + 0.376) / n
    w = radius ** (1.0 / n) * np.exp(1j * angles) if n > 1 else np.array(
        [-coeffs[0] / coeffs[1]]
    )

    for _ in range(max_iter):
        pv = np.polyval(coeffs[::-1], w)
        dv = np.polyval(deriv[::-1], w)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = np.where(dv != 0, pv / dv, 0.0)
            diff = w[:, None] - w[None, :]
            np.fill_diagonal(diff, np.inf)
            repulse = np.sum(1.0 / diff, axis=1)
            denom = 1.0 - newton * repulse
            step = np.where(denom != 0, newton / denom, newton)
        w = w - step
        if np.max(np.abs(step)) <= tol * (1.0 + np.max(np.abs(w))):
            return w
    if np.max(np.abs(step)) > 1e-8 * (1.0 + np.max(np.abs(w))):
        raise SolverError(
            f"all-roots iteration did not converge in {max_iter} iterations",
            best=w,
        )
    return w


def solve_matching(table: CoefficientTable) -> list[RootCandidate]:
    """All nontrivial roots of the matching polynomial, Newton-polished on
    the unscaled polynomial and sorted by (Re, Im).

    Returns an empty list when every phi_k, k >= 2, vanishes (linear system:
    only the trivial root exists).
    """
    K = table.K
    nonzero = [k for k in range(2, K + 1) if table.phi[k] != 0]
    if K < 2 or not nonzero:
        return []

    # factor out the trivial root and balance: P(sigma w)/(sigma w) =
    # 1 + sum phi_k sigma^{k-1} w^{k-1}
    sigma = _poly_scale(table)
    top = max(nonzero)
    coeffs = np.zeros(top, dtype=complex)
    coeffs[0] = 1.0
    for k in range(2, top + 1):
        coeffs[k - 1] = table.phi[k] * sigma ** (k - 1)

    w = _aberth_all_roots(coeffs)
    roots = sigma * w

    candidates = []
    for x in roots:
        x = _newton_polish(table, complex(x))
        res = abs(matching_polynomial_eval(table, x))
        candidates.append(RootCandidate(value=x, polynomial_residual=res))
    candidates.sort(key=lambda c: (c.value.real, c.value.imag))
    return candidates


def _newton_polish(table: CoefficientTable, x: complex, steps: int = 1) -> complex:
    for _ in range(steps):
        p = matching_polynomial_eval(table, x)
        dp = 1.0 + 0.0j
        xk1 = 1.0 + 0.0j  # x^{k-1}
        for k in range(2, table.K + 1):
            xk1 *= x
            dp += k * table.phi[k] * xk1
        if dp == 0:
            return x
        x = x - p / dp
    return x


def rank_candidates(
    candidates: list[RootCandidate], reports: list | None = None
) -> list[RootCandidate]:
    """Order candidates best first: by orbit residual, then decay margin,
    then polynomial residual; ties broken by (Re, Im) of the root.

    If reports are given they must align with candidates and are only used
    to fill missing orbit_residual / decay_margin fields.
    """
    if reports is not None:
        if len(reports) != len(candidates):
            raise ValueError("reports must align with candidates")
        for cand, rep in zip(candidates, reports):
            if math.isnan(cand.orbit_residual):
                cand.orbit_residual = rep.residual_sup
            if math.isnan(cand.decay_margin) and rep.decay_margins:
                cand.decay_margin = max(rep.decay_margins)

    def key(c: RootCandidate):
        orb = c.orbit_residual if not math.isnan(c.orbit_residual) else math.inf
        dec = c.decay_margin if not math.isnan(c.decay_margin) else math.inf
        return (orb, dec, c.polynomial_residual, c.value.real, c.value.imag)

    return sorted(candidates, key=key)
