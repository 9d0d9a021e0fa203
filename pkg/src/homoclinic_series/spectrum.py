"""Characteristic roots of the linearization u'''' - b u'' + a u = 0 and the
classification of (b, a) points by eigenvalue structure.

The quartic alpha^4 - b alpha^2 + a = 0 is biquadratic, so its roots are
+-sqrt((b +- sqrt(b^2 - 4a)) / 2) and always come in the pattern
{alpha, -alpha, conj(alpha), -conj(alpha)}.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

import numpy as np


class Region(enum.Enum):
    REGION1 = "Region1"  # saddle-focus: +-lambda +- i*omega
    REGION2 = "Region2"  # hyperbolic saddle: +-lambda1, +-lambda2
    REGION3 = "Region3"  # saddle-center: +-lambda, +-i*omega
    REGION4 = "Region4"  # focus: +-i*omega1, +-i*omega2
    C0 = "C0"            # 0, 0, +-lambda
    C1 = "C1"            # 0, 0, +-i*omega
    C2 = "C2"            # +-i*omega double
    C3 = "C3"            # +-lambda double
    ORIGIN = "Origin"    # a = b = 0, quadruple zero


@dataclass(frozen=True)
class Spectrum:
    """The four characteristic roots plus the region tag of (b, a).

    In Region 1 the roots are ordered (-lam+iw, -lam-iw, +lam+iw, +lam-iw)
    with lam, w > 0, so roots[3] == -roots[0]; elsewhere they are sorted
    lexicographically by (Re, Im).
    """

    roots: tuple[complex, complex, complex, complex]
    region: Region


def char_roots(a: float, b: float) -> tuple[complex, complex, complex, complex]:
    """The four roots of alpha^4 - b alpha^2 + a = 0.

    Region 1 ordering when the quartet is genuinely complex, otherwise
    (Re, Im) lexicographic.
    """
    disc = complex(b * b - 4.0 * a)
    sq = cmath.sqrt(disc)
    mu_plus = (b + sq) / 2.0   # the two values of alpha^2
    mu_minus = (b - sq) / 2.0
    r_plus = cmath.sqrt(mu_plus)
    r_minus = cmath.sqrt(mu_minus)
    roots = [r_plus, -r_plus, r_minus, -r_minus]

    if disc.real < 0.0:
        # complex quartet +-lam +- i*w: fix the paper's ordering
        lam = max(abs(z.real) for z in roots)
        w = max(abs(z.imag) for z in roots)
        return (
            complex(-lam, w),
            complex(-lam, -w),
            complex(lam, w),
            complex(lam, -w),
        )
    roots.sort(key=lambda z: (z.real, z.imag))
    return tuple(roots)


def resonance_poly(k: int, alpha: complex, a: float, b: float) -> complex:
    """p(k*alpha) = (k*alpha)^4 - b (k*alpha)^2 + a.

    Vanishes at k=1 when alpha is a characteristic root; its nonvanishing
    for k > 1 licenses the series coefficient recurrence.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ka = k * alpha
    return ka**4 - b * ka**2 + a


def classify_region(a: float, b: float, tol: float = 1e-9) -> Region:
    """Tag (b, a) by the eigenvalue structure of the linearization.

    tol is a relative half-width for boundary detection on the two
    discriminating quantities b^2 - 4a and a.  Every input maps to a tag.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    disc = b * b - 4.0 * a
    disc_scale = 1.0 + b * b + 4.0 * abs(a)
    a_scale = 1.0 + abs(a) + abs(b)
    on_disc = abs(disc) <= tol * disc_scale
    on_a0 = abs(a) <= tol * a_scale
    b_zero = abs(b) <= tol * a_scale

    if on_a0 and b_zero:
        return Region.ORIGIN
    if on_a0:
        return Region.C0 if b > 0 else Region.C1
    if on_disc:
        return Region.C3 if b > 0 else Region.C2
    if disc < 0.0:
        return Region.REGION1
    # real, distinct alpha^2 values; signs decide
    if a < 0.0:
        return Region.REGION3
    return Region.REGION2 if b > 0 else Region.REGION4


def spectrum(a: float, b: float, tol: float = 1e-9) -> Spectrum:
    """char_roots + classify_region bundled."""
    return Spectrum(roots=char_roots(a, b), region=classify_region(a, b, tol))


def classify_by_eigenvalues(a: float, b: float, tol: float = 1e-9) -> Region:
    """Independent classification: count companion-matrix eigenvalues by the
    signs of their real/imaginary parts.  Used as an oracle for
    classify_region; boundary tags use the same discriminant tests."""
    comp = np.array(
        [
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [-a, 0.0, b, 0.0],
        ]
    )
    eig = np.linalg.eigvals(comp)
    scale = 1.0 + max(abs(eig))
    near_real_axis = np.abs(eig.imag) <= tol * scale
    near_imag_axis = np.abs(eig.real) <= tol * scale
    n_zero = int(np.sum(near_real_axis & near_imag_axis))
    n_real = int(np.sum(near_real_axis & ~near_imag_axis))
    n_imag = int(np.sum(near_imag_axis & ~near_real_axis))
    n_complex = 4 - n_zero - n_real - n_imag

    if n_zero == 4:
        return Region.ORIGIN
    if n_zero == 2:
        return Region.C0 if n_real == 2 else Region.C1
    if n_complex == 4:
        return Region.REGION1
    if n_real == 4:
        # distinct pairs -> Region2, double pair -> C3
        pos = sorted(e.real for e in eig if e.real > 0)
        return Region.C3 if abs(pos[1] - pos[0]) <= tol * scale else Region.REGION2
    if n_imag == 4:
        pos = sorted(e.imag for e in eig if e.imag > 0)
        return Region.C2 if abs(pos[1] - pos[0]) <= tol * scale else Region.REGION4
    return Region.REGION3
