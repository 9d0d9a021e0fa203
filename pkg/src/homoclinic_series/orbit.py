"""Piecewise orbit assembly and evaluation.

The orbit homoclinic to the origin is

    u(z) = 2 Re sum_k a_k e^{k alpha1 z}   for z >= 0   (Re alpha1 < 0)
    u(z) = 2 Re sum_k b_k e^{k alpha4 z}   for z < 0    (Re alpha4 > 0)

with a_k = phi_k a1^k and b_k = psi_k b1^k.  The factor 2 Re implements the
complex-conjugate pairing, so values are real by construction.  Only value
continuity is imposed at z = 0 (the matching step drives u(0) to zero);
derivative jumps are measured, not removed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .recurrence import CoefficientTable, TableKind


class Side(enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"


@dataclass(frozen=True)
class HalfOrbit:
    """One exponential-series branch with its leading amplitude."""

    table: CoefficientTable
    amplitude: complex
    side: Side

    def __post_init__(self):
        want = (
            TableKind.FORWARD_DECAYING
            if self.side is Side.POSITIVE
            else TableKind.BACKWARD_GROWING
        )
        if self.table.kind is not want:
            raise ValueError(f"{self.side} half-orbit needs a {want.value} table")
        for k, ak in enumerate(self.table.realized(self.amplitude), start=1):
            if not (np.isfinite(ak.real) and np.isfinite(ak.imag)):
                raise ValueError(f"realized coefficient a_{k} is not finite")

    def eval(self, z, order: int = 0):
        """2 Re sum_k a_k (k alpha)^order e^{k alpha z}; z may be scalar or array.

        Horner accumulation in w = e^{alpha z}: one complex exponential per
        point plus K multiply-adds.
        """
        if not 0 <= order <= 4:
            raise ValueError("order must be in [0, 4]")
        alpha = self.table.alpha
        coeffs = self.table.realized(self.amplitude)
        z = np.asarray(z, dtype=float)
        w = np.exp(alpha * z)
        acc = np.zeros_like(w)
        for k in range(self.table.K, 0, -1):
            ck = coeffs[k - 1] * (k * alpha) ** order
            acc = (acc + ck) * w
        out = 2.0 * acc.real
        return out if out.ndim else float(out)

    def jet(self, z):
        """All five derivative orders at z, shape (5,) + z.shape."""
        return np.stack([self.eval(z, order=m) for m in range(5)])

    def eval_analytic(self, z, order: int = 0):
        """Complex half of the series, sum_k a_k (k alpha)^order e^{k alpha z}.

        The recurrence cancels the e^{k alpha z} modes one by one, so this
        single-frequency sum is the object whose ODE residual shrinks with
        the truncation order.  The real orbit 2 Re(...) additionally carries
        uncancelled cross-frequency products e^{(m alpha + n conj(alpha)) z}
        from the nonlinearity, so its residual is not small in general.
        """
        if not 0 <= order <= 4:
            raise ValueError("order must be in [0, 4]")
        alpha = self.table.alpha
        coeffs = self.table.realized(self.amplitude)
        z = np.asarray(z, dtype=float)
        w = np.exp(alpha * z)
        acc = np.zeros_like(w, dtype=complex)
        for k in range(self.table.K, 0, -1):
            ck = coeffs[k - 1] * (k * alpha) ** order
            acc = (acc + ck) * w
        return acc if acc.ndim else complex(acc)


@dataclass(frozen=True)
class HomoclinicOrbit:
    """Two half-orbit series joined at z = 0."""

    plus: HalfOrbit
    minus: HalfOrbit
    symmetric: bool = False

    def __post_init__(self):
        if self.plus.side is not Side.POSITIVE or self.minus.side is not Side.NEGATIVE:
            raise ValueError("plus/minus sides are swapped")
        if self.symmetric:
            if self.minus.amplitude != self.plus.amplitude:
                raise ValueError("symmetric orbit needs equal amplitudes")
            if self.minus.table.phi != self.plus.table.phi:
                raise ValueError("symmetric orbit needs identical phi tables")

    def eval(self, z, order: int = 0):
        """Orbit value/derivative at z; the z = 0 point reports the plus-side
        limit."""
        z = np.asarray(z, dtype=float)
        pos = z >= 0.0
        if z.ndim == 0:
            half = self.plus if pos else self.minus
            return half.eval(z, order)
        out = np.empty_like(z)
        out[pos] = self.plus.eval(z[pos], order)
        out[~pos] = self.minus.eval(z[~pos], order)
        return out


def make_orbit(
    plus_table: CoefficientTable,
    minus_table: CoefficientTable,
    a1: complex,
    b1: complex | None = None,
) -> HomoclinicOrbit:
    """Assemble the piecewise orbit; b1 defaults to a1 (the symmetric /
    value-matched choice)."""
    if b1 is None:
        b1 = a1
    symmetric = b1 == a1 and plus_table.phi == minus_table.phi
    return HomoclinicOrbit(
        plus=HalfOrbit(plus_table, a1, Side.POSITIVE),
        minus=HalfOrbit(minus_table, b1, Side.NEGATIVE),
        symmetric=symmetric,
    )


def sample(orbit: HomoclinicOrbit, z_min: float, z_max: float, n: int) -> np.ndarray:
    """Uniform grid samples, columns (z, u, u', u'', u''', u'''')."""
    if not z_min < z_max:
        raise ValueError("need z_min < z_max")
    if n < 2:
        raise ValueError("need n >= 2")
    z = np.linspace(z_min, z_max, n)
    cols = [z] + [orbit.eval(z, order=m) for m in range(5)]
    return np.column_stack(cols)


def traveling_wave(
    orbit: HomoclinicOrbit,
    speed: float,
    x_min: float,
    x_max: float,
    n: int,
    times,
) -> np.ndarray:
    """u(x, t) = u(x - speed * t) sampled on a uniform x grid, one row block
    per t; columns (t, x, u)."""
    if not x_min < x_max:
        raise ValueError("need x_min < x_max")
    if n < 2:
        raise ValueError("need n >= 2")
    x = np.linspace(x_min, x_max, n)
    blocks = []
    for t in times:
        u = orbit.eval(x - speed * t, order=0)
        blocks.append(np.column_stack([np.full_like(x, float(t)), x, u]))
    return np.vstack(blocks)
