"""Coefficient recurrences against independent oracles.

Two oracles back the recurrence:

  * hand-expanded low-order formulas for the coefficient functionals
    phi_2..phi_5, written out independently of the production bracket;
  * a brute-force substitution oracle: evaluate the truncated series and
    its ODE residual along the complex direction z = (i/alpha) t, where
    every e^{k alpha z} becomes the Fourier harmonic e^{i k t}, and read
    the mode coefficients off with an exact DFT.  Modes k <= K must vanish.
"""

import cmath

import numpy as np
import pytest

from homoclinic_series.errors import ResonanceError
from homoclinic_series.model import SystemParams
from homoclinic_series.recurrence import phi_table, psi_table
from homoclinic_series.spectrum import resonance_poly, spectrum

REVERSIBLE = SystemParams(a=0.8, b=1.5, c=0.2, d=0.1, g=0.05, h=0.02)
GENERAL = SystemParams(a=0.6, b=1.5, p=0.1, q=0.3, c=0.2, r=0.1, d=0.3, g=0.5, h=0.2, s=0.1)


def alpha1(params):
    return spectrum(params.a, params.b).roots[0]


def hand_phi(params, alpha):
    """phi_2..phi_5 from scratch: expand the quadratic/cubic products of
    exponential modes by hand and divide by the resonance polynomial."""
    a, b = params.a, params.b
    c, d, g, h = params.c, params.d, params.g, params.h
    p, q, r = params.p, params.q, params.r
    al2 = alpha * alpha

    def pk(k):
        return resonance_poly(k, alpha, a, b)

    phi = {1: 1.0 + 0.0j}
    phi[2] = ((p + q) * al2 * alpha + (c + d) * al2 + r * alpha + g) / pk(2)

    if params.reversible():
        phi[3] = (((5 * c + 4 * d) * al2 + 2 * g) * phi[2] + h) / pk(3)
        phi[4] = (
            ((10 * c + 6 * d) * al2 + 2 * g) * phi[3]
            + (4 * (c + d) * al2 + g) * phi[2] ** 2
            + 3 * h * phi[2]
        ) / pk(4)
        phi[5] = (
            ((17 * c + 8 * d) * al2 + 2 * g) * phi[4]
            + ((13 * c + 12 * d) * al2 + 2 * g) * phi[2] * phi[3]
            + 3 * h * phi[3]
            + 3 * h * phi[2] ** 2
        ) / pk(5)
    return phi


def test_phi2_closed_form_general():
    for params in (REVERSIBLE, GENERAL):
        al = alpha1(params)
        table = phi_table(params, al, 6, params.a, params.b)
        expect = hand_phi(params, al)[2]
        assert table.phi[2] == pytest.approx(expect, rel=1e-12)


def test_phi3_to_phi5_closed_form_reversible():
    al = alpha1(REVERSIBLE)
    table = phi_table(REVERSIBLE, al, 6, REVERSIBLE.a, REVERSIBLE.b)
    expect = hand_phi(REVERSIBLE, al)
    for k in (3, 4, 5):
        assert table.phi[k] == pytest.approx(expect[k], rel=1e-12), k


def substitution_mode_coefficients(params, alpha, K):
    """DFT extraction of the e^{k alpha z} modes of the ODE residual."""
    table = phi_table(params, alpha, K, params.a, params.b)
    ak = np.array([table.phi[k] for k in range(1, K + 1)])
    n = 4 * K + 8
    t = 2.0 * np.pi * np.arange(n) / n
    jets = [
        sum(ak[k - 1] * (k * alpha) ** order * np.exp(1j * k * t) for k in range(1, K + 1))
        for order in range(5)
    ]
    u, u1, u2, u3, u4 = jets
    f = (
        params.c * u * u2
        + params.d * u1 * u1
        + params.g * u * u
        + params.h * u**3
        + params.p * u * u3
        + params.q * u1 * u2
        + params.r * u * u1
        + params.s * u**3 * u1
    )
    res = u4 - params.b * u2 + params.a * u - f
    return np.fft.fft(res) / n  # index k holds the e^{i k t} coefficient


@pytest.mark.parametrize("params", [REVERSIBLE, GENERAL], ids=["reversible", "general"])
def test_substitution_oracle_modes_cancel(params):
    al = alpha1(params)
    K = 10
    modes = substitution_mode_coefficients(params, al, K)
    scale = 1.0 + float(np.max(np.abs(modes)))
    for k in range(1, K + 1):
        assert abs(modes[k]) <= 1e-8 * scale, k
    # the first dropped mode genuinely survives (the oracle is not vacuous)
    assert abs(modes[K + 1]) > 1e-12 * scale


def test_conjugate_rate_gives_conjugate_table():
    for params in (REVERSIBLE, GENERAL):
        al = alpha1(params)
        fwd = phi_table(params, al, 12, params.a, params.b)
        conj = phi_table(params, al.conjugate(), 12, params.a, params.b)
        for k in range(1, 13):
            assert conj.phi[k] == pytest.approx(fwd.phi[k].conjugate(), rel=1e-13)


def test_realized_coefficients_scale_homogeneously():
    al = alpha1(REVERSIBLE)
    table = phi_table(REVERSIBLE, al, 10, REVERSIBLE.a, REVERSIBLE.b)
    amp = 1.7 - 0.9j
    realized = table.realized(amp)
    for k in range(1, 11):
        assert realized[k - 1] == pytest.approx(table.phi[k] * amp**k, rel=1e-13)


def test_reversible_backward_table_degenerates():
    # with p = q = r = s = 0 the brackets contain only even powers of alpha,
    # so the growing-rate table reproduces the decaying-rate functionals
    spec = spectrum(REVERSIBLE.a, REVERSIBLE.b)
    fwd = phi_table(REVERSIBLE, spec.roots[0], 30, REVERSIBLE.a, REVERSIBLE.b)
    bwd = psi_table(REVERSIBLE, spec.roots[3], 30, REVERSIBLE.a, REVERSIBLE.b)
    for k in range(2, 31):
        assert bwd.phi[k] == pytest.approx(fwd.phi[k], rel=1e-12), k


def test_general_backward_table_differs():
    spec = spectrum(GENERAL.a, GENERAL.b)
    fwd = phi_table(GENERAL, spec.roots[0], 10, GENERAL.a, GENERAL.b)
    bwd = psi_table(GENERAL, spec.roots[3], 10, GENERAL.a, GENERAL.b)
    assert abs(bwd.phi[2] - fwd.phi[2]) > 1e-6


def test_resonant_rate_raises():
    # alpha = -1 with (a, b) = (4, 5): both alpha and 2 alpha are
    # characteristic roots, so the k = 2 division is impossible
    params = SystemParams(a=4.0, b=5.0, c=0.3)
    assert abs(resonance_poly(2, -1.0, 4.0, 5.0)) < 1e-14
    with pytest.raises(ResonanceError) as err:
        phi_table(params, -1.0 + 0.0j, 5, 4.0, 5.0)
    assert err.value.k == 2


def test_table_validation():
    al = alpha1(REVERSIBLE)
    with pytest.raises(ValueError):
        phi_table(REVERSIBLE, -al, 5, REVERSIBLE.a, REVERSIBLE.b)  # growing rate
    with pytest.raises(ValueError):
        phi_table(REVERSIBLE, al, 0, REVERSIBLE.a, REVERSIBLE.b)
