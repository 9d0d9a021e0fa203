"""Orbit assembly, evaluation, sampling, traveling-wave reduction."""

import numpy as np
import pytest

from homoclinic_series.matching import solve_matching
from homoclinic_series.model import SystemParams
from homoclinic_series.orbit import HalfOrbit, Side, make_orbit, sample, traveling_wave
from homoclinic_series.recurrence import phi_table, psi_table
from homoclinic_series.spectrum import spectrum

REVERSIBLE = SystemParams(a=0.8, b=1.5, c=0.2, d=0.1, g=0.05, h=0.02)


@pytest.fixture(scope="module")
def solved():
    spec = spectrum(REVERSIBLE.a, REVERSIBLE.b)
    fwd = phi_table(REVERSIBLE, spec.roots[0], 20, REVERSIBLE.a, REVERSIBLE.b)
    bwd = psi_table(REVERSIBLE, spec.roots[3], 20, REVERSIBLE.a, REVERSIBLE.b)
    cands = solve_matching(fwd)
    root = min(cands, key=lambda c: abs(c.value - (40.4440 - 14.2061j))).value
    return fwd, bwd, root


def brute_eval(table, amplitude, z, order):
    alpha = table.alpha
    total = 0.0 + 0.0j
    for k in range(1, table.K + 1):
        ak = table.phi[k] * amplitude**k
        total += ak * (k * alpha) ** order * np.exp(k * alpha * z)
    return 2.0 * total.real


def test_eval_matches_direct_sum(solved):
    fwd, _, root = solved
    half = HalfOrbit(fwd, root, Side.POSITIVE)
    rng = np.random.default_rng(3)
    for z in rng.uniform(0.0, 6.0, 25):
        for order in range(5):
            expect = brute_eval(fwd, root, z, order)
            assert half.eval(float(z), order) == pytest.approx(expect, rel=1e-11, abs=1e-13)


def test_analytic_half_is_half_the_real_value(solved):
    fwd, _, root = solved
    half = HalfOrbit(fwd, root, Side.POSITIVE)
    z = np.linspace(0.2, 5.0, 40)
    for order in range(5):
        analytic = half.eval_analytic(z, order)
        assert np.allclose(2.0 * analytic.real, half.eval(z, order), rtol=1e-12, atol=1e-13)


def test_derivative_consistent_with_finite_difference(solved):
    fwd, _, root = solved
    half = HalfOrbit(fwd, root, Side.POSITIVE)
    hstep = 1e-6
    for z in (0.8, 1.5, 3.0):
        fd = (half.eval(z + hstep, 0) - half.eval(z - hstep, 0)) / (2 * hstep)
        assert half.eval(z, 1) == pytest.approx(fd, rel=1e-7, abs=1e-8)


def test_symmetric_orbit_is_even(solved):
    fwd, bwd, root = solved
    orbit = make_orbit(fwd, bwd, root)
    assert orbit.symmetric
    z = np.linspace(0.0, 8.0, 200)
    assert np.allclose(orbit.eval(z), orbit.eval(-z), rtol=0.0, atol=1e-10 * np.max(np.abs(orbit.eval(z))))


def test_value_continuity_at_join(solved):
    fwd, bwd, root = solved
    orbit = make_orbit(fwd, bwd, root)
    scale = np.max(np.abs(sample(orbit, -5, 5, 101)[:, 1]))
    assert abs(orbit.plus.eval(0.0) - orbit.minus.eval(0.0)) < 1e-10 * scale
    # the matched amplitude drives u(0) itself to zero
    assert abs(orbit.plus.eval(0.0)) < 1e-9 * scale


def test_wrong_side_table_rejected(solved):
    fwd, bwd, root = solved
    with pytest.raises(ValueError):
        HalfOrbit(fwd, root, Side.NEGATIVE)
    with pytest.raises(ValueError):
        HalfOrbit(bwd, root, Side.POSITIVE)


def test_sample_schema(solved):
    fwd, bwd, root = solved
    orbit = make_orbit(fwd, bwd, root)
    table = sample(orbit, -2.0, 2.0, 41)
    assert table.shape == (41, 6)
    assert table[0, 0] == -2.0 and table[-1, 0] == 2.0
    mid = 20
    assert table[mid, 1] == pytest.approx(orbit.eval(0.0), rel=1e-14)
    with pytest.raises(ValueError):
        sample(orbit, 2.0, -2.0, 41)
    with pytest.raises(ValueError):
        sample(orbit, -2.0, 2.0, 1)


def test_traveling_wave_speed_zero_blocks_identical(solved):
    fwd, bwd, root = solved
    orbit = make_orbit(fwd, bwd, root)
    table = traveling_wave(orbit, 0.0, -3.0, 3.0, 61, [0.0, 1.0, 2.0])
    blocks = table[:, 2].reshape(3, 61)
    assert np.array_equal(blocks[0], blocks[1])
    assert np.array_equal(blocks[0], blocks[2])


def test_traveling_wave_rigid_translation(solved):
    fwd, bwd, root = solved
    orbit = make_orbit(fwd, bwd, root)
    speed, t = 0.7, 2.0
    table = traveling_wave(orbit, speed, -5.0, 5.0, 201, [0.0, t])
    x = table[:201, 1]
    u0, ut = table[:201, 2], table[201:, 2]
    # u(x, t) equals the t = 0 profile shifted by speed * t
    expect = orbit.eval(x - speed * t)
    assert np.allclose(ut, expect, rtol=1e-13, atol=1e-14)
    assert np.allclose(u0, orbit.eval(x), rtol=1e-13, atol=1e-14)
