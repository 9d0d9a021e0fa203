"""Characteristic quartet and region classification."""

import numpy as np
import pytest

from homoclinic_series.spectrum import (
    Region,
    char_roots,
    classify_by_eigenvalues,
    classify_region,
    resonance_poly,
    spectrum,
)


def quartic(alpha, a, b):
    return alpha**4 - b * alpha**2 + a


def test_roots_satisfy_quartic():
    rng = np.random.default_rng(7)
    for _ in range(50):
        a = float(rng.uniform(-2.0, 3.0))
        b = float(rng.uniform(-3.0, 3.0))
        for root in char_roots(a, b):
            assert abs(quartic(root, a, b)) < 1e-10 * (1.0 + abs(root)) ** 4


def test_saddle_focus_ordering():
    roots = char_roots(0.8, 1.5)
    r1, r2, r3, r4 = roots
    assert r1.real < 0 < r1.imag
    assert r2 == r1.conjugate()
    assert r4 == -r1
    assert r3 == -r2


def test_quartet_sign_structure():
    # roots always come as {alpha, -alpha, conj(alpha), -conj(alpha)}
    roots = set(char_roots(0.37, -1.2))
    for z in list(roots):
        assert any(abs(z + w) < 1e-12 for w in roots)


@pytest.mark.parametrize(
    "a,b,region",
    [
        (0.8, 1.5, Region.REGION1),
        (0.5, 1.0, Region.REGION1),
        (0.6, 1.5, Region.REGION1),
        (15.0, 3.75, Region.REGION1),
        (1.0, 2.0, Region.C3),
        (1.0, -2.0, Region.C2),
        (0.0, 1.0, Region.C0),
        (0.0, -1.0, Region.C1),
        (-1.0, 0.5, Region.REGION3),
        (2.0, 3.0, Region.REGION2),
        (2.0, -3.0, Region.REGION4),
        (0.0, 0.0, Region.ORIGIN),
    ],
)
def test_classification_examples(a, b, region):
    assert classify_region(a, b) is region


def test_classification_rejects_bad_tol():
    with pytest.raises(ValueError):
        classify_region(0.8, 1.5, tol=0.0)


def test_resonance_free_in_region1():
    # p(k alpha) = 0 at k = 1 and only there for saddle-focus points
    for a, b in [(0.8, 1.5), (0.6, 1.5), (0.5, 1.0)]:
        alpha = char_roots(a, b)[0]
        assert abs(resonance_poly(1, alpha, a, b)) < 1e-12
        for k in range(2, 31):
            assert abs(resonance_poly(k, alpha, a, b)) > 1e-3


def test_spectrum_bundles():
    spec = spectrum(0.8, 1.5)
    assert spec.region is Region.REGION1
    assert spec.roots == char_roots(0.8, 1.5)


def test_eigenvalue_oracle_agrees_on_coarse_grid():
    bs = np.linspace(-3.0, 3.0, 21)
    a_s = np.linspace(-1.0, 3.0, 21)
    curves = {Region.C0, Region.C1, Region.C2, Region.C3, Region.ORIGIN}
    for b in bs:
        for a in a_s:
            tagged = classify_region(float(a), float(b))
            oracle = classify_by_eigenvalues(float(a), float(b))
            if tagged in curves or oracle in curves:
                continue  # boundary points: tolerance semantics differ
            assert tagged is oracle, (a, b)
