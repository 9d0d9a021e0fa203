"""Parameter container, nonlinearity, pointwise residual, fixed points."""

import math

import pytest

from homoclinic_series.model import (
    JetValue,
    SystemParams,
    eval_nonlinearity,
    fixed_points,
    residual_at,
)
from homoclinic_series.spectrum import char_roots


def test_reversibility_flag():
    assert SystemParams(a=1.0, b=1.0, c=0.3, d=0.1, g=0.2, h=0.4).reversible()
    assert not SystemParams(a=1.0, b=1.0, p=0.01).reversible()
    assert not SystemParams(a=1.0, b=1.0, s=1e-12).reversible()


def test_rejects_non_finite():
    with pytest.raises(ValueError):
        SystemParams(a=math.nan, b=1.0)
    with pytest.raises(ValueError):
        SystemParams(a=1.0, b=math.inf)


def test_nonlinearity_hand_value():
    params = SystemParams(a=0, b=0, c=1, d=2, g=3, h=4, p=5, q=6, r=7, s=8)
    jet = JetValue(u=2.0, u1=-1.0, u2=3.0, u3=0.5)
    # c u u'' + d u'^2 + g u^2 + h u^3 + p u u''' + q u' u'' + r u u' + s u^3 u'
    expected = 1 * 2 * 3 + 2 * 1 + 3 * 4 + 4 * 8 + 5 * 2 * 0.5 + 6 * (-1) * 3 + 7 * 2 * (-1) + 8 * 8 * (-1)
    assert eval_nonlinearity(params, jet) == pytest.approx(expected, rel=1e-15)


def test_reversible_nonlinearity_parity():
    # under (u, u', u'', u''') -> (u, -u', u'', -u''') a reversible f is even
    params = SystemParams(a=0.8, b=1.5, c=0.2, d=0.1, g=0.05, h=0.02)
    jet = JetValue(u=1.3, u1=0.7, u2=-0.4, u3=2.1)
    flipped = JetValue(u=1.3, u1=-0.7, u2=-0.4, u3=-2.1)
    assert eval_nonlinearity(params, jet) == pytest.approx(
        eval_nonlinearity(params, flipped), rel=1e-15
    )


def test_residual_vanishes_on_linear_mode():
    # u = e^{alpha z} solves the linear equation; jet at z = 0 is alpha powers
    a, b = 2.0, 3.0  # Region2: real roots, real jet
    alpha = char_roots(a, b)[0].real
    params = SystemParams(a=a, b=b)
    jet = JetValue(u=1.0, u1=alpha, u2=alpha**2, u3=alpha**3, u4=alpha**4)
    assert abs(residual_at(params, jet)) < 1e-12


def test_residual_matches_definition():
    params = SystemParams(a=0.8, b=1.5, c=0.2, d=0.1, g=0.05, h=0.02)
    jet = JetValue(u=0.3, u1=-0.2, u2=0.9, u3=1.1, u4=-0.5)
    by_hand = jet.u4 - params.b * jet.u2 + params.a * jet.u - eval_nonlinearity(params, jet)
    assert residual_at(params, jet) == pytest.approx(by_hand, rel=1e-15)


def test_fixed_points_origin_always_present():
    assert fixed_points(SystemParams(a=1.0, b=2.0)) == [0.0]


def test_fixed_points_quadratic_and_cubic():
    # a u - g u^2 = 0 -> u = a / g
    pts = fixed_points(SystemParams(a=2.0, b=0.0, g=0.5))
    assert pts == [0.0, 4.0]
    # a u - g u^2 - h u^3 = 0 with a=2, g=1, h=1 -> u = 1, -2
    pts = fixed_points(SystemParams(a=2.0, b=0.0, g=1.0, h=1.0))
    assert pts == pytest.approx([-2.0, 0.0, 1.0])


def test_fixed_points_complex_pair_dropped():
    # u^2 + a/h < 0 case: only the origin is real
    pts = fixed_points(SystemParams(a=-1.0, b=0.0, h=1.0))
    assert pts == [0.0]
