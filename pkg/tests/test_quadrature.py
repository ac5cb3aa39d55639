import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dunkl2d.quadrature import Domain, gauss_legendre, weighted_integral, weighted_rule
from dunkl2d.special import DomainError, laguerre


def test_gauss_legendre_small_rules():
    r1 = gauss_legendre(1)
    assert r1.nodes.tolist() == [0.0] and r1.weights.tolist() == pytest.approx([2.0])
    r2 = gauss_legendre(2)
    assert r2.nodes == pytest.approx([-1 / math.sqrt(3), 1 / math.sqrt(3)], abs=1e-12)
    assert r2.weights == pytest.approx([1.0, 1.0], abs=1e-12)
    assert gauss_legendre(3).integrate(lambda x: x**4) == pytest.approx(0.4, abs=1e-12)


def test_gauss_legendre_rejects_zero():
    with pytest.raises(DomainError):
        gauss_legendre(0)


@given(st.integers(1, 40))
def test_gauss_legendre_exactness_and_shape(n):
    rule = gauss_legendre(n)
    assert np.all(np.diff(rule.nodes) > 0)
    assert np.all(rule.weights > 0)
    assert np.all(np.abs(rule.nodes) < 1)
    for k in range(2 * n):
        exact = 0.0 if k % 2 else 2.0 / (k + 1)
        assert abs(rule.integrate(lambda x: x**k) - exact) < 1e-12


def test_mapped_rule():
    rule = gauss_legendre(6).mapped(1.0, 3.0)
    assert rule.integrate(lambda x: x**3) == pytest.approx((3**4 - 1) / 4, rel=1e-13)


@pytest.mark.parametrize(
    "f, p, expected",
    [
        (lambda x: np.exp(-x * x), 0.0, math.sqrt(math.pi)),
        (lambda x: np.exp(-x * x), 1.0, 1.0),
        (lambda x: np.zeros_like(x), 0.0, 0.0),
    ],
)
def test_weighted_integral_examples(f, p, expected):
    assert weighted_integral(f, p, Domain.real_line()) == pytest.approx(expected, abs=1e-12)


@given(st.floats(-0.95, 4.0))
def test_half_line_gamma_moments(p):
    val = weighted_integral(lambda x: np.exp(-x), p, Domain.half_line(200.0))
    assert val == pytest.approx(math.gamma(p + 1), rel=1e-11)


@given(st.floats(-0.95, 3.0), st.floats(-0.95, 3.0))
def test_circle_beta_moments(a, b):
    val = weighted_integral(lambda phi: np.ones_like(phi), (a, b), Domain.circle())
    ref = 2 * math.exp(math.lgamma((a + 1) / 2) + math.lgamma((b + 1) / 2) - math.lgamma((a + b) / 2 + 1))
    assert val == pytest.approx(ref, rel=1e-11)


def test_laguerre_orthogonality():
    for alpha in (-0.5, 0.0, 1.3):
        x, w = weighted_rule(alpha, Domain.half_line(200.0))
        L = np.array([laguerre(n, alpha, x) for n in range(9)])
        G = (L * w * np.exp(-x)) @ L.T
        norms = np.array([math.exp(math.lgamma(n + alpha + 1) - math.lgamma(n + 1)) for n in range(9)])
        off = G - np.diag(np.diag(G))
        assert np.max(np.abs(off)) < 1e-8
        assert np.allclose(np.diag(G), norms, rtol=1e-10)


@pytest.mark.parametrize("kwargs", [
    {"weight": -1.0, "domain": Domain.real_line()},
    {"weight": (0.0, -1.5), "domain": Domain.circle()},
    {"weight": 0.0, "domain": Domain.real_line(), "rule_size": -3},
    {"weight": 0.0, "domain": Domain.real_line(), "rule_size": 0},
    {"weight": (0.1, 0.2), "domain": Domain.half_line()},
])
def test_weighted_rule_rejects_bad_input(kwargs):
    with pytest.raises(DomainError):
        weighted_rule(**kwargs)


def test_interval_weight_at_left_end():
    # (x - 1)^0.5 on [1, 2]
    val = weighted_integral(lambda x: np.ones_like(x), 0.5, Domain.interval(1.0, 2.0))
    assert val == pytest.approx(2 / 3, rel=1e-13)
