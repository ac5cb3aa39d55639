import numpy as np
import pytest

from dunkl2d import numeric
from dunkl2d.algebra import Poly2
from dunkl2d.operators import laplacian_cartesian, make_params

FD_TOL = 1e-5
PARAMS = [make_params(0.3, 0.5, 0.5), make_params(-0.3, 0.9, -0.7), make_params(0, 0, 0)]


def test_sample_points_off_axis():
    x, y = numeric.sample_points()
    assert x.size == y.size == 64
    assert np.min(np.abs(x)) > 0.3 and np.min(np.abs(y)) > 0.3
    assert {(np.sign(a), np.sign(b)) for a, b in zip(x, y)} == {(1, 1), (-1, 1), (-1, -1), (1, -1)}


def test_fd_partial_accuracy():
    f = lambda x, y: np.sin(x) * np.exp(y)  # noqa: E731
    x, y = numeric.sample_points()
    np.testing.assert_allclose(numeric.fd_partial(f, 1)(x, y), np.cos(x) * np.exp(y), atol=1e-10)
    np.testing.assert_allclose(numeric.fd_partial(f, 2)(x, y), f(x, y), atol=1e-10)


def test_difference_quotient_numeric():
    f = lambda x, y: x**3 + x * y  # noqa: E731
    x, y = numeric.sample_points()
    np.testing.assert_allclose(numeric.difference(f, 1)(x, y), 2 * x * x + 2 * y, rtol=1e-13)


@pytest.mark.parametrize("p", PARAMS)
@pytest.mark.parametrize("name", sorted(numeric.TEST_FUNCTIONS))
def test_fd_factorization(p, name):
    f = numeric.TEST_FUNCTIONS[name]
    x, y = numeric.sample_points()
    lhs = numeric.laplacian_cartesian(p)(f)(x, y)
    rhs = p.one_minus_gamma2 * numeric.laplacian_standard(p.eta1, p.eta2)(f)(x, y)
    polar = numeric.laplacian_polar(p)(f)(x, y)
    scale = max(1.0, np.abs(lhs).max())
    assert np.max(np.abs(lhs - rhs)) / scale < FD_TOL
    assert np.max(np.abs(lhs - polar)) / scale < FD_TOL


@pytest.mark.parametrize("p", PARAMS)
def test_fd_angular_momentum_forms(p):
    f = numeric.TEST_FUNCTIONS["gauss_cos"]
    x, y = numeric.sample_points()
    a = numeric.angular_momentum_cartesian(p)(f)(x, y)
    b = numeric.angular_momentum_polar(p)(f)(x, y)
    assert np.max(np.abs(a - b)) / max(1.0, np.abs(a).max()) < FD_TOL


def test_fd_agrees_with_algebra():
    p = PARAMS[0]
    poly = Poly2.from_terms({(3, 1): 0.7, (2, 0): -1.0, (1, 2): 0.4, (0, 4): 0.2})
    x, y = numeric.sample_points()
    exact = laplacian_cartesian(p)(poly)(x, y)
    fd = numeric.laplacian_cartesian(p)(poly)(x, y)
    assert np.max(np.abs(exact - fd)) / np.abs(exact).max() < FD_TOL
