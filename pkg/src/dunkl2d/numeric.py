"""Finite-difference versions of the operators, acting on plain callables f(x, y).

Only used to cross-check the exact algebra on smooth non-polynomial functions.
Derivatives use the 4th-order central stencil with step ``h``; evaluation
points must stay away from the coordinate axes.
"""
from __future__ import annotations

import numpy as np

from .operators import DunklParams

DEFAULT_STEP = 1e-3


def fd_partial(f, axis: int, h: float = DEFAULT_STEP):
    def g(x, y):
        if axis == 1:
            return (-f(x + 2 * h, y) + 8 * f(x + h, y) - 8 * f(x - h, y) + f(x - 2 * h, y)) / (12 * h)
        return (-f(x, y + 2 * h) + 8 * f(x, y + h) - 8 * f(x, y - h) + f(x, y - 2 * h)) / (12 * h)

    return g


def reflect(f, axis: int):
    if axis == 1:
        return lambda x, y: f(-x, y)
    return lambda x, y: f(x, -y)


def difference(f, axis: int):
    """(f - R f) / x_axis."""
    rf = reflect(f, axis)
    if axis == 1:
        return lambda x, y: (f(x, y) - rf(x, y)) / x
    return lambda x, y: (f(x, y) - rf(x, y)) / y


def dunkl_standard(eta: float, axis: int, h: float = DEFAULT_STEP):
    def op(f):
        d, q = fd_partial(f, axis, h), difference(f, axis)
        return lambda x, y: d(x, y) + eta * q(x, y)

    return op


def dunkl_tilde(params: DunklParams, axis: int, h: float = DEFAULT_STEP):
    mu = params.mu1 if axis == 1 else params.mu2
    g = params.gamma

    def op(f):
        d, q = fd_partial(f, axis, h), difference(f, axis)
        dr = fd_partial(reflect(f, axis), axis, h)
        return lambda x, y: d(x, y) + mu * q(x, y) + g * dr(x, y)

    return op


def laplacian_cartesian(params: DunklParams, h: float = DEFAULT_STEP):
    D1, D2 = dunkl_tilde(params, 1, h), dunkl_tilde(params, 2, h)

    def op(f):
        a, b = D1(D1(f)), D2(D2(f))
        return lambda x, y: a(x, y) + b(x, y)

    return op


def laplacian_standard(eta1: float, eta2: float, h: float = DEFAULT_STEP):
    D1, D2 = dunkl_standard(eta1, 1, h), dunkl_standard(eta2, 2, h)

    def op(f):
        a, b = D1(D1(f)), D2(D2(f))
        return lambda x, y: a(x, y) + b(x, y)

    return op


# ------------------------------------------------------------------ polar forms


def _polar(f):
    return lambda rho, phi: f(rho * np.cos(phi), rho * np.sin(phi))


def _fd1(g, h):
    return lambda t: (-g(t + 2 * h) + 8 * g(t + h) - 8 * g(t - h) + g(t - 2 * h)) / (12 * h)


def _fd2(g, h):
    return lambda t: (-g(t + 2 * h) + 16 * g(t + h) - 30 * g(t) + 16 * g(t - h) - g(t - 2 * h)) / (12 * h * h)


def angular_B(params: DunklParams, h: float = DEFAULT_STEP):
    """B_phi on a function F(rho, phi); R1: phi -> pi - phi, R2: phi -> -phi."""
    e1, e2 = params.eta1, params.eta2

    def op(F):
        def B(rho, phi):
            g = lambda t: F(rho, t)  # noqa: E731
            val = g(phi)
            c, s = np.cos(phi), np.sin(phi)
            return (
                -0.5 * _fd2(g, h)(phi)
                + (e1 * s / c - e2 * c / s) * _fd1(g, h)(phi)
                + e1 * (val - g(np.pi - phi)) / (2 * c * c)
                + e2 * (val - g(-phi)) / (2 * s * s)
            )

        return B

    return op


def laplacian_polar(params: DunklParams, h: float = DEFAULT_STEP):
    """(1 - gamma^2)(d_rr + (1 + 2 eta)/rho d_r - 2 B_phi / rho^2), returned as f(x, y)."""
    Bop = angular_B(params, h)

    def op(f):
        F = _polar(f)
        BF = Bop(F)

        def lap(x, y):
            rho, phi = np.hypot(x, y), np.arctan2(y, x)
            g = lambda t: F(t, phi)  # noqa: E731
            radial = _fd2(g, h)(rho) + (1 + 2 * params.eta) / rho * _fd1(g, h)(rho)
            return params.one_minus_gamma2 * (radial - 2.0 * BF(rho, phi) / (rho * rho))

        return lap

    return op


def angular_momentum_cartesian(params: DunklParams, h: float = DEFAULT_STEP):
    """K = x D_2^eta2 - y D_1^eta1 (J = iK)."""
    D1, D2 = dunkl_standard(params.eta1, 1, h), dunkl_standard(params.eta2, 2, h)

    def op(f):
        a, b = D2(f), D1(f)
        return lambda x, y: x * a(x, y) - y * b(x, y)

    return op


def angular_momentum_polar(params: DunklParams, h: float = DEFAULT_STEP):
    """K = d_phi + eta2 cot(1 - R2) - eta1 tan(1 - R1), returned as f(x, y)."""
    e1, e2 = params.eta1, params.eta2

    def op(f):
        F = _polar(f)

        def K(x, y):
            rho, phi = np.hypot(x, y), np.arctan2(y, x)
            g = lambda t: F(rho, t)  # noqa: E731
            c, s = np.cos(phi), np.sin(phi)
            val = g(phi)
            return (
                _fd1(g, h)(phi)
                + e2 * (c / s) * (val - g(-phi))
                - e1 * (s / c) * (val - g(np.pi - phi))
            )

        return K

    return op


def sample_points() -> tuple:
    """Fixed off-axis evaluation points in all four quadrants."""
    base = np.array([0.35, 0.7, 1.1, 1.6])
    xs, ys = np.meshgrid(base, base * 0.9 + 0.05)
    x = np.concatenate([xs.ravel(), -xs.ravel(), -xs.ravel(), xs.ravel()])
    y = np.concatenate([ys.ravel(), ys.ravel(), -ys.ravel(), -ys.ravel()])
    return x, y


TEST_FUNCTIONS = {
    "gauss_cos": lambda x, y: np.exp(-(x * x + y * y) / 2) * np.cos(x + 2 * y + 0.3),
    "exp_rational": lambda x, y: np.exp(0.3 * x - 0.2 * y) / (1 + x * x + y * y),
    "sin_mix": lambda x, y: np.sin(1.3 * x) * np.exp(-y * y / 3) + x * y * np.cos(y),
}
