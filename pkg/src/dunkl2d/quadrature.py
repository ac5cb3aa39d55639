"""Gauss rules and weighted integrals over the domains the scalar products live on.

All weights in the problem are powers of |x|, r, |cos phi| or |sin phi|. Panels
that touch a zero of the weight use a Gauss-Jacobi rule that absorbs the power
exactly, every other panel is plain Gauss-Legendre.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy.special import roots_jacobi

from .special import DomainError

DEFAULT_PANELS = 32
DEFAULT_NODES = 16
GAUSSIAN_TRUNCATION = 12.0
EXPONENTIAL_TRUNCATION = 200.0


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    lower: float = -1.0
    upper: float = 1.0

    def __post_init__(self):
        if self.nodes.shape != self.weights.shape:
            raise ValueError("nodes and weights must have equal length")

    def integrate(self, f: Callable) -> float:
        return float(np.dot(self.weights, f(self.nodes)))

    def mapped(self, a: float, b: float) -> "QuadratureRule":
        half = 0.5 * (b - a)
        return QuadratureRule(a + half * (self.nodes + 1.0), half * self.weights, a, b)


@lru_cache(maxsize=None)
def _legendre_nodes(n: int):
    x = np.cos(np.pi * (np.arange(1, n + 1) - 0.25) / (n + 0.5))
    for _ in range(100):
        p0, p1 = np.ones_like(x), x.copy()
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    # recompute derivative at the converged roots for the weights
    p0, p1 = np.ones_like(x), x.copy()
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    dp = n * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    order = np.argsort(x)
    return x[order], w[order]


def gauss_legendre(n: int) -> QuadratureRule:
    """n-point Gauss-Legendre rule on [-1, 1]; roots by Newton iteration."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"Gauss-Legendre rule needs n >= 1, got {n!r}")
    x, w = _legendre_nodes(int(n))
    return QuadratureRule(x.copy(), w.copy())


@lru_cache(maxsize=None)
def _jacobi_nodes(n: int, a: float, b: float):
    x, w = roots_jacobi(n, a, b)
    return x, w


def _endpoint_rule(n, lo, hi, p_lo, p_hi):
    """Nodes/weights on [lo, hi] for weight (x - lo)^p_lo (hi - x)^p_hi."""
    if p_lo == 0.0 and p_hi == 0.0:
        r = gauss_legendre(n).mapped(lo, hi)
        return r.nodes, r.weights
    t, w = _jacobi_nodes(n, float(p_hi), float(p_lo))
    half = 0.5 * (hi - lo)
    return lo + half * (t + 1.0), w * half ** (1.0 + p_lo + p_hi)


@dataclass(frozen=True)
class Domain:
    """Integration domain. ``kind`` is one of interval, half_line, real_line, circle."""

    kind: str
    lower: float
    upper: float

    @classmethod
    def interval(cls, a: float, b: float) -> "Domain":
        return cls("interval", float(a), float(b))

    @classmethod
    def half_line(cls, truncation: float = GAUSSIAN_TRUNCATION) -> "Domain":
        return cls("half_line", 0.0, float(truncation))

    @classmethod
    def real_line(cls, truncation: float = GAUSSIAN_TRUNCATION) -> "Domain":
        return cls("real_line", -float(truncation), float(truncation))

    @classmethod
    def circle(cls) -> "Domain":
        return cls("circle", 0.0, 2.0 * math.pi)


def _panel_rule(lo, hi, panels, nodes, p_at_lo):
    edges = np.linspace(lo, hi, panels + 1)
    xs, ws = [], []
    for i in range(panels):
        p_lo = p_at_lo if i == 0 else 0.0
        x, w = _endpoint_rule(nodes, edges[i], edges[i + 1], p_lo, 0.0)
        if i > 0 and p_at_lo != 0.0:
            w = w * (x - lo) ** p_at_lo
        xs.append(x)
        ws.append(w)
    return np.concatenate(xs), np.concatenate(ws)


def weighted_rule(
    weight, domain: Domain, rule_size: int = DEFAULT_NODES, panels: int = DEFAULT_PANELS
):
    """Nodes and weights (weight function folded in) for ``domain``.

    ``weight`` is the exponent p of |x|^p (real_line), x^p (half_line),
    (x - a)^p (interval), or a pair (p1, p2) for |cos|^p1 |sin|^p2 (circle).
    """
    if isinstance(rule_size, bool) or rule_size < 1:
        raise DomainError(f"rule_size must be a positive integer, got {rule_size!r}")
    if panels < 1:
        raise DomainError(f"panel count must be positive, got {panels!r}")
    exps = tuple(np.atleast_1d(np.asarray(weight, dtype=float)))
    if any(p <= -1.0 for p in exps):
        raise DomainError(f"weight exponent {exps} is not integrable")

    if domain.kind == "circle":
        p_cos, p_sin = exps if len(exps) == 2 else (exps[0], exps[0])
        return _circle_rule(p_cos, p_sin, rule_size)
    if len(exps) != 1:
        raise DomainError(f"{domain.kind} takes a single weight exponent")
    p = exps[0]
    if domain.kind in ("half_line", "interval"):
        return _panel_rule(domain.lower, domain.upper, panels, rule_size, p)
    if domain.kind == "real_line":
        x, w = _panel_rule(0.0, domain.upper, panels, rule_size, p)
        return np.concatenate([-x[::-1], x]), np.concatenate([w[::-1], w])
    raise DomainError(f"unknown domain kind {domain.kind!r}")


def _circle_rule(p_cos, p_sin, n):
    # per quadrant: Jacobi weight in phi at both ends times the smooth factor
    # (sin d/d)^p for each end, d being the distance to that end
    n = max(n, 8) * 2
    half = math.pi / 4
    xs, ws = [], []
    for q in range(4):
        lo = q * math.pi / 2
        # sin vanishes at multiples of pi, cos at odd multiples of pi/2
        p_lo, p_hi = (p_sin, p_cos) if q % 2 == 0 else (p_cos, p_sin)
        t, w = _jacobi_nodes(n, float(p_hi), float(p_lo))
        d_lo = half * (1.0 + t)
        d_hi = half * (1.0 - t)
        corr = (np.sin(d_lo) / d_lo) ** p_lo * (np.sin(d_hi) / d_hi) ** p_hi
        xs.append(lo + d_lo)
        ws.append(w * half ** (1.0 + p_lo + p_hi) * corr)
    return np.concatenate(xs), np.concatenate(ws)


def weighted_integral(
    f: Callable,
    weight,
    domain: Domain,
    rule_size: int = DEFAULT_NODES,
    panels: int = DEFAULT_PANELS,
) -> float:
    """Approximate the integral of f times the power weight over ``domain``.

    ``f`` must accept a numpy array of abscissae.
    """
    x, w = weighted_rule(weight, domain, rule_size, panels)
    return float(np.dot(w, np.broadcast_to(f(x), x.shape)))
