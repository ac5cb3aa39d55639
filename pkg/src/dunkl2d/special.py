"""Gamma function and the orthogonal polynomial families used by the solutions.

Scalar evaluators use forward three-term recurrences. The ``*_coefficients``
variants run the same recurrences on power-basis coefficient arrays so the
exact function algebra can carry the polynomials symbolically.
"""
from __future__ import annotations

import math

import numpy as np
from numpy.polynomial import polynomial as npoly

MAX_DEGREE = 64

# Lanczos approximation, g = 7, 9 terms.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


class DomainError(ValueError):
    """Argument outside the domain of a special function or rule."""


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0 via the Lanczos approximation."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"log_gamma requires a finite positive argument, got {x!r}")
    if x < 0.5:
        # reflection keeps the series in its accurate range
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for k in range(1, len(_LANCZOS_COEFFS)):
        acc += _LANCZOS_COEFFS[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def gamma(x: float) -> float:
    return math.exp(log_gamma(x))


def log_factorial(n: int) -> float:
    if n < 0:
        raise DomainError(f"factorial of negative integer {n}")
    return log_gamma(n + 1.0)


def _check_degree(n: int) -> None:
    if n < 0:
        raise DomainError(f"polynomial degree must be non-negative, got {n}")
    if n > MAX_DEGREE:
        raise DomainError(f"degree {n} exceeds cap {MAX_DEGREE}")


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^alpha(x)."""
    _check_degree(n)
    if alpha <= -1.0:
        raise DomainError(f"Laguerre parameter must exceed -1, got {alpha}")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev[()]
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur[()]


def jacobi(n: int, alpha: float, beta: float, x):
    """Jacobi polynomial P_n^(alpha, beta)(x); P_{-1} is taken as zero."""
    if n == -1:
        if alpha <= -1.0 or beta <= -1.0:
            raise DomainError("Jacobi parameters must exceed -1")
        return np.zeros_like(np.asarray(x, dtype=float))[()]
    _check_degree(n)
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError(f"Jacobi parameters must exceed -1, got ({alpha}, {beta})")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return prev[()]
    cur = 0.5 * ((alpha + beta + 2.0) * x + (alpha - beta))
    for k in range(2, n + 1):
        a, b, c, d = _jacobi_recurrence(k, alpha, beta)
        prev, cur = cur, ((b + c * x) * cur - d * prev) / a
    return cur[()]


def _jacobi_recurrence(k, alpha, beta):
    # a P_k = (b + c x) P_{k-1} - d P_{k-2}
    s = 2 * k + alpha + beta
    a = 2 * k * (k + alpha + beta) * (s - 2)
    b = (s - 1) * (alpha**2 - beta**2)
    c = (s - 1) * s * (s - 2)
    d = 2 * (k + alpha - 1) * (k + beta - 1) * s
    return a, b, c, d


def laguerre_coefficients(n: int, alpha: float) -> np.ndarray:
    """Power-basis coefficients (ascending) of L_n^alpha."""
    _check_degree(n)
    if alpha <= -1.0:
        raise DomainError(f"Laguerre parameter must exceed -1, got {alpha}")
    prev = np.array([1.0])
    if n == 0:
        return prev
    cur = np.array([1.0 + alpha, -1.0])
    for k in range(1, n):
        nxt = npoly.polysub(
            npoly.polymul([2 * k + 1 + alpha, -1.0], cur), (k + alpha) * prev
        ) / (k + 1)
        prev, cur = cur, nxt
    return cur


def jacobi_coefficients(n: int, alpha: float, beta: float) -> np.ndarray:
    """Power-basis coefficients (ascending) of P_n^(alpha, beta); n = -1 gives [0]."""
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError(f"Jacobi parameters must exceed -1, got ({alpha}, {beta})")
    if n == -1:
        return np.array([0.0])
    _check_degree(n)
    prev = np.array([1.0])
    if n == 0:
        return prev
    cur = 0.5 * np.array([alpha - beta, alpha + beta + 2.0])
    for k in range(2, n + 1):
        a, b, c, d = _jacobi_recurrence(k, alpha, beta)
        nxt = npoly.polysub(npoly.polymul([b, c], cur), d * prev) / a
        prev, cur = cur, nxt
    return cur


def hermite_norm_log(n: int, eta: float) -> float:
    """log of sqrt(m!/Gamma(m + eta + 1/2 + parity)) with m = n // 2."""
    m, odd = divmod(n, 2)
    return 0.5 * (log_factorial(m) - log_gamma(m + eta + 0.5 + odd))


def generalized_hermite_coefficients(n: int, eta: float) -> np.ndarray:
    """Power-basis coefficients of the normalized generalized Hermite polynomial H_n^eta."""
    if eta <= -0.5:
        raise DomainError(f"generalized Hermite parameter must exceed -1/2, got {eta}")
    _check_degree(n)
    m, odd = divmod(n, 2)
    lag = laguerre_coefficients(m, eta - 0.5 + odd)
    out = np.zeros(2 * m + odd + 1)
    out[odd::2] = lag
    sign = -1.0 if m % 2 else 1.0
    return sign * math.exp(hermite_norm_log(n, eta)) * out


def generalized_hermite(n: int, eta: float, x):
    """Generalized Hermite polynomial H_n^eta(x), built from Laguerre polynomials.

    Orthonormal against exp(-x^2) |x|^(2 eta) on the real line.
    """
    if eta <= -0.5:
        raise DomainError(f"generalized Hermite parameter must exceed -1/2, got {eta}")
    _check_degree(n)
    m, odd = divmod(n, 2)
    x = np.asarray(x, dtype=float)
    sign = -1.0 if m % 2 else 1.0
    val = laguerre(m, eta - 0.5 + odd, x * x)
    if odd:
        val = x * val
    return (sign * math.exp(hermite_norm_log(n, eta)) * val)[()]
