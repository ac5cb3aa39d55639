"""Finitely represented function families closed under the Dunkl operators.

Every operator used by the solvers maps these families into themselves, so
operator identities and eigen-equations become coefficient comparisons:

* ``Poly2``      polynomials in (x, y)
* ``GaussPoly2`` polynomial times exp(-(x^2 + y^2)/2)
* ``ExpPoly1``   polynomial in r times exp(-r^2/2) or exp(-r/2)
* ``TrigPoly``   P(cos phi) + sin(phi) Q(cos phi)

Coefficients are doubles; identities hold up to rounding.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.signal import convolve2d

from .special import log_gamma

DEGREE_CAP = 128
DIVISIBILITY_RTOL = 1e-9


class DegreeOverflowError(ArithmeticError):
    pass


class DivisibilityError(ArithmeticError):
    pass


def _last_nonzero(mask: np.ndarray) -> int:
    return mask.size - 1 - int(mask[::-1].argmax())


def _trim1(a: np.ndarray) -> np.ndarray:
    mask = a != 0.0
    return a[: _last_nonzero(mask) + 1] if mask.any() else np.zeros(1)


def _as_coeffs1(a) -> np.ndarray:
    if isinstance(a, np.ndarray) and a.dtype == np.float64:
        a = a.copy() if a.flags.writeable else a
    else:
        a = np.array(a, dtype=float, ndmin=1)
    if a.ndim != 1:
        raise ValueError("expected a 1-D coefficient array")
    if a.size == 0:
        a = np.zeros(1)
    if not math.isfinite(a.sum()) and not np.isfinite(a).all():
        raise ValueError("non-finite coefficient")
    if a[-1] == 0.0:
        a = _trim1(a)
    if a.size - 1 > DEGREE_CAP:
        raise DegreeOverflowError(f"degree {a.size - 1} exceeds cap {DEGREE_CAP}")
    a.setflags(write=False)
    return a


def _pad_add(a: np.ndarray, b: np.ndarray, sign: float = 1.0) -> np.ndarray:
    if a.ndim == 1:
        out = np.zeros(max(a.size, b.size))
        out[: a.size] += a
        out[: b.size] += sign * b
        return out
    out = np.zeros((max(a.shape[0], b.shape[0]), max(a.shape[1], b.shape[1])))
    out[: a.shape[0], : a.shape[1]] += a
    out[: b.shape[0], : b.shape[1]] += sign * b
    return out


# ---------------------------------------------------------------- two variables


def _finalize2(c: np.ndarray) -> np.ndarray:
    """Finite check, trim trailing zero rows/columns, degree cap, freeze."""
    # a finite sum implies finite entries; only fall back to the full scan otherwise
    if not math.isfinite(c.sum()) and not np.isfinite(c).all():
        raise ValueError("non-finite coefficient")
    if not (np.count_nonzero(c[-1]) and np.count_nonzero(c[:, -1])):
        mask = c != 0.0
        if not mask.any():
            c = np.zeros((1, 1))
        else:
            c = c[: _last_nonzero(mask.any(axis=1)) + 1, : _last_nonzero(mask.any(axis=0)) + 1]
    if c.shape[0] + c.shape[1] - 2 > DEGREE_CAP:
        i, j = np.nonzero(c)
        if (i + j).max() > DEGREE_CAP:
            raise DegreeOverflowError(f"total degree {(i + j).max()} exceeds cap {DEGREE_CAP}")
    c.setflags(write=False)
    return c


@dataclass(frozen=True, eq=False)
class Poly2:
    """Polynomial sum c[i, j] x^i y^j, stored densely and trimmed."""

    c: np.ndarray

    def __post_init__(self):
        c = self.c
        if isinstance(c, np.ndarray) and c.dtype == np.float64:
            c = c.copy() if c.flags.writeable else c
        else:
            c = np.array(c, dtype=float, ndmin=2)
        if c.ndim != 2:
            raise ValueError("Poly2 coefficients must be 2-D")
        if c.size == 0:
            c = np.zeros((1, 1))
        object.__setattr__(self, "c", _finalize2(c))

    @classmethod
    def from_terms(cls, terms: dict):
        if not terms:
            return cls(np.zeros((1, 1)))
        ni = max(i for i, _ in terms) + 1
        nj = max(j for _, j in terms) + 1
        c = np.zeros((ni, nj))
        for (i, j), v in terms.items():
            c[i, j] += v
        return cls(c)

    @classmethod
    def monomial(cls, i: int, j: int, coef: float = 1.0):
        c = np.zeros((i + 1, j + 1))
        c[i, j] = coef
        return cls(c)

    @classmethod
    def constant(cls, value: float = 1.0):
        return cls(np.array([[value]]))

    @classmethod
    def zero(cls):
        return cls(np.zeros((1, 1)))

    @classmethod
    def separable(cls, px, py):
        """Product px(x) * py(y) of two ascending coefficient arrays."""
        return cls(np.outer(np.asarray(px, float), np.asarray(py, float)))

    @property
    def terms(self) -> dict:
        return {(int(i), int(j)): float(self.c[i, j]) for i, j in zip(*np.nonzero(self.c))}

    @property
    def degree(self) -> int:
        i, j = np.nonzero(self.c)
        return int((i + j).max()) if i.size else 0

    @property
    def poly(self) -> "Poly2":
        return Poly2(self.c)

    def is_zero(self) -> bool:
        return not np.any(self.c)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.c)))

    def _new(self, c):
        # results of internal operations are fresh float arrays: skip conversion and copy
        out = object.__new__(type(self))
        object.__setattr__(out, "c", _finalize2(c))
        return out

    def _check_same(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __add__(self, other):
        self._check_same(other)
        return self._new(_pad_add(self.c, other.c))

    def __sub__(self, other):
        self._check_same(other)
        return self._new(_pad_add(self.c, other.c, -1.0))

    def __neg__(self):
        return self._new(-self.c)

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return self._new(float(other) * self.c)
        if type(other) is Poly2:
            return self._new(_mul2(self.c, other.c))
        if type(self) is Poly2 and isinstance(other, Poly2):
            return other * self
        return NotImplemented

    __rmul__ = __mul__

    def reflect(self, axis: int):
        """R_1 f(x, y) = f(-x, y), R_2 f(x, y) = f(x, -y)."""
        n = self.c.shape[axis - 1]
        sign = np.where(np.arange(n) % 2, -1.0, 1.0)
        return self._new(self.c * (sign[:, None] if axis == 1 else sign[None, :]))

    def mul_coord(self, axis: int):
        c = np.zeros((self.c.shape[0] + (axis == 1), self.c.shape[1] + (axis == 2)))
        if axis == 1:
            c[1:, :] = self.c
        else:
            c[:, 1:] = self.c
        return self._new(c)

    def _poly_diff(self, axis: int) -> np.ndarray:
        c = self.c if axis == 1 else self.c.T
        if c.shape[0] == 1:
            out = np.zeros((1, c.shape[1]))
        else:
            out = c[1:, :] * np.arange(1, c.shape[0])[:, None]
        return out if axis == 1 else out.T

    def diff(self, axis: int):
        return self._new(self._poly_diff(axis))

    def dunkl(self, axis: int, mu: float, gamma: float = 0.0):
        """d + (mu/x)(1 - R) + gamma d R along ``axis`` in a single coefficient pass."""
        c = self.c if axis == 1 else self.c.T
        out = _dunkl_rows(c, mu, gamma)
        return self._new(out if axis == 1 else out.T)

    def difference_quotient(self, axis: int):
        """(f - R f) / x_axis; exact because only odd powers survive the numerator."""
        c = self.c if axis == 1 else self.c.T
        out = np.zeros((max(c.shape[0] - 1, 1), c.shape[1]))
        out[0 : c.shape[0] - 1 : 2, :] = 2.0 * c[1::2, :]
        return self._new(out if axis == 1 else out.T)

    def homogeneous_part(self, m: int):
        i, j = np.indices(self.c.shape)
        return self._new(np.where(i + j == m, self.c, 0.0))

    def evaluate(self, x, y):
        return npoly.polyval2d(np.asarray(x, float), np.asarray(y, float), self.c)

    def __call__(self, x, y):
        return self.evaluate(x, y)

    def __repr__(self):
        return f"{type(self).__name__}({self.terms})"


def _dunkl_rows(c: np.ndarray, mu: float, gamma: float) -> np.ndarray:
    # x^i -> [i + mu (1 - (-1)^i) + gamma (-1)^i i] x^(i-1)
    n = c.shape[0]
    if n == 1:
        return np.zeros((1, c.shape[1]))
    i = np.arange(1, n)
    factor = np.where(i % 2, i * (1.0 - gamma) + 2.0 * mu, i * (1.0 + gamma))
    return c[1:, :] * factor[:, None]


def _mul2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return convolve2d(a, b)


class GaussPoly2(Poly2):
    """p(x, y) * exp(-(x^2 + y^2)/2); the envelope is even in both coordinates."""

    @classmethod
    def from_poly(cls, p: Poly2) -> "GaussPoly2":
        return cls(p.c)

    def __mul__(self, other):
        if type(other) is GaussPoly2:
            raise TypeError("product of two GaussPoly2 leaves the algebra")
        return super().__mul__(other)

    __rmul__ = __mul__

    def diff(self, axis: int):
        # d/dx (p e) = (dp/dx - x p) e
        return self._new(_pad_add(self._poly_diff(axis), Poly2(self.c).mul_coord(axis).c, -1.0))

    def dunkl(self, axis: int, mu: float, gamma: float = 0.0):
        # the envelope adds -x (p + gamma R p)
        c = self.c if axis == 1 else self.c.T
        sign = np.where(np.arange(c.shape[0]) % 2, -1.0, 1.0)
        env = np.zeros((c.shape[0] + 1, c.shape[1]))
        env[1:, :] = c * (1.0 + gamma * sign)[:, None]
        out = _pad_add(_dunkl_rows(c, mu, gamma), env, -1.0)
        return self._new(out if axis == 1 else out.T)

    def evaluate(self, x, y):
        x = np.asarray(x, float)
        y = np.asarray(y, float)
        return npoly.polyval2d(x, y, self.c) * np.exp(-0.5 * (x * x + y * y))


def env_derivative(f, axis: int = 1):
    """Product-rule derivative under the envelope (GaussPoly2 or ExpPoly1)."""
    if isinstance(f, ExpPoly1):
        return f.diff()
    return f.diff(axis)


def reflect(f, axis: int):
    return f.reflect(axis)


def difference_quotient(f, axis: int):
    return f.difference_quotient(axis)


# ----------------------------------------------------------------- one variable


@dataclass(frozen=True, eq=False)
class ExpPoly1:
    """p(r) * envelope(r) with envelope exp(-r^2/2) ('gauss') or exp(-r/2) ('exp')."""

    c: np.ndarray
    envelope: str = "gauss"

    def __post_init__(self):
        if self.envelope not in ("gauss", "exp"):
            raise ValueError(f"unknown envelope {self.envelope!r}")
        object.__setattr__(self, "c", _as_coeffs1(self.c))

    def _new(self, c):
        return ExpPoly1(c, self.envelope)

    def _check_same(self, other):
        if not isinstance(other, ExpPoly1) or other.envelope != self.envelope:
            raise TypeError("ExpPoly1 values must share an envelope")

    def __add__(self, other):
        self._check_same(other)
        return self._new(_pad_add(self.c, other.c))

    def __sub__(self, other):
        self._check_same(other)
        return self._new(_pad_add(self.c, other.c, -1.0))

    def __neg__(self):
        return self._new(-self.c)

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return self._new(float(other) * self.c)
        return NotImplemented

    __rmul__ = __mul__

    def mul_poly(self, coeffs) -> "ExpPoly1":
        return self._new(npoly.polymul(self.c, np.asarray(coeffs, float)))

    def mul_r(self, power: int = 1) -> "ExpPoly1":
        return self._new(np.concatenate([np.zeros(power), self.c]))

    def diff(self) -> "ExpPoly1":
        dp = npoly.polyder(self.c) if self.c.size > 1 else np.zeros(1)
        if self.envelope == "gauss":
            return self._new(_pad_add(dp, np.concatenate([[0.0], self.c]), -1.0))
        return self._new(_pad_add(dp, 0.5 * self.c, -1.0))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.c)))

    def is_zero(self) -> bool:
        return not np.any(self.c)

    def evaluate(self, r):
        r = np.asarray(r, float)
        env = np.exp(-0.5 * r * r) if self.envelope == "gauss" else np.exp(-0.5 * r)
        return npoly.polyval(r, self.c) * env

    def __call__(self, r):
        return self.evaluate(r)


# -------------------------------------------------------------------- angular


@dataclass(frozen=True, eq=False)
class TrigPoly:
    """f(phi) = P(c) + s Q(c) with c = cos(phi), s = sin(phi); s^2 is always reduced."""

    P: np.ndarray
    Q: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "P", _as_coeffs1(self.P))
        object.__setattr__(self, "Q", _as_coeffs1(self.Q))

    @classmethod
    def zero(cls):
        return cls([0.0], [0.0])

    @classmethod
    def cos_poly(cls, coeffs):
        return cls(coeffs, [0.0])

    @classmethod
    def sin_times(cls, coeffs):
        return cls([0.0], coeffs)

    def __add__(self, other):
        return _trig(_pad_add(self.P, other.P), _pad_add(self.Q, other.Q))

    def __sub__(self, other):
        return _trig(_pad_add(self.P, other.P, -1.0), _pad_add(self.Q, other.Q, -1.0))

    def __neg__(self):
        return _trig(-self.P, -self.Q)

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return _trig(float(other) * self.P, float(other) * self.Q)
        if isinstance(other, TrigPoly):
            P = _pad_add(np.convolve(self.P, other.P), _times_one_minus_c2(np.convolve(self.Q, other.Q)))
            Q = _pad_add(np.convolve(self.P, other.Q), np.convolve(self.Q, other.P))
            return _trig(P, Q)
        return NotImplemented

    __rmul__ = __mul__

    def reflect(self, axis: int) -> "TrigPoly":
        """axis 1: phi -> pi - phi (c -> -c); axis 2: phi -> -phi (s -> -s)."""
        if axis == 1:
            return _trig(_flip_odd(self.P), _flip_odd(self.Q))
        return _trig(self.P, -self.Q)

    def dphi(self) -> "TrigPoly":
        # d/dphi (P + s Q) = [c Q - (1 - c^2) Q'] + s [-P']
        newP = _pad_add(_times_c(self.Q), _times_one_minus_c2(_derivative(self.Q)), -1.0)
        return _trig(newP, -_derivative(self.P))

    def mul_cos(self) -> "TrigPoly":
        return _trig(_times_c(self.P), _times_c(self.Q))

    def mul_sin(self) -> "TrigPoly":
        return _trig(_times_one_minus_c2(self.Q), self.P)

    def divide(self, by: str) -> "TrigPoly":
        """Exact quotient by 'sin' or 'cos'; raises DivisibilityError otherwise."""
        scale = max(self.max_abs(), 1e-300)
        if by == "cos":
            if abs(self.P[0]) > DIVISIBILITY_RTOL * scale or abs(self.Q[0]) > DIVISIBILITY_RTOL * scale:
                raise DivisibilityError("function does not vanish where cos(phi) = 0")
            return _trig(self.P[1:], self.Q[1:])
        if by == "sin":
            # (P + s Q)/s = Q + s P/(1 - c^2)
            quot, rem = npoly.polydiv(self.P, [1.0, 0.0, -1.0])
            if np.any(np.abs(rem) > DIVISIBILITY_RTOL * scale):
                raise DivisibilityError("function does not vanish where sin(phi) = 0")
            return _trig(self.Q, quot)
        raise ValueError(f"divide by 'sin' or 'cos', got {by!r}")

    def max_abs(self) -> float:
        return float(max(np.max(np.abs(self.P)), np.max(np.abs(self.Q))))

    def integrate_weighted(self, p_cos: float = 0.0, p_sin: float = 0.0) -> float:
        """Exact integral over [0, 2 pi] against |cos|^p_cos |sin|^p_sin via Beta moments.

        The s Q(c) part is odd under phi -> -phi and integrates to zero. The sum
        cancels heavily for high-degree inputs; keep it to low degrees.
        """
        total = 0.0
        b = 0.5 * (p_sin + 1.0)
        for i in range(0, self.P.size, 2):
            if self.P[i]:
                a = 0.5 * (i + p_cos + 1.0)
                total += 2.0 * self.P[i] * math.exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b))
        return total

    def is_zero(self) -> bool:
        return not (np.any(self.P) or np.any(self.Q))

    def evaluate(self, phi):
        phi = np.asarray(phi, float)
        c = np.cos(phi)
        return npoly.polyval(c, self.P) + np.sin(phi) * npoly.polyval(c, self.Q)

    def __call__(self, phi):
        return self.evaluate(phi)

    def __repr__(self):
        return f"TrigPoly(P={self.P.tolist()}, Q={self.Q.tolist()})"


def _coeffs_fast(a: np.ndarray) -> np.ndarray:
    if not math.isfinite(a.sum()) and not np.isfinite(a).all():
        raise ValueError("non-finite coefficient")
    if a.size == 0:
        a = np.zeros(1)
    elif a[-1] == 0.0:
        a = _trim1(a)
    if a.size - 1 > DEGREE_CAP:
        raise DegreeOverflowError(f"degree {a.size - 1} exceeds cap {DEGREE_CAP}")
    a.setflags(write=False)
    return a


def _trig(P: np.ndarray, Q: np.ndarray) -> TrigPoly:
    """TrigPoly from freshly computed 1-D float arrays (internal fast path)."""
    out = object.__new__(TrigPoly)
    object.__setattr__(out, "P", _coeffs_fast(P))
    object.__setattr__(out, "Q", _coeffs_fast(Q))
    return out


def _times_c(a: np.ndarray) -> np.ndarray:
    return np.concatenate(([0.0], a))


def _times_one_minus_c2(a: np.ndarray) -> np.ndarray:
    out = np.zeros(a.size + 2)
    out[: a.size] = a
    out[2:] -= a
    return out


def _derivative(a: np.ndarray) -> np.ndarray:
    return a[1:] * np.arange(1, a.size) if a.size > 1 else np.zeros(1)


def _flip_odd(a: np.ndarray) -> np.ndarray:
    return a * np.where(np.arange(a.size) % 2, -1.0, 1.0)


def trig_divide(f: TrigPoly, by: str) -> TrigPoly:
    return f.divide(by)


def trig_from_homogeneous(p: Poly2) -> TrigPoly:
    """Angular factor g of a homogeneous polynomial p = rho^m g(phi)."""
    # x^i y^j -> c^i s^j with s^(2k) = (1 - c^2)^k
    n = p.c.shape[0] + p.c.shape[1]
    P = np.zeros(n)
    Q = np.zeros(n)
    for (i, j), v in p.terms.items():
        base = np.zeros(1 + i)
        base[i] = v
        for _ in range(j // 2):
            base = _times_one_minus_c2(base)
        target = Q if j % 2 else P
        target[: base.size] += base
    return TrigPoly(P, Q)


def compose_cos_poly(coeffs_x, inner) -> np.ndarray:
    """Coefficients in c of p(inner(c)) for a power series p and polynomial inner."""
    out = np.zeros(1)
    for a in np.asarray(coeffs_x, float)[::-1]:
        out = npoly.polyadd(npoly.polymul(out, inner), [a])
    return out


# ------------------------------------------------------------------- residuals


def coefficient_residual(lhs, rhs, *scale_terms) -> float:
    """max |coef(lhs - rhs)| relative to the largest coefficient among all terms."""
    diff = lhs - rhs
    scale = max([lhs.max_abs(), rhs.max_abs()] + [t.max_abs() for t in scale_terms])
    if scale == 0.0:
        return 0.0
    return diff.max_abs() / scale


def evaluate(f, *point):
    return f.evaluate(*point)
