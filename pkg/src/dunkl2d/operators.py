"""Two-parameter Dunkl derivatives and the operators built from them.

Operators are ``LinearOperator`` objects acting on algebra values. Cartesian
operators accept ``Poly2`` and ``GaussPoly2``; angular ones act on ``TrigPoly``.
The angular momentum J carries a factor i, so the real operator K = J/i is what
gets implemented (J^2 = -K^2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .algebra import GaussPoly2, Poly2, TrigPoly


class ParameterError(ValueError):
    pass


class UnsupportedDomainError(TypeError):
    pass


@dataclass(frozen=True)
class DunklParams:
    mu1: float
    mu2: float
    gamma: float
    eta1: float = field(init=False)
    eta2: float = field(init=False)

    def __post_init__(self):
        for name in ("mu1", "mu2", "gamma"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ParameterError(f"{name} must be a finite real, got {v!r}")
        if not -1.0 < self.gamma < 1.0:
            raise ParameterError(f"gamma must satisfy -1 < gamma < 1, got {self.gamma}")
        if self.mu1 <= -0.5:
            raise ParameterError(f"mu1 must satisfy mu1 > -1/2, got {self.mu1}")
        if self.mu2 <= -0.5:
            raise ParameterError(f"mu2 must satisfy mu2 > -1/2, got {self.mu2}")
        eta1 = self.mu1 / (1.0 - self.gamma)
        eta2 = self.mu2 / (1.0 - self.gamma)
        # the weight |x|^(2 eta) must stay locally integrable
        if eta1 <= -0.5:
            raise ParameterError(f"eta1 = mu1/(1-gamma) must exceed -1/2, got {eta1}")
        if eta2 <= -0.5:
            raise ParameterError(f"eta2 = mu2/(1-gamma) must exceed -1/2, got {eta2}")
        object.__setattr__(self, "eta1", eta1)
        object.__setattr__(self, "eta2", eta2)

    @property
    def eta(self) -> float:
        return self.eta1 + self.eta2

    @property
    def one_minus_gamma2(self) -> float:
        return 1.0 - self.gamma * self.gamma

    def as_dict(self) -> dict:
        return {"mu1": self.mu1, "mu2": self.mu2, "gamma": self.gamma}


def make_params(mu1: float, mu2: float, gamma: float) -> DunklParams:
    return DunklParams(float(mu1), float(mu2), float(gamma))


class LinearOperator:
    """Composable linear map on algebra values: ``A @ B`` is composition."""

    def __init__(self, fn: Callable, name: str = "op"):
        self.fn = fn
        self.name = name

    def __call__(self, f):
        return self.fn(f)

    def __matmul__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(lambda f: self.fn(other.fn(f)), f"{self.name}.{other.name}")

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(lambda f: self.fn(f) + other.fn(f), f"({self.name}+{other.name})")

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(lambda f: self.fn(f) - other.fn(f), f"({self.name}-{other.name})")

    def __neg__(self) -> "LinearOperator":
        return LinearOperator(lambda f: -self.fn(f), f"-{self.name}")

    def __mul__(self, scalar: float) -> "LinearOperator":
        s = float(scalar)
        return LinearOperator(lambda f: s * self.fn(f), f"{s:g}*{self.name}")

    __rmul__ = __mul__

    def __repr__(self):
        return f"LinearOperator({self.name})"


def commutator(A: LinearOperator, B: LinearOperator) -> LinearOperator:
    return A @ B - B @ A


# --------------------------------------------------------- Cartesian building blocks

identity = LinearOperator(lambda f: f, "1")


def reflection(axis: int) -> LinearOperator:
    return LinearOperator(lambda f: f.reflect(axis), f"R{axis}")


def partial(axis: int) -> LinearOperator:
    return LinearOperator(lambda f: f.diff(axis), f"d{axis}")


def coordinate(axis: int) -> LinearOperator:
    return LinearOperator(lambda f: f.mul_coord(axis), "xy"[axis - 1])


def difference(axis: int) -> LinearOperator:
    """(1 - R)/x_axis."""
    return LinearOperator(lambda f: f.difference_quotient(axis), f"Q{axis}")


def multiply(p: Poly2, name: str = "F") -> LinearOperator:
    return LinearOperator(lambda f: f * p, name)


def dunkl_standard(eta: float, axis: int) -> LinearOperator:
    """d/dx_axis + (eta/x_axis)(1 - R_axis)."""
    return LinearOperator(lambda f: f.dunkl(axis, eta, 0.0), f"D{axis}[{eta:g}]")


def dunkl_tilde(params: DunklParams, axis: int) -> LinearOperator:
    """Two-parameter derivative d + (mu/x)(1 - R) + gamma d R along ``axis``."""
    mu = params.mu1 if axis == 1 else params.mu2
    g = params.gamma
    return LinearOperator(lambda f: f.dunkl(axis, mu, g), f"Dt{axis}")


def dunkl_standard_reference(eta: float, axis: int) -> LinearOperator:
    """``dunkl_standard`` composed from d, R and the difference quotient."""
    d, q = partial(axis), difference(axis)
    return LinearOperator(lambda f: d(f) + eta * q(f), f"D{axis}ref[{eta:g}]")


def dunkl_tilde_reference(params: DunklParams, axis: int) -> LinearOperator:
    """``dunkl_tilde`` composed from d, R and the difference quotient."""
    mu = params.mu1 if axis == 1 else params.mu2
    g = params.gamma
    d, q, r = partial(axis), difference(axis), reflection(axis)
    return LinearOperator(lambda f: d(f) + mu * q(f) + g * d(r(f)), f"Dt{axis}ref")


def laplacian_cartesian(params: DunklParams) -> LinearOperator:
    D1, D2 = dunkl_tilde(params, 1), dunkl_tilde(params, 2)
    return D1 @ D1 + D2 @ D2


def laplacian_standard(eta1: float, eta2: float) -> LinearOperator:
    D1, D2 = dunkl_standard(eta1, 1), dunkl_standard(eta2, 2)
    return D1 @ D1 + D2 @ D2


def laplacian_factorized(params: DunklParams) -> LinearOperator:
    """(1 - gamma^2) times the standard Dunkl-Laplacian with (eta1, eta2)."""
    return params.one_minus_gamma2 * laplacian_standard(params.eta1, params.eta2)


def angular_momentum_cartesian(params: DunklParams) -> LinearOperator:
    """Real part K = x D_2^eta2 - y D_1^eta1 of J = iK."""
    x, y = coordinate(1), coordinate(2)
    return x @ dunkl_standard(params.eta2, 2) - y @ dunkl_standard(params.eta1, 1)


def x_commutator_rhs(params: DunklParams, axis: int) -> LinearOperator:
    """-1 + (gamma - 2 mu) R + 2 gamma x d R, the value of [x, D~] along ``axis``."""
    mu = params.mu1 if axis == 1 else params.mu2
    g = params.gamma
    R, d, x = reflection(axis), partial(axis), coordinate(axis)
    return -identity + (g - 2.0 * mu) * R + (2.0 * g) * (x @ d @ R)


# -------------------------------------------------------------------- angular


def angular_momentum_J(params: DunklParams) -> LinearOperator:
    """K = J/i = d/dphi + eta2 cot(phi)(1 - R2) - eta1 tan(phi)(1 - R1) on TrigPoly."""
    e1, e2 = params.eta1, params.eta2

    def K(g: TrigPoly) -> TrigPoly:
        out = g.dphi()
        if e2:
            odd2 = g - g.reflect(2)  # (1 - R2) g, always a multiple of sin
            out = out + e2 * odd2.divide("sin").mul_cos()
        if e1:
            odd1 = g - g.reflect(1)  # (1 - R1) g, always a multiple of cos
            out = out - e1 * odd1.divide("cos").mul_sin()
        return out

    return LinearOperator(K, "K")


def angular_B(params: DunklParams) -> LinearOperator:
    """B_phi = (J^2 - 2 eta1 eta2 (1 - R1 R2))/2 with J^2 = -K^2."""
    K = angular_momentum_J(params)
    c = params.eta1 * params.eta2

    def B(g: TrigPoly) -> TrigPoly:
        j2 = -K(K(g))
        return 0.5 * (j2 - 2.0 * c * (g - g.reflect(1).reflect(2)))

    return LinearOperator(B, "B")


def angular_B_direct(params: DunklParams) -> LinearOperator:
    """B_phi from its differential form:

    -1/2 g'' + (eta1 tan - eta2 cot) g' + eta1 (1-R1) g/(2 cos^2) + eta2 (1-R2) g/(2 sin^2)

    assembled as eta1 [s c g' + (1-R1) g/2]/c^2 - eta2 [s c g' - (1-R2) g/2]/s^2,
    both brackets being exactly divisible.
    """
    e1, e2 = params.eta1, params.eta2

    def B(g: TrigPoly) -> TrigPoly:
        dg = g.dphi()
        scdg = dg.mul_cos().mul_sin()
        out = -0.5 * dg.dphi()
        if e1:
            num = scdg + 0.5 * (g - g.reflect(1))
            out = out + e1 * num.divide("cos").divide("cos")
        if e2:
            num = scdg - 0.5 * (g - g.reflect(2))
            out = out - e2 * num.divide("sin").divide("sin")
        return out

    return LinearOperator(B, "Bdirect")


# ---------------------------------------------------------------- Hamiltonians


def hamiltonian(params: DunklParams, potential: str = "oscillator") -> LinearOperator:
    """H = -1/2 Laplacian_D~ + V.

    ``Poly2`` inputs are read in physical coordinates. ``GaussPoly2`` inputs are
    read in the scaled coordinates x = a x~, a = (1 - gamma^2)^(1/4), in which
    the oscillator states are written: every term of D~ picks up 1/a and the
    potential becomes a^2 (x~^2 + y~^2)/2. Only the oscillator is closed on the
    2-D algebra.
    """
    if potential != "oscillator":
        raise UnsupportedDomainError(
            "the Coulomb potential leaves the 2-D polynomial algebra; "
            "use spectra.coulomb_radial_residual instead"
        )
    lap = laplacian_cartesian(params)
    rho2 = Poly2.from_terms({(2, 0): 1.0, (0, 2): 1.0})

    def H(f):
        if isinstance(f, GaussPoly2):
            a2 = math.sqrt(params.one_minus_gamma2)
            # d/dx = a^-1 d/dx~ for every term of D~; V = a^2 rho~^2 / 2
            return (-0.5 / a2) * lap(f) + (0.5 * a2) * (f * rho2)
        if isinstance(f, Poly2):
            return -0.5 * lap(f) + 0.5 * (f * rho2)
        raise UnsupportedDomainError(f"hamiltonian does not act on {type(f).__name__}")

    return LinearOperator(H, "H")
