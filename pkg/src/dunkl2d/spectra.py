"""Closed-form eigenstates: angular functions, oscillator (Cartesian and polar), Coulomb.

Coordinates. Cartesian oscillator states are ``GaussPoly2`` values in the
scaled variables x~ = x / a, a = (1 - gamma^2)^(1/4). Polar oscillator radial
parts are ``ExpPoly1`` in r = rho / a. Coulomb radial parts are ``ExpPoly1`` in
r = eps' rho with eps' = 2 sqrt(2 |E| / (1 - gamma^2)). Each state is
normalized in the variable it is written in (x~, r, rho respectively).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    ExpPoly1,
    GaussPoly2,
    Poly2,
    TrigPoly,
    coefficient_residual,
    compose_cos_poly,
)
from .operators import DunklParams, angular_momentum_J, hamiltonian
from .quadrature import Domain, weighted_rule
from .special import (
    DomainError,
    generalized_hermite_coefficients,
    hermite_norm_log,
    jacobi_coefficients,
    laguerre_coefficients,
    log_factorial,
    log_gamma,
)

_X_OF_C = np.array([1.0, 0.0, -2.0])  # -cos(2 phi) = 1 - 2 cos^2(phi)


@dataclass(frozen=True)
class AngularQuantum:
    """Angular label; ell is stored doubled so half-integers stay exact.

    sector +1 needs an even ``two_ell``, sector -1 an odd one. At ell = 0 only
    one state exists, so the branch is normalized to +1.
    """

    two_ell: int
    sector: int
    branch: int = 1

    def __post_init__(self):
        if not isinstance(self.two_ell, (int, np.integer)) or self.two_ell < 0:
            raise DomainError(f"two_ell must be a non-negative integer, got {self.two_ell!r}")
        if self.sector not in (1, -1):
            raise DomainError(f"sector must be +1 or -1, got {self.sector!r}")
        if self.branch not in (1, -1):
            raise DomainError(f"branch must be +1 or -1, got {self.branch!r}")
        if self.sector == 1 and self.two_ell % 2:
            raise DomainError("sector +1 requires integer ell (even two_ell)")
        if self.sector == -1 and not self.two_ell % 2:
            raise DomainError("sector -1 requires half-integer ell (odd two_ell)")
        if self.two_ell == 0:
            object.__setattr__(self, "branch", 1)

    @property
    def ell(self) -> float:
        return self.two_ell / 2

    @classmethod
    def for_two_ell(cls, two_ell: int, branch: int = 1) -> "AngularQuantum":
        return cls(two_ell, -1 if two_ell % 2 else 1, branch)


def angular_states(two_ell: int) -> list:
    """All angular labels at fixed ell: one at ell = 0, both branches otherwise."""
    if two_ell == 0:
        return [AngularQuantum(0, 1, 1)]
    return [AngularQuantum.for_two_ell(two_ell, b) for b in (1, -1)]


@dataclass(frozen=True, eq=False)
class AngularState:
    """Phi = real + i imag, with J Phi = lam Phi."""

    quantum: AngularQuantum
    lam: float
    real: TrigPoly
    imag: TrigPoly

    def evaluate(self, phi):
        return self.real.evaluate(phi) + 1j * self.imag.evaluate(phi)


# ------------------------------------------------------------ angular blocks


def _block_log_norms(two_ell: int, params: DunklParams) -> dict:
    e1, e2 = params.eta1, params.eta2
    eta = e1 + e2
    ell = two_ell / 2
    lg = log_gamma
    out = {}
    if two_ell % 2 == 0:
        m = two_ell // 2
        if m == 0:
            # (2l + eta) Gamma(l + eta) -> Gamma(eta + 1) at l = 0
            lead = lg(eta + 1.0)
        else:
            lead = math.log(2 * ell + eta) + lg(ell + eta)
        out["++"] = 0.5 * (lead + log_factorial(m) - math.log(2.0) - lg(ell + e1 + 0.5) - lg(ell + e2 + 0.5))
        if m >= 1:
            out["--"] = 0.5 * (
                math.log(2 * ell + eta) + lg(ell + eta + 1.0) + log_factorial(m - 1)
                - math.log(2.0) - lg(ell + e1 + 0.5) - lg(ell + e2 + 0.5)
            )
    else:
        m = (two_ell - 1) // 2  # ell - 1/2
        common = math.log(2 * ell + eta) + lg(ell + eta + 0.5) + log_factorial(m) - math.log(2.0)
        out["-+"] = 0.5 * (common - lg(ell + e1 + 1.0) - lg(ell + e2))
        out["+-"] = 0.5 * (common - lg(ell + e1) - lg(ell + e2 + 1.0))
    return out


def angular_blocks(two_ell: int, params: DunklParams) -> dict:
    """The normalized building blocks ('++', '--') or ('-+', '+-') as TrigPoly values."""
    e1, e2 = params.eta1, params.eta2
    norms = _block_log_norms(two_ell, params)
    blocks = {}
    if two_ell % 2 == 0:
        m = two_ell // 2
        jac = compose_cos_poly(jacobi_coefficients(m, e1 - 0.5, e2 - 0.5), _X_OF_C)
        blocks["++"] = TrigPoly.cos_poly(math.exp(norms["++"]) * jac)
        if m >= 1:
            jac = compose_cos_poly(jacobi_coefficients(m - 1, e1 + 0.5, e2 + 0.5), _X_OF_C)
            blocks["--"] = TrigPoly.sin_times(math.exp(norms["--"]) * np.concatenate([[0.0], jac]))
        else:
            blocks["--"] = TrigPoly.zero()
    else:
        m = (two_ell - 1) // 2
        jac = compose_cos_poly(jacobi_coefficients(m, e1 + 0.5, e2 - 0.5), _X_OF_C)
        blocks["-+"] = TrigPoly.cos_poly(math.exp(norms["-+"]) * np.concatenate([[0.0], jac]))
        jac = compose_cos_poly(jacobi_coefficients(m, e1 - 0.5, e2 + 0.5), _X_OF_C)
        blocks["+-"] = TrigPoly.sin_times(math.exp(norms["+-"]) * jac)
    return blocks


def angular_eigenvalue(q: AngularQuantum, params: DunklParams) -> float:
    ell = q.ell
    if q.sector == 1:
        mag = 2.0 * math.sqrt(ell * (ell + params.eta))
    else:
        mag = 2.0 * math.sqrt((ell + params.eta1) * (ell + params.eta2))
    return q.branch * mag


def angular_inner(f_re, f_im, g_re, g_im, params: DunklParams, rule_size: int = 16):
    """<f, g> on the circle under |cos|^(2 eta1) |sin|^(2 eta2); returns a complex number."""
    phi, w = weighted_rule((2 * params.eta1, 2 * params.eta2), Domain.circle(), rule_size)
    fr, fi = f_re.evaluate(phi), f_im.evaluate(phi)
    gr, gi = g_re.evaluate(phi), g_im.evaluate(phi)
    return complex(np.dot(w, fr * gr + fi * gi), np.dot(w, fr * gi - fi * gr))


def angular_eigenfunction(q: AngularQuantum, params: DunklParams) -> AngularState:
    """Eigenfunction of J in the given sector/branch, renormalized to unit norm.

    Sign convention: lam = +|lam| goes with Phi++ + i Phi-- (sector +1) and with
    Phi-+ - i Phi+- (sector -1); the negative branch flips the imaginary part.
    """
    blocks = angular_blocks(q.two_ell, params)
    if q.sector == 1:
        re, im = blocks["++"], q.branch * blocks["--"]
    else:
        re, im = blocks["-+"], -q.branch * blocks["+-"]
    norm2 = angular_inner(re, im, re, im, params).real
    scale = 1.0 / math.sqrt(norm2)
    return AngularState(q, angular_eigenvalue(q, params), scale * re, scale * im)


def centrifugal_coefficient(q: AngularQuantum, params: DunklParams) -> float:
    """Coefficient of 1/rho^2 in the radial equation, identical in both sectors."""
    ell = q.ell
    universal = 4.0 * ell * (ell + params.eta)
    if q.sector == 1:
        return universal
    lam = angular_eigenvalue(q, params)
    value = lam * lam - 4.0 * params.eta1 * params.eta2
    if not math.isclose(value, universal, rel_tol=1e-12, abs_tol=1e-12):
        raise ArithmeticError(f"sector forms disagree: {value} vs {universal}")
    return value


def angular_residual(state: AngularState, params: DunklParams) -> float:
    """K Phi = -i lam Phi split as K re = lam im, K im = -lam re."""
    K = angular_momentum_J(params)
    lam = state.lam
    kr, ki = K(state.real), K(state.imag)
    return max(
        coefficient_residual(kr, lam * state.imag),
        coefficient_residual(ki, -lam * state.real),
    )


# ------------------------------------------------------------------- energies


def cartesian_energy(n1: int, n2: int, params: DunklParams) -> float:
    return (n1 + n2 + params.mu1 / (1 - params.gamma) + params.mu2 / (1 - params.gamma) + 1.0) * math.sqrt(
        params.one_minus_gamma2
    )


def polar_energy(n: int, two_ell: int, params: DunklParams) -> float:
    return (2 * n + 1 + two_ell + params.eta1 + params.eta2) * math.sqrt(params.one_minus_gamma2)


def coulomb_energy(n: int, two_ell: int, k: float, params: DunklParams) -> float:
    denom = 2 * n + 2 * two_ell + 2 * params.eta1 + 2 * params.eta2 + 1
    return -2.0 * k * k / (denom * denom * params.one_minus_gamma2)


# --------------------------------------------------------------------- states


@dataclass(frozen=True, eq=False)
class EigenState:
    """A stationary state with its closed-form energy.

    ``wavefunction`` is set for Cartesian states, ``radial``/``angular`` for
    polar and Coulomb ones. ``radial_scale`` maps the normalization variable to
    the algebra variable of ``radial`` (1 for the oscillator, eps' for Coulomb).
    """

    system: str
    label: tuple
    energy: float
    norm_constant: float
    params: DunklParams
    wavefunction: GaussPoly2 | None = None
    radial: ExpPoly1 | None = None
    angular: AngularState | None = None
    radial_scale: float = 1.0
    extra: dict = field(default_factory=dict)

    def radial_value(self, r):
        return self.radial.evaluate(self.radial_scale * np.asarray(r, float))

    def evaluate(self, a, b):
        """Cartesian: (x~, y~). Polar/Coulomb: (r, phi) in the normalization variable."""
        if self.wavefunction is not None:
            return self.wavefunction.evaluate(a, b)
        return self.radial_value(a) * self.angular.evaluate(b)

    def evaluate_xy(self, x, y):
        """Value at Cartesian point (x, y) of the normalization coordinates."""
        if self.wavefunction is not None:
            return self.wavefunction.evaluate(x, y)
        x = np.asarray(x, float)
        y = np.asarray(y, float)
        return self.evaluate(np.hypot(x, y), np.arctan2(y, x))


def oscillator_cartesian_state(n1: int, n2: int, params: DunklParams) -> EigenState:
    if n1 < 0 or n2 < 0:
        raise DomainError("oscillator quantum numbers must be non-negative")
    h1 = generalized_hermite_coefficients(n1, params.eta1)
    h2 = generalized_hermite_coefficients(n2, params.eta2)
    norm = math.exp(hermite_norm_log(n1, params.eta1) + hermite_norm_log(n2, params.eta2))
    psi = GaussPoly2.from_poly(Poly2.separable(h1, h2))
    return EigenState(
        "oscillator-cartesian", (n1, n2), cartesian_energy(n1, n2, params), norm, params, wavefunction=psi
    )


def oscillator_radial(n: int, two_ell: int, params: DunklParams) -> tuple:
    alpha = two_ell + params.eta
    log_c0 = 0.5 * (math.log(2.0) + log_factorial(n) - log_gamma(n + alpha + 1.0))
    lag = laguerre_coefficients(n, alpha)
    coeffs = np.zeros(two_ell + 2 * n + 1)
    coeffs[two_ell::2] = lag
    c0 = math.exp(log_c0)
    return ExpPoly1(c0 * coeffs, "gauss"), c0


def oscillator_polar_state(n: int, q: AngularQuantum, params: DunklParams) -> EigenState:
    if n < 0:
        raise DomainError("radial quantum number must be non-negative")
    radial, c0 = oscillator_radial(n, q.two_ell, params)
    return EigenState(
        "oscillator-polar",
        (n, q.two_ell, q.sector, q.branch),
        polar_energy(n, q.two_ell, params),
        c0,
        params,
        radial=radial,
        angular=angular_eigenfunction(q, params),
    )


def coulomb_scale(energy: float, params: DunklParams) -> float:
    """eps' = 2 sqrt(2 |E| / (1 - gamma^2))."""
    return 2.0 * math.sqrt(2.0 * (-energy) / params.one_minus_gamma2)


def coulomb_matching(q: AngularQuantum, params: DunklParams) -> tuple:
    """(nu, beta) of the Laguerre-type solution e^(-x/2) x^nu L_n^beta(x)."""
    return float(q.two_ell), 2.0 * q.two_ell + 2.0 * params.eta


def coulomb_has_bound_states(two_ell: int, params: DunklParams) -> bool:
    """The Laguerre index beta = 4 ell + 2 eta must exceed -1, for every n at once."""
    return 2 * two_ell + 2 * params.eta > -1


def coulomb_state(n: int, q: AngularQuantum, k: float, params: DunklParams) -> EigenState:
    if not k > 0:
        raise DomainError(f"Coulomb strength k must be positive, got {k}")
    if n < 0:
        raise DomainError("radial quantum number must be non-negative")
    if not coulomb_has_bound_states(q.two_ell, params):
        raise DomainError(
            f"no Coulomb bound state for n={n}, two_ell={q.two_ell}: "
            "4 ell + 2 eta1 + 2 eta2 must exceed -1"
        )
    energy = coulomb_energy(n, q.two_ell, k, params)
    eps = coulomb_scale(energy, params)
    _, beta = coulomb_matching(q, params)
    eta = params.eta
    log_c = 0.5 * (
        log_factorial(n) + (2 * eta + 2) * math.log(eps) - log_gamma(n + beta + 1.0) - math.log(2 * n + beta + 1.0)
    )
    lag = laguerre_coefficients(n, beta)
    coeffs = np.concatenate([np.zeros(q.two_ell), lag])
    c = math.exp(log_c)
    return EigenState(
        "coulomb",
        (n, q.two_ell, q.sector, q.branch),
        energy,
        c,
        params,
        radial=ExpPoly1(c * coeffs, "exp"),
        angular=angular_eigenfunction(q, params),
        radial_scale=eps,
        extra={"k": float(k), "eps": eps},
    )


# ------------------------------------------------------------------ residuals


def cartesian_residual(state: EigenState) -> float:
    H = hamiltonian(state.params, "oscillator")
    hf = H(state.wavefunction)
    ef = state.energy * state.wavefunction
    return coefficient_residual(hf, ef)


def _radial_terms(radial: ExpPoly1):
    # r^2 R'', r R', R: the pieces shared by both potentials
    d1 = radial.diff()
    d2 = d1.diff()
    return d2.mul_r(2), d1.mul_r(1), radial


def oscillator_radial_residual(state: EigenState) -> float:
    """Radial oscillator equation in rho, rewritten in r = rho/a and multiplied by rho^2.

    rho^2 R_rhorho + (1+2eta) rho R_rho - c R - rho^4 R/(1-g^2) + 2E rho^2 R/(1-g^2)
    with rho = a r, a^4 = 1 - gamma^2.
    """
    p = state.params
    q = AngularQuantum.for_two_ell(state.label[1])
    R = state.radial
    a2 = math.sqrt(p.one_minus_gamma2)
    t_dd, t_d, t_0 = _radial_terms(R)
    terms = [
        t_dd,
        (1 + 2 * p.eta) * t_d,
        -centrifugal_coefficient(q, p) * t_0,
        -(a2 * a2 / p.one_minus_gamma2) * t_0.mul_r(4),
        (2 * state.energy * a2 / p.one_minus_gamma2) * t_0.mul_r(2),
    ]
    return _sum_residual(terms)


def coulomb_radial_residual(state: EigenState) -> float:
    """Bound-state Coulomb radial equation (E = -|E|) in r = eps' rho, multiplied by rho^2.

    rho^2 R_rhorho + (1+2eta) rho R_rho - c R + 2k rho R/(1-g^2) - 2|E| rho^2 R/(1-g^2)
    """
    p = state.params
    q = AngularQuantum.for_two_ell(state.label[1])
    k = state.extra["k"]
    eps = state.radial_scale
    big_e = -state.energy
    t_dd, t_d, t_0 = _radial_terms(state.radial)
    terms = [
        t_dd,
        (1 + 2 * p.eta) * t_d,
        -centrifugal_coefficient(q, p) * t_0,
        (2 * k / (p.one_minus_gamma2 * eps)) * t_0.mul_r(1),
        -(2 * big_e / (p.one_minus_gamma2 * eps * eps)) * t_0.mul_r(2),
    ]
    return _sum_residual(terms)


def _sum_residual(terms) -> float:
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    scale = max(t.max_abs() for t in terms)
    return total.max_abs() / scale if scale else 0.0


# --------------------------------------------------------------- degeneracies


@dataclass(frozen=True)
class DegeneracyTable:
    counts: dict

    def __post_init__(self):
        object.__setattr__(self, "counts", dict(sorted(self.counts.items())))

    def __getitem__(self, level: int) -> int:
        return self.counts[level]


def polar_labels(N_max: int) -> list:
    """(N, n, AngularQuantum) with N = 2n + 2ell <= N_max."""
    out = []
    for N in range(N_max + 1):
        for two_ell in range(N % 2, N + 1, 2):
            n = (N - two_ell) // 2
            for q in angular_states(two_ell):
                out.append((N, n, q))
    return out


def cartesian_labels(N_max: int) -> list:
    return [(N, n1, N - n1) for N in range(N_max + 1) for n1 in range(N + 1)]


def degeneracy_table(params: DunklParams, coords: str, N_max: int) -> DegeneracyTable:
    """State counts per level N (Cartesian N = n1 + n2, polar N = 2n + 2ell)."""
    if N_max < 0:
        raise DomainError("N_max must be non-negative")
    if coords == "cartesian":
        labels = cartesian_labels(N_max)
    elif coords == "polar":
        labels = polar_labels(N_max)
    else:
        raise DomainError(f"coords must be 'cartesian' or 'polar', got {coords!r}")
    counts: dict = {}
    for lab in labels:
        counts[lab[0]] = counts.get(lab[0], 0) + 1
    return DegeneracyTable(counts)
