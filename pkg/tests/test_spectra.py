import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate

from dunkl2d.operators import make_params
from dunkl2d.special import DomainError
from dunkl2d.spectra import (
    AngularQuantum,
    angular_eigenfunction,
    angular_eigenvalue,
    angular_inner,
    angular_residual,
    angular_states,
    cartesian_energy,
    cartesian_residual,
    centrifugal_coefficient,
    coulomb_energy,
    coulomb_matching,
    coulomb_radial_residual,
    coulomb_state,
    degeneracy_table,
    oscillator_cartesian_state,
    oscillator_polar_state,
    oscillator_radial_residual,
    polar_energy,
)

ZERO = make_params(0, 0, 0)
PHI = np.linspace(0.05, 2 * np.pi - 0.05, 23)


@st.composite
def params(draw):
    g = draw(st.floats(-0.9, 0.9))
    lo = -0.45 * min(1.0, 1 - g)
    return make_params(draw(st.floats(lo, 2.0)), draw(st.floats(lo, 2.0)), g)


# --------------------------------------------------------------- angular labels


def test_angular_quantum_invariants():
    assert AngularQuantum(0, 1, -1).branch == 1
    assert AngularQuantum.for_two_ell(3).sector == -1
    assert AngularQuantum(4, 1).ell == 2.0
    for bad in ((1, 1), (2, -1), (-2, 1), (2, 0), (2, 1, 0)):
        with pytest.raises(DomainError):
            AngularQuantum(*bad)
    assert len(angular_states(0)) == 1
    assert {q.branch for q in angular_states(3)} == {1, -1}


def test_angular_ground_state():
    s = angular_eigenfunction(AngularQuantum(0, 1), ZERO)
    assert s.lam == 0.0
    np.testing.assert_allclose(s.evaluate(PHI), np.full(PHI.size, 1 / math.sqrt(2 * math.pi)), atol=1e-13)


@pytest.mark.parametrize("branch", [1, -1])
def test_angular_half_integer_at_zero_eta(branch):
    s = angular_eigenfunction(AngularQuantum(1, -1, branch), ZERO)
    assert s.lam == pytest.approx(branch * 1.0)
    ref = (np.cos(PHI) - branch * 1j * np.sin(PHI)) / math.sqrt(2 * math.pi)
    vals = s.evaluate(PHI)
    # fixed up to one global sign
    sign = np.sign(vals[0].real / ref[0].real)
    np.testing.assert_allclose(sign * vals, ref, atol=1e-13)


def test_angular_eigenvalue_example(ref_params):
    for b in (1, -1):
        assert angular_eigenvalue(AngularQuantum(2, 1, b), ref_params) == pytest.approx(b * 3.2249031, abs=1e-7)


@given(params(), st.integers(0, 10), st.sampled_from([1, -1]))
def test_angular_eigen_and_norm(p, two_ell, branch):
    q = AngularQuantum.for_two_ell(two_ell, branch)
    s = angular_eigenfunction(q, p)
    assert angular_residual(s, p) < 1e-9
    assert angular_inner(s.real, s.imag, s.real, s.imag, p).real == pytest.approx(1.0, abs=1e-10)


def test_angular_branches_orthogonal(ref_params):
    for two_ell in (1, 2, 3, 4):
        a, b = (angular_eigenfunction(AngularQuantum.for_two_ell(two_ell, s), ref_params) for s in (1, -1))
        assert abs(angular_inner(a.real, a.imag, b.real, b.imag, ref_params)) < 1e-10


def test_centrifugal_examples(ref_params):
    assert centrifugal_coefficient(AngularQuantum(0, 1), ref_params) == 0.0
    assert centrifugal_coefficient(AngularQuantum(2, 1), ref_params) == pytest.approx(10.4, abs=1e-12)
    assert centrifugal_coefficient(AngularQuantum(1, -1), ref_params) == pytest.approx(4.2, abs=1e-12)
    lam = angular_eigenvalue(AngularQuantum(1, -1), ref_params)
    assert lam * lam - 4 * 0.6 * 1.0 == pytest.approx(4 * 1.1 * 1.5 - 2.4, abs=1e-12)


# ------------------------------------------------------------------- energies


def test_energy_examples(ref_params):
    assert cartesian_energy(0, 0, ZERO) == 1.0
    assert cartesian_energy(1, 0, ref_params) == pytest.approx(3.1176915, abs=1e-7)
    assert cartesian_energy(0, 1, ref_params) == cartesian_energy(1, 0, ref_params)
    assert polar_energy(0, 0, ZERO) == 1.0
    assert polar_energy(0, 0, ref_params) == pytest.approx(2.2516660, abs=1e-7)
    assert polar_energy(1, 1, ref_params) == pytest.approx(4.8497423, abs=1e-7)
    assert coulomb_energy(0, 0, 1.0, ZERO) == -2.0
    assert coulomb_energy(0, 0, 1.0, ref_params) == pytest.approx(-0.1511716, abs=1e-7)
    assert coulomb_energy(1, 2, 1.0, ZERO) == pytest.approx(-2 / 49, abs=1e-15)


def test_state_energies_match_formulas(ref_params):
    assert oscillator_cartesian_state(2, 1, ref_params).energy == cartesian_energy(2, 1, ref_params)
    q = AngularQuantum(3, -1, -1)
    assert oscillator_polar_state(1, q, ref_params).energy == polar_energy(1, 3, ref_params)
    assert coulomb_state(1, q, 2.0, ref_params).energy == coulomb_energy(1, 3, 2.0, ref_params)


def test_cartesian_states_differ(ref_params):
    a = oscillator_cartesian_state(1, 0, ref_params).wavefunction
    b = oscillator_cartesian_state(0, 1, ref_params).wavefunction
    assert a.terms != b.terms


# ---------------------------------------------------------------- residuals


@given(params(), st.integers(0, 6), st.integers(0, 6))
def test_cartesian_residual(p, n1, n2):
    assert cartesian_residual(oscillator_cartesian_state(n1, n2, p)) < 1e-9


@given(params(), st.integers(0, 6), st.integers(0, 6))
def test_radial_residuals(p, n, two_ell):
    q = AngularQuantum.for_two_ell(two_ell)
    assert oscillator_radial_residual(oscillator_polar_state(n, q, p)) < 1e-9
    try:
        s = coulomb_state(n, q, 1.3, p)
    except DomainError:
        assert 2 * two_ell + 2 * p.eta <= -1
        return
    assert coulomb_radial_residual(s) < 1e-9


def test_matching_conditions(ref_params):
    for two_ell in range(7):
        q = AngularQuantum.for_two_ell(two_ell)
        nu, beta = coulomb_matching(q, ref_params)
        ell = q.ell
        assert beta - 2 * nu == pytest.approx(2 * ref_params.eta, abs=1e-14)
        assert nu * (nu - beta) == pytest.approx(-4 * ell * (ell + ref_params.eta), abs=1e-12)


# --------------------------------------------------------- independent norms


def test_coulomb_ground_state_reduces_to_hydrogen():
    s = coulomb_state(0, AngularQuantum(0, 1), 1.0, ZERO)
    assert s.energy == -2.0
    assert s.extra["eps"] == pytest.approx(4.0)
    rho = np.array([0.1, 0.6, 1.5])
    np.testing.assert_allclose(s.radial_value(rho) / s.radial_value(0.0), np.exp(-2 * rho), rtol=1e-14)


@pytest.mark.parametrize("n, two_ell", [(0, 0), (2, 1), (1, 4)])
def test_radial_normalization_by_quad(ref_params, n, two_ell):
    p = ref_params
    q = AngularQuantum.for_two_ell(two_ell)
    w = 2 * p.eta + 1
    osc = oscillator_polar_state(n, q, p)
    val, _ = integrate.quad(lambda r: osc.radial_value(r) ** 2 * r**w, 0, np.inf, limit=200)
    assert val == pytest.approx(1.0, abs=1e-8)
    cou = coulomb_state(n, q, 1.0, p)
    val, _ = integrate.quad(lambda r: cou.radial_value(r) ** 2 * r**w, 0, np.inf, limit=400)
    assert val == pytest.approx(1.0, abs=1e-8)


def test_cartesian_normalization_by_quad(ref_params):
    s = oscillator_cartesian_state(2, 1, ref_params)
    e1, e2 = ref_params.eta1, ref_params.eta2
    f = lambda y, x: s.evaluate(x, y) ** 2 * abs(x) ** (2 * e1) * abs(y) ** (2 * e2)  # noqa: E731
    val, _ = integrate.dblquad(f, -9, 9, -9, 9, epsabs=1e-10)
    assert val == pytest.approx(1.0, abs=1e-6)


def test_coulomb_errors(ref_params):
    q = AngularQuantum(0, 1)
    for k in (0.0, -1.0):
        with pytest.raises(DomainError):
            coulomb_state(0, q, k, ref_params)
    p = make_params(-0.3, -0.3, 0.3)
    # eta < -1/2: the whole ell = 0 family is lost, ell = 1/2 survives
    for n in (0, 1, 3):
        with pytest.raises(DomainError, match="bound state"):
            coulomb_state(n, q, 1.0, p)
    assert coulomb_state(0, AngularQuantum(1, -1), 1.0, p).energy < 0


# --------------------------------------------------------------- degeneracies


def test_degeneracy_examples(ref_params):
    cart = degeneracy_table(ref_params, "cartesian", 2)
    polar = degeneracy_table(ref_params, "polar", 2)
    assert [cart[N] for N in range(3)] == [1, 2, 3]
    assert [polar[N] for N in range(3)] == [1, 2, 3]
    with pytest.raises(DomainError):
        degeneracy_table(ref_params, "spherical", 2)
    with pytest.raises(DomainError):
        degeneracy_table(ref_params, "polar", -1)


def test_degeneracy_tables_agree(ref_params):
    cart = degeneracy_table(ref_params, "cartesian", 12)
    polar = degeneracy_table(ref_params, "polar", 12)
    assert cart.counts == polar.counts
    assert list(cart.counts) == sorted(cart.counts)
    for N in range(13):
        two_ell = N % 2
        n = (N - two_ell) // 2
        assert polar_energy(n, two_ell, ref_params) == pytest.approx(
            cartesian_energy(N, 0, ref_params), rel=1e-15
        )
