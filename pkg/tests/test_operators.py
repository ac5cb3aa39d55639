import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dunkl2d.algebra import GaussPoly2, Poly2, TrigPoly, coefficient_residual
from dunkl2d.operators import (
    DunklParams,
    ParameterError,
    UnsupportedDomainError,
    angular_B,
    angular_B_direct,
    angular_momentum_J,
    commutator,
    coordinate,
    dunkl_standard,
    dunkl_standard_reference,
    dunkl_tilde,
    dunkl_tilde_reference,
    hamiltonian,
    laplacian_cartesian,
    laplacian_factorized,
    laplacian_standard,
    make_params,
    x_commutator_rhs,
)
from dunkl2d.spectra import AngularQuantum, angular_eigenfunction, oscillator_cartesian_state

X = Poly2.monomial(1, 0)
Y = Poly2.monomial(0, 1)
ONE = Poly2.constant()
TOL = 1e-10

gammas = st.floats(-0.9, 0.9)


@st.composite
def params(draw):
    g = draw(gammas)
    lo = -0.45 * min(1.0, 1 - g)
    return make_params(draw(st.floats(lo, 2.0)), draw(st.floats(lo, 2.0)), g)


@st.composite
def poly2(draw, max_deg=6):
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    c = rng.uniform(-1, 1, (max_deg + 1, max_deg + 1))
    c[np.add.outer(np.arange(max_deg + 1), np.arange(max_deg + 1)) > max_deg] = 0.0
    return Poly2(c)


def scalar(p: Poly2) -> float:
    assert p.degree == 0
    return p.terms.get((0, 0), 0.0)


# ------------------------------------------------------------------ parameters


def test_make_params_examples(ref_params):
    p = make_params(0, 0, 0)
    assert p.eta1 == 0.0 and p.eta2 == 0.0
    assert ref_params.eta1 == pytest.approx(0.6, abs=1e-15)
    assert ref_params.eta2 == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(ParameterError, match="gamma"):
        make_params(0.3, 0.5, 1.2)


@pytest.mark.parametrize(
    "mu1, mu2, gamma, word",
    [(-0.6, 0, 0, "mu1"), (0, -0.5, 0, "mu2"), (0, 0, -1.0, "gamma"),
     (-0.3, 0, 0.5, "eta1"), (0, -0.4, 0.7, "eta2"), (float("nan"), 0, 0, "mu1")],
)
def test_parameter_errors_name_constraint(mu1, mu2, gamma, word):
    with pytest.raises(ParameterError, match=word):
        make_params(mu1, mu2, gamma)


def test_params_frozen(ref_params):
    with pytest.raises(AttributeError):
        ref_params.mu1 = 1.0
    assert isinstance(ref_params, DunklParams)


# -------------------------------------------------------------- spot values


def test_dunkl_tilde_examples(ref_params):
    D1 = dunkl_tilde(ref_params, 1)
    assert scalar(D1(X)) == pytest.approx(1.1, abs=1e-14)
    assert D1(ONE).is_zero()
    r = D1(Poly2.monomial(2, 0))
    assert r.terms == pytest.approx({(1, 0): 3.0})


def test_dunkl_standard_examples():
    D = dunkl_standard(0.6, 1)
    assert scalar(D(X)) == pytest.approx(2.2, abs=1e-14)
    assert D(Poly2.monomial(2, 0)).terms == {(1, 0): 2.0}
    assert D(Poly2.monomial(3, 0)).terms == pytest.approx({(2, 0): 4.2})


def test_laplacian_examples(ref_params):
    lap = laplacian_cartesian(ref_params)
    assert scalar(lap(Poly2.monomial(2, 0))) == pytest.approx(3.3, abs=1e-14)
    assert lap(ONE).is_zero()
    xy = X * Y
    rhs = ref_params.one_minus_gamma2 * laplacian_standard(ref_params.eta1, ref_params.eta2)(xy)
    assert coefficient_residual(lap(xy), rhs) == 0.0


def test_x_commutator_example(ref_params):
    lhs = commutator(coordinate(1), dunkl_tilde(ref_params, 1))(X)
    rhs = x_commutator_rhs(ref_params, 1)(X)
    assert lhs.terms == pytest.approx({(1, 0): -1.9})
    assert coefficient_residual(lhs, rhs) < 1e-14


@given(params(), poly2())
def test_fast_dunkl_matches_composition(p, f):
    for axis in (1, 2):
        mu = p.mu1 if axis == 1 else p.mu2
        assert coefficient_residual(dunkl_tilde(p, axis)(f), dunkl_tilde_reference(p, axis)(f)) < TOL
        assert coefficient_residual(dunkl_standard(mu, axis)(f), dunkl_standard_reference(mu, axis)(f)) < TOL
        g = GaussPoly2.from_poly(f)
        assert coefficient_residual(dunkl_tilde(p, axis)(g), dunkl_tilde_reference(p, axis)(g)) < TOL


@given(params(), poly2(), poly2(), st.floats(-2, 2), st.floats(-2, 2))
def test_linearity(p, f, g, a, b):
    for op in (dunkl_tilde(p, 1), dunkl_tilde(p, 2), laplacian_cartesian(p)):
        lhs = op(a * f + b * g)
        rhs = a * op(f) + b * op(g)
        assert coefficient_residual(lhs, rhs, op(f), op(g)) < 1e-12


# ------------------------------------------------------------- operator laws


@given(params(), poly2())
def test_anticommutes_with_reflection(p, f):
    for axis in (1, 2):
        D = dunkl_tilde(p, axis)
        assert coefficient_residual(D(f.reflect(axis)), -D(f).reflect(axis)) < TOL


@given(params(), poly2())
def test_tilde_derivatives_commute(p, f):
    c = commutator(dunkl_tilde(p, 1), dunkl_tilde(p, 2))(f)
    scale = dunkl_tilde(p, 1)(dunkl_tilde(p, 2)(f))
    assert coefficient_residual(c, Poly2.zero(), scale) < TOL


@given(params(), poly2())
def test_coordinate_commutators(p, f):
    for axis in (1, 2):
        lhs = commutator(coordinate(axis), dunkl_tilde(p, axis))(f)
        rhs = x_commutator_rhs(p, axis)(f)
        assert coefficient_residual(lhs, rhs) < TOL


@given(params(), poly2())
def test_laplacian_factorization(p, f):
    assert coefficient_residual(laplacian_cartesian(p)(f), laplacian_factorized(p)(f)) < TOL


@given(st.floats(-0.45, 2.0), st.floats(-0.45, 2.0), poly2())
def test_gamma_zero_reduction(m1, m2, f):
    p = make_params(m1, m2, 0.0)
    for axis, mu in ((1, m1), (2, m2)):
        assert coefficient_residual(dunkl_tilde(p, axis)(f), dunkl_standard_reference(mu, axis)(f)) < TOL


@given(params(), poly2())
def test_laplacian_commutators_corrected_sign(p, f):
    lap = laplacian_standard(p.eta1, p.eta2)
    D1, D2 = dunkl_standard(p.eta1, 1), dunkl_standard(p.eta2, 2)
    x, y = coordinate(1), coordinate(2)
    rhs = 2.0 * (D1 @ D2)(f)
    for lhs_op in (commutator(lap, x @ D2), commutator(lap, y @ D1)):
        lhs = lhs_op(f)
        assert coefficient_residual(lhs, rhs) < TOL


def test_laplacian_commutator_opposite_sign_fails(ref_params):
    # the opposite sign is not an identity: it fails on x y^2
    f = X * Y * Y
    lap = laplacian_standard(ref_params.eta1, ref_params.eta2)
    D1, D2 = dunkl_standard(ref_params.eta1, 1), dunkl_standard(ref_params.eta2, 2)
    lhs = commutator(lap, coordinate(1) @ D2)(f)
    assert coefficient_residual(lhs, 2.0 * (D1 @ D2)(f)) < TOL
    assert coefficient_residual(lhs, -2.0 * (D1 @ D2)(f)) > 0.5


# ------------------------------------------------------------------- angular


def test_J_plane_waves_at_zero_eta():
    p = make_params(0, 0, 0)
    K = angular_momentum_J(p)
    # e^{-i phi} = c - i s; K = d/dphi gives -i e^{-i phi}, so J e^{-i phi} = e^{-i phi}
    re, im = TrigPoly.cos_poly([0, 1]), TrigPoly.sin_times([-1.0])
    assert coefficient_residual(K(re), 1.0 * im) < 1e-15
    assert coefficient_residual(K(im), -1.0 * re) < 1e-15
    assert K(TrigPoly.cos_poly([1.0])).is_zero()


@pytest.mark.parametrize("branch", [1, -1])
def test_J_eigenvalue_example(branch):
    p = make_params(0.3, 0.5, 0.5)
    st_ = angular_eigenfunction(AngularQuantum(2, 1, branch), p)
    assert st_.lam == pytest.approx(branch * 3.2249031, abs=1e-7)
    K = angular_momentum_J(p)
    assert coefficient_residual(K(st_.real), st_.lam * st_.imag) < 1e-10
    assert coefficient_residual(K(st_.imag), -st_.lam * st_.real) < 1e-10


def test_angular_B_examples(ref_params):
    B = angular_B(ref_params)
    assert B(TrigPoly.cos_poly([1.0])).is_zero()
    for q, value in ((AngularQuantum(2, 1, 1), 10.4), (AngularQuantum(1, -1, 1), 4.2)):
        s = angular_eigenfunction(q, ref_params)
        for part in (s.real, s.imag):
            assert coefficient_residual(2.0 * B(part), value * part) < 1e-10


@st.composite
def trig(draw):
    rng = np.random.default_rng(draw(st.integers(0, 2**32 - 1)))
    return TrigPoly(rng.uniform(-1, 1, 7), rng.uniform(-1, 1, 7))


@given(params(), trig())
def test_B_matches_direct_form(p, g):
    assert coefficient_residual(angular_B(p)(g), angular_B_direct(p)(g)) < TOL


# ---------------------------------------------------------------- Hamiltonian


def test_hamiltonian_ground_state():
    p = make_params(0, 0, 0)
    f = GaussPoly2.from_poly(ONE)
    assert coefficient_residual(hamiltonian(p)(f), f) < 1e-15
    assert hamiltonian(p)(GaussPoly2.from_poly(Poly2.zero())).is_zero()


def test_hamiltonian_cartesian_example(ref_params):
    s = oscillator_cartesian_state(1, 0, ref_params)
    E = 3.6 * math.sqrt(0.75)
    assert E == pytest.approx(3.1176915, abs=1e-7)
    assert coefficient_residual(hamiltonian(ref_params)(s.wavefunction), E * s.wavefunction) < 1e-12


def test_hamiltonian_coulomb_unsupported(ref_params):
    with pytest.raises(UnsupportedDomainError, match="radial"):
        hamiltonian(ref_params, "coulomb")
