import json

import pytest

from dunkl2d import verification as V

SMALL_GRID = [(0.3, 0.5, 0.5), (-0.3, 0.9, -0.7), (2.0, 0.0, 0.0)]


# ------------------------------------------------------------------- registry


def test_every_check_in_exactly_one_suite():
    seen = [n for names in V.SUITES.values() for n in names]
    assert sorted(seen) == sorted(V.CHECKS)
    assert len(seen) == len(set(seen))
    for name, spec in V.CHECKS.items():
        assert name in V.SUITES[spec.suite]


def test_coverage_names_exist():
    for topic, names in V.COVERAGE.items():
        assert names, topic
        for n in names:
            assert n in V.CHECKS, (topic, n)
    covered = {n for names in V.COVERAGE.values() for n in names}
    uncovered = set(V.CHECKS) - covered
    # plumbing-only checks need no topic
    assert uncovered <= {"tilde_matches_definition", "fd_algebra_agreement", "reflection_involution",
                         "reflection_commute"}


@pytest.mark.parametrize(
    "kwargs",
    [dict(tolerance=0.0), dict(tolerance=-1.0), dict(trials=0), dict(category="bogus")],
)
def test_checkspec_validation(kwargs):
    base = dict(name="x", category="identity", suite="identities", tolerance=1e-10)
    with pytest.raises(ValueError):
        V.CheckSpec(**{**base, **kwargs})


def test_default_grid():
    g = V.default_grid(1)
    assert len(g) == 45
    assert g == V.default_grid(1)
    assert g[25:] != V.default_grid(2)[25:]
    assert sum(p[2] == 0.0 for p in g[:25]) == 5


# --------------------------------------------------------------- suite paths


def test_identity_suite_small_grid_passes():
    r = V.run_identity_suite(seed=3, params_grid=SMALL_GRID, n_inputs=10)
    assert r.passed
    names = {c.name for c in r.checks}
    assert names == set(V.SUITES["identities"])
    for c in r.checks:
        assert c.max_residual < c.threshold


def test_gamma_zero_grid_adds_reduction_check():
    r = V.run_identity_suite(seed=1, params_grid=[(0.3, 0.9, 0.0)], n_inputs=5)
    assert r.check("gamma_zero_reduction").passed
    r = V.run_identity_suite(seed=1, params_grid=[(0.3, 0.9, 0.5)], n_inputs=5)
    with pytest.raises(KeyError):
        r.check("gamma_zero_reduction")


def test_invalid_point_skipped():
    r = V.run_identity_suite(seed=1, params_grid=[(-0.6, 0.0, 0.0), (0.3, 0.5, 0.5)], n_inputs=5)
    assert r.passed
    assert len(r.skipped) == 1
    assert r.skipped[0]["params"]["mu1"] == -0.6
    assert "mu1" in r.skipped[0]["reason"]


def test_determinism_byte_identical():
    a = V.run_identity_suite(seed=5, params_grid=SMALL_GRID, n_inputs=8).to_json()
    b = V.run_identity_suite(seed=5, params_grid=SMALL_GRID, n_inputs=8).to_json()
    assert a == b
    payload = json.loads(a)
    assert set(payload) >= {"seed", "config", "checks", "pass"}
    for c in payload["checks"]:
        assert set(c) >= {"name", "category", "params", "max_residual", "threshold", "pass"}
        assert "wall_time" not in c
    assert [c["name"] for c in payload["checks"]] == sorted(c["name"] for c in payload["checks"])


def test_eigen_suite_n_max_zero():
    r = V.run_eigen_suite(seed=1, params_grid=SMALL_GRID, n_max=0, two_ell_max=0)
    assert r.passed
    assert r.check("eigen_cartesian").trials == len(SMALL_GRID)


def test_sub_machine_tolerance_fails_and_reports():
    r = V.run_eigen_suite(seed=1, params_grid=SMALL_GRID[:1], n_max=2, two_ell_max=2, tol=1e-16)
    assert not r.passed
    failing = [c for c in r.checks if not c.passed]
    assert failing
    for c in failing:
        assert c.threshold == 1e-16 and c.max_residual >= 1e-16
        assert c.params["mu1"] == 0.3


def test_monotonic_in_tolerance():
    grid = SMALL_GRID[:2]
    tight = V.run_eigen_suite(seed=1, params_grid=grid, n_max=2, two_ell_max=3, tol=1e-14)
    loose = V.run_eigen_suite(seed=1, params_grid=grid, n_max=2, two_ell_max=3, tol=1e-9)
    for c in tight.checks:
        assert c.max_residual == loose.check(c.name).max_residual
        if c.passed:
            assert loose.check(c.name).passed


def test_coulomb_without_bound_states_is_skipped():
    r = V.run_eigen_suite(seed=1, params_grid=[(-0.3, -0.3, 0.3)], n_max=2, two_ell_max=2)
    assert r.passed
    assert any(s["params"].get("two_ell") == 0 for s in r.skipped)


def test_orthogonality_example():
    r = V.run_orthogonality_suite(params_grid=[(0.3, 0.5, 0.5)], basis_bounds={"cartesian_max": 3})
    assert r.passed
    assert r.check("ortho_cartesian").max_residual < 1e-6


def test_single_state_normalized():
    r = V.run_orthogonality_suite(
        params_grid=[(0.3, 0.5, 0.5)], basis_bounds={"cartesian_max": 0, "n_max": 0, "two_ell_max": 0}
    )
    for name in ("ortho_cartesian", "ortho_polar_oscillator", "ortho_coulomb"):
        assert r.check(name).max_residual < 1e-8


def test_empty_family_passes():
    r = V.run_orthogonality_suite(
        params_grid=[(0.3, 0.5, 0.5)], basis_bounds={"cartesian_max": -1, "n_max": -1, "two_ell_max": 0}
    )
    assert r.passed
    assert r.check("ortho_cartesian").max_residual == 0.0
    assert r.check("ortho_polar_oscillator").max_residual == 0.0


def test_reduction_suite():
    r = V.run_reduction_and_degeneracy_suite(params_grid=[(0.3, 0.5, 0.5), (0.0, 0.0, 0.0)])
    assert r.passed
    assert r.check("reduction_energies").max_residual < 1e-12
    assert r.check("degeneracy_consistency").max_residual == 0.0


def test_one_parameter_reference_example():
    ref = V.one_parameter_energies(0.3, 0.5)
    assert ref["cartesian"](2, 1) == pytest.approx(3 + 0.8 + 1)


def test_merge_and_run_suite_unknown():
    a = V.run_eigen_suite(seed=1, params_grid=SMALL_GRID[:1], n_max=0, two_ell_max=0)
    b = V.run_reduction_and_degeneracy_suite(params_grid=SMALL_GRID[:1], N_max=2)
    m = a.merge(b)
    assert len(m.checks) == len(a.checks) + len(b.checks)
    assert m.passed == (a.passed and b.passed)
    with pytest.raises(KeyError):
        V.run_suite("nonsense")
