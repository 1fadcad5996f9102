"""Gaussian phase-space picture, group flows, translations, mass shell."""

import numpy as np
import pytest

from ladderlie.catalog import o32_matrices, sp4_matrices
from ladderlie.phspace import (Affine5Vector, FourMomentum, GaussianState,
                               apply_sp2, boost_momentum, expm_nilpotent, flow,
                               flow_residuals, ground_state, mass_shell,
                               o32_metric, o32_residual, rotate_momentum,
                               rotation, squeeze, symplectic_form,
                               symplectic_residual, translate,
                               translate_via_exponential,
                               translation_generator, wigner_eval, wigner_grid)


def test_ground_state_wigner_values():
    g = ground_state()
    assert abs(wigner_eval(g, 0.0, 0.0) - 1.0 / np.pi) < 1e-15
    assert abs(wigner_eval(g, 1.0, 0.0) - np.exp(-1.0) / np.pi) < 1e-15
    assert abs(wigner_eval(g, 0.0, 1.0) - np.exp(-1.0) / np.pi) < 1e-15


def test_wigner_normalization():
    xs = np.linspace(-8.0, 8.0, 801)
    grid = wigner_grid(ground_state(), xs, xs)
    integral = float(np.trapezoid(np.trapezoid(grid, xs, axis=1), xs))
    assert abs(integral - 1.0) < 1e-6


def test_wigner_grid_matches_pointwise():
    g = ground_state()
    xs = np.linspace(-2.0, 2.0, 9)
    ps = np.linspace(-1.0, 1.0, 5)
    grid = wigner_grid(g, xs, ps)
    assert grid.shape == (9, 5)
    for i, x in enumerate(xs):
        for j, p in enumerate(ps):
            assert abs(grid[i, j] - wigner_eval(g, x, p)) < 1e-15


def test_rotation_leaves_ground_state_invariant():
    g = ground_state()
    out = apply_sp2(g, rotation(0.7))
    assert np.max(np.abs(out.cov - g.cov)) < 1e-15
    assert np.max(np.abs(out.mean)) < 1e-15


def test_squeeze_reshapes_covariance():
    eta = 0.8
    out = apply_sp2(ground_state(), squeeze(eta))
    want = 0.5 * np.diag([np.exp(2 * eta), np.exp(-2 * eta)])
    assert np.max(np.abs(out.cov - want)) < 1e-12


def test_determinant_invariance_under_random_maps():
    rng = np.random.default_rng(99)
    g = ground_state()
    for _ in range(100):
        t1, t2 = rng.uniform(0.0, 2 * np.pi, size=2)
        eta = rng.uniform(-0.5, 0.5)
        m = rotation(t1) @ squeeze(eta) @ rotation(t2)
        out = apply_sp2(g, m)
        assert abs(out.det_cov - 0.25) < 1e-12


def test_apply_composes_functorially():
    g = GaussianState(np.array([0.3, -0.2]),
                      np.array([[0.7, 0.1], [0.1, 0.9]]))
    m1 = rotation(0.4) @ squeeze(0.3)
    m2 = squeeze(-0.2) @ rotation(1.1)
    one_shot = apply_sp2(g, m2 @ m1)
    two_step = apply_sp2(apply_sp2(g, m1), m2)
    assert np.max(np.abs(one_shot.cov - two_step.cov)) < 1e-12
    assert np.max(np.abs(one_shot.mean - two_step.mean)) < 1e-12


def test_singular_map_rejected():
    with pytest.raises(ValueError):
        apply_sp2(ground_state(), np.zeros((2, 2)))


def test_state_validation():
    with pytest.raises(ValueError):
        GaussianState(np.zeros(2), np.array([[1.0, 0.5], [-0.5, 1.0]]))
    with pytest.raises(ValueError):
        GaussianState(np.zeros(2), -np.eye(2))


def test_symplectic_residual_detects_violations():
    assert symplectic_residual(np.eye(4)) == 0.0
    assert abs(symplectic_residual(np.diag([2.0, 1.0, 1.0, 1.0])) - 1.0) < 1e-15
    j = symplectic_form()
    assert np.max(np.abs(j + j.T)) == 0.0


def test_o32_residual_detects_violations():
    assert o32_residual(np.eye(5)) == 0.0
    assert abs(o32_residual(2.0 * np.eye(5)) - 3.0) < 1e-15
    eta = o32_metric()
    assert np.array_equal(np.diag(eta), [1.0, 1.0, 1.0, -1.0, -1.0])


def test_sp4_flows_stay_symplectic():
    ts = (-1.0, -0.5, 0.1, 0.5, 1.0)
    res = flow_residuals(sp4_matrices(), symplectic_residual, ts)
    assert set(res) == set(sp4_matrices().labels)
    worst = max(r for rows in res.values() for _, r in rows)
    assert worst < 1e-10


def test_o32_flows_preserve_metric():
    ts = (-1.0, -0.5, 0.1, 0.5, 1.0)
    res = flow_residuals(o32_matrices(), o32_residual, ts)
    worst = max(r for rows in res.values() for _, r in rows)
    assert worst < 1e-10


def test_flow_of_rotation_generator_is_periodic():
    g = o32_matrices().element("J3")
    full_turn = flow(g, 2 * np.pi)
    assert np.max(np.abs(full_turn - np.eye(5))) < 1e-12


def test_boost_flow_is_hyperbolic():
    g = o32_matrices().element("K3")
    m = flow(g, 0.5)
    assert abs(m[2, 2] - np.cosh(0.5)) < 1e-12
    assert abs(m[2, 3] - np.sinh(0.5)) < 1e-12


def test_translation_matrix_shape():
    m = translate(1.0, 2.0, 3.0, 4.0)
    want = np.eye(5)
    want[0, 4], want[1, 4], want[2, 4], want[3, 4] = 1.0, 2.0, 3.0, -4.0
    assert np.array_equal(m, want)


def test_translation_equals_exponential_exactly():
    for args in ((1.5, -2.0, 0.25, 3.0), (0.1, -2.5, 3.25, 1.75),
                 (0.0, 0.0, 0.0, 2.0), (-1.0, 0.5, 0.0, 0.0)):
        assert np.array_equal(translate(*args), translate_via_exponential(*args))


def test_translation_action_on_events():
    v = Affine5Vector(0.3, -1.0, 2.5, 4.0)
    out = v.transformed(translate(1.5, -2.0, 0.25, 3.0))
    assert (out.x, out.y, out.z, out.t) == (1.8, -3.0, 2.75, 1.0)


def test_translation_generator_is_nilpotent():
    x = translation_generator(1.0, 2.0, 3.0, 4.0)
    assert np.max(np.abs(x @ x)) == 0.0
    m = expm_nilpotent(x)
    assert np.array_equal(m, np.eye(5) + x)


def test_expm_nilpotent_rejects_full_rank():
    with pytest.raises(ValueError):
        expm_nilpotent(np.eye(3))


def test_translations_commute_as_a_group():
    m1 = translate(1.0, 0.0, -2.0, 0.5)
    m2 = translate(-0.5, 2.0, 1.0, 1.5)
    assert np.max(np.abs(m1 @ m2 - m2 @ m1)) == 0.0
    combined = translate(0.5, 2.0, -1.0, 2.0)
    assert np.max(np.abs(m1 @ m2 - combined)) < 1e-15


def test_mass_shell_at_rest():
    p = FourMomentum.at_rest(2.0)
    assert mass_shell(p) == -4.0
    assert p.p0 == 2.0 and p.p1 == p.p2 == p.p3 == 0.0


def test_mass_shell_invariant_under_boosts():
    for mass in (0.5, 1.0, 2.0):
        p = FourMomentum.at_rest(mass)
        p = boost_momentum(p, 1, 2.0)
        p = boost_momentum(p, 2, -1.3)
        p = rotate_momentum(p, 3, 0.9)
        p = boost_momentum(p, 3, 0.7)
        assert abs(mass_shell(p) + mass ** 2) < 1e-10


def test_boost_along_axis():
    p = FourMomentum.at_rest(1.0)
    out = boost_momentum(p, 3, 0.8)
    assert abs(out.p0 - np.cosh(0.8)) < 1e-12
    assert abs(out.p3 - np.sinh(0.8)) < 1e-12
    assert abs(out.p1) < 1e-15 and abs(out.p2) < 1e-15


def test_rotation_mixes_spatial_components_only():
    p = FourMomentum(1.0, 0.0, 0.0, 3.0)
    out = rotate_momentum(p, 3, np.pi / 2)
    assert abs(out.p0 - 3.0) < 1e-12
    assert abs(out.p2 - 1.0) < 1e-12
    assert abs(out.p1) < 1e-12


def test_momentum_axis_validation():
    p = FourMomentum.at_rest(1.0)
    with pytest.raises(ValueError):
        boost_momentum(p, 0, 1.0)
    with pytest.raises(ValueError):
        rotate_momentum(p, 4, 1.0)
