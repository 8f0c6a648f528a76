"""Smoke tests for the python bindings."""

import math

import pytest

ballgreen = pytest.importorskip("ballgreen")


def test_special_functions():
    assert ballgreen.gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert ballgreen.beta_fn(0.5, 0.5) == pytest.approx(math.pi, rel=1e-12)
    assert ballgreen.gauss_2f1(1.0, 1.0, 2.0, 0.5) == pytest.approx(
        2.0 * math.log(2.0), rel=1e-11
    )
    assert ballgreen.angular_integral(2.0, 1.0, 0.5) == pytest.approx(
        math.log(9.0), rel=1e-11
    )
    assert ballgreen.pochhammer(3.0, 4) == 360.0


def test_geometry_and_kernels():
    ctx = ballgreen.DimensionContext(3)
    assert ctx.omega == pytest.approx(4.0 * math.pi, rel=1e-13)
    assert ballgreen.bracket([0.0, 0.0, 0.0], [0.3, 0.1, 0.0]) == pytest.approx(1.0)
    assert ballgreen.n_kernel_mag([0.0, 0.0, 0.0], [0.5, 0.0, 0.0], ctx) == pytest.approx(
        3.5, rel=1e-13
    )
    assert ballgreen.poisson_kernel([0.5, 0.0, 0.0], [1.0, 0.0, 0.0], ctx) == pytest.approx(
        6.0
    )


def test_norm_constants():
    ctx = ballgreen.DimensionContext(3)
    spec = ballgreen.QuadratureSpec()
    k0 = ballgreen.kernel_integral_K(0.0, "direct", spec, ctx)
    assert k0 == pytest.approx(3.0 * math.pi, rel=1e-8)
    ks0 = ballgreen.kernel_integral_Kswap(0.0, "direct", spec, ctx)
    assert ks0 == pytest.approx(4.0 * math.pi, rel=1e-8)
    rep = ballgreen.norm_l1_estimate(ctx, spec, "green", [0.0, 0.3, 0.6], False)
    assert rep["value"] == pytest.approx(1.0, rel=1e-6)
    assert rep["argmax_radius"] == 0.0
    bound = ballgreen.interpolation_bound(2.0, ctx, spec, "sigma")
    assert bound == pytest.approx(math.sqrt(0.75), rel=1e-6)


def test_operators():
    ctx = ballgreen.DimensionContext(3)
    spec = ballgreen.QuadratureSpec()
    one = ballgreen.ScalarField.parse("one")
    value, err = ballgreen.green_potential(one, [0.0, 0.0, 0.0], spec, ctx)
    assert value == pytest.approx(1.0 / 6.0, rel=1e-8)
    grad, _ = ballgreen.grad_operator(one, [0.3, 0.0, 0.0], spec, ctx)
    assert grad[0] == pytest.approx(0.1, rel=1e-6)
    nval, _ = ballgreen.abs_operator(one, [0.0, 0.0, 0.0], spec, ctx, "sigma")
    assert nval == pytest.approx(0.75, rel=1e-8)


def test_series_and_conjecture():
    assert ballgreen.majorant_c_limit(3) == pytest.approx(2.0 / 3.0, rel=1e-12)
    assert ballgreen.coefficient_a(3, 1) < 0.0
    assert ballgreen.coefficient_e(3, 1) >= 0.0
    ctx = ballgreen.DimensionContext(3)
    forms = ballgreen.conjecture_closed_forms(3, 4.0, ctx)
    assert forms["ap_closed"] == pytest.approx(forms["ap_integral"], rel=1e-7)
    assert forms["bp_closed_corrected"] == pytest.approx(forms["bp_integral"], rel=1e-7)


def test_sampling_reproducible():
    ctx = ballgreen.DimensionContext(3)
    a = ballgreen.ball_sample(1000, 42, ctx)
    b = ballgreen.ball_sample(1000, 42, ctx)
    assert a == b
    assert all(sum(c * c for c in p) < 1.0 for p in a)


def test_run_check():
    spec = ballgreen.QuadratureSpec()
    results = ballgreen.run_check("theorem-inf-norm", [3], spec, "fast")
    assert results
    assert all(r["passed"] for r in results)
