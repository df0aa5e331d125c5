import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from beamcov import (
    SpatialPoint,
    build_array,
    ff_csv,
    gain,
    gain_loss,
    nf_csv,
    nf_csv_approx,
    nf_csv_exact,
    taylor_coeffs,
)

angles = st.floats(min_value=-1.0, max_value=1.0)
inv_ranges = st.floats(min_value=0.0, max_value=0.15)


class TestSpatialPoint:
    def test_far_field_default(self):
        assert SpatialPoint(0.3).inv_range == 0.0

    @pytest.mark.parametrize("theta, xi", [(1.5, 0.0), (-1.01, 0.0), (0.0, -0.1)])
    def test_rejects_out_of_range(self, theta, xi):
        with pytest.raises(ValueError):
            SpatialPoint(theta, xi)


class TestFarFieldCsv:
    def test_broadside_is_uniform(self, cfg64):
        a = ff_csv(cfg64, 0.0)
        np.testing.assert_allclose(a, np.full(64, 1 / 8 + 0j), rtol=0, atol=0)

    def test_two_element_endfire_phases(self):
        cfg = build_array(2, 30e9)
        a = ff_csv(cfg, 1.0)
        # u = [-lambda/4, +lambda/4] gives phases [-pi/2, +pi/2]
        want = np.array([-1j, 1j]) / np.sqrt(2)
        np.testing.assert_allclose(a, want, atol=1e-15)

    def test_angle_validation(self, cfg64):
        with pytest.raises(ValueError):
            ff_csv(cfg64, 1.2)

    @given(theta=angles)
    def test_unit_norm(self, cfg64, theta):
        assert np.linalg.norm(ff_csv(cfg64, theta)) == pytest.approx(1.0, abs=1e-12)


class TestNearFieldCsv:
    def test_far_field_reduction_is_exact(self, cfg64):
        for theta in (-0.7, 0.0, 0.31):
            a_ff = ff_csv(cfg64, theta)
            a_nf = nf_csv(cfg64, SpatialPoint(theta, 0.0))
            np.testing.assert_array_equal(a_ff, a_nf)

    def test_endfire_loses_range_dependence(self, cfg256):
        for xi in (0.01, 1 / 15):
            np.testing.assert_allclose(
                nf_csv(cfg256, SpatialPoint(1.0, xi)), ff_csv(cfg256, 1.0), atol=1e-15
            )
            np.testing.assert_allclose(
                nf_csv(cfg256, SpatialPoint(-1.0, xi)), ff_csv(cfg256, -1.0), atol=1e-15
            )

    def test_broadside_quadratic_phase(self, cfg256):
        xi = 1 / 15
        a = nf_csv(cfg256, SpatialPoint(0.0, xi))
        u = cfg256.positions
        expected = np.exp(-1j * np.pi * u * u * xi / cfg256.wavelength) / 16.0
        np.testing.assert_allclose(a, expected, atol=1e-14)

    @given(theta=angles, xi=inv_ranges)
    def test_unit_norm(self, cfg256, theta, xi):
        a = nf_csv(cfg256, SpatialPoint(theta, xi))
        assert np.linalg.norm(a) == pytest.approx(1.0, abs=1e-12)


class TestExactCsv:
    def test_far_limit_matches_planar_model(self, cfg256):
        r = 1e6 * cfg256.rayleigh_dist
        theta = 0.24
        exact = nf_csv_exact(cfg256, theta, r)
        planar = ff_csv(cfg256, theta)
        phase_err = np.angle(exact * np.conj(planar))
        assert np.max(np.abs(phase_err)) < 1e-3

    def test_broadside_symmetry(self, cfg256):
        a = nf_csv_exact(cfg256, 0.0, 20.0)
        np.testing.assert_allclose(a, a[::-1], atol=1e-14)

    @given(theta=angles, range_m=st.floats(min_value=1.0, max_value=1e4))
    def test_unit_norm(self, cfg256, theta, range_m):
        a = nf_csv_exact(cfg256, theta, range_m)
        assert np.linalg.norm(a) == pytest.approx(1.0, abs=1e-12)

    def test_fresnel_approximation_in_band(self, cfg256):
        exact = nf_csv_exact(cfg256, 0.0, 15.0)
        fresnel = nf_csv(cfg256, SpatialPoint(0.0, 1 / 15))
        assert abs(np.vdot(exact, fresnel)) >= 0.99

    def test_rejects_nonpositive_range(self, cfg256):
        with pytest.raises(ValueError):
            nf_csv_exact(cfg256, 0.0, 0.0)


class TestTaylorCsv:
    def test_zero_deviation_reproduces_reference(self, cfg256):
        coeffs = taylor_coeffs(cfg256, 0.1, 1 / 20)
        approx = nf_csv_approx(cfg256, coeffs, 0.0, 0.0)
        ref = nf_csv(cfg256, SpatialPoint(0.1, 1 / 20))
        np.testing.assert_array_equal(approx, ref)

    def test_far_field_linearization_is_exact(self, cfg64):
        coeffs = taylor_coeffs(cfg64, 0.1, 0.0)
        approx = nf_csv_approx(cfg64, coeffs, 0.05, 0.0)
        np.testing.assert_allclose(approx, ff_csv(cfg64, 0.15), atol=1e-13)

    def test_mid_band_point_loss_is_small(self, cfg256):
        loss = gain_loss(cfg256, SpatialPoint(0.0, 1 / 15), 0.1, 0.01)
        assert loss <= 0.05


class TestGain:
    def test_matched_filter_attains_power_budget(self, cfg64):
        a = ff_csv(cfg64, 0.1)
        w = np.sqrt(cfg64.tx_power) * a
        assert gain(a, w) == pytest.approx(np.sqrt(cfg64.tx_power), rel=1e-12)

    def test_dirichlet_null_at_dft_spacing(self, cfg64):
        w = np.sqrt(cfg64.tx_power) * ff_csv(cfg64, 0.0)
        assert gain(ff_csv(cfg64, 2 / 64), w) == pytest.approx(0.0, abs=1e-12)

    @given(phase=st.floats(min_value=-np.pi, max_value=np.pi), theta=angles)
    def test_global_phase_invariance(self, cfg64, phase, theta):
        a = ff_csv(cfg64, theta)
        w = ff_csv(cfg64, 0.2)
        assert gain(a, w * np.exp(1j * phase)) == pytest.approx(gain(a, w), abs=1e-12)

    def test_length_mismatch(self, cfg64, cfg256):
        with pytest.raises(ValueError):
            gain(ff_csv(cfg64, 0.0), ff_csv(cfg256, 0.0))


class TestGainLoss:
    def test_zero_at_reference(self, cfg256):
        assert gain_loss(cfg256, SpatialPoint(0.0, 1 / 15), 0.0, 0.0) <= 1e-12

    def test_near_field_box_maximum(self, cfg256):
        # reference (0, 1/15); deviations spanning the radiating near field
        xi0 = 1 / 15
        xis = np.linspace(1 / cfg256.rayleigh_dist, 1 / cfg256.fresnel_dist, 41)
        dts = np.linspace(-0.2, 0.2, 41)
        worst = max(
            gain_loss(cfg256, SpatialPoint(0.0, xi0), dt, xi - xi0) for dt in dts for xi in xis
        )
        assert worst <= 0.05

    @given(d_theta=st.floats(min_value=-0.3, max_value=0.3), d_xi=st.floats(min_value=-0.05, max_value=0.07))
    def test_bounded(self, cfg256, d_theta, d_xi):
        loss = gain_loss(cfg256, SpatialPoint(0.0, 1 / 15), d_theta, d_xi)
        assert 0.0 <= loss <= 1.0
