import numpy as np
import pytest

from beamcov import (
    AngularRegion,
    RangeRegion,
    design_nf,
    pattern_grid,
    range_gain_closed_form,
    rolloff_aware_ff,
    taylor_coeffs,
)


def direct_range_gain(cfg, theta0, xi0, mu, d_xi):
    """Finite-sum oracle for the alpha = 1 angle-only design along range."""
    coeffs = taylor_coeffs(cfg, theta0, xi0)
    v = np.sinc(2.0 * mu * coeffs.zeta_theta / cfg.wavelength)
    psi = np.pi * (1.0 - theta0 * theta0) * d_xi / cfg.wavelength
    u = cfg.positions
    return abs(np.sum(v * np.exp(1j * psi * u * u))) / cfg.num_antennas


class TestRangeRegion:
    def test_center_and_width(self):
        rng = RangeRegion(1 / 23, 1 / 17)
        assert rng.center == pytest.approx((1 / 23 + 1 / 17) / 2)
        assert rng.half_width == pytest.approx((1 / 17 - 1 / 23) / 2)

    def test_from_metric_ranges_reorders(self):
        rng = RangeRegion.from_ranges(23.0, 17.0)
        assert rng.xi_min == pytest.approx(1 / 23)
        assert rng.xi_max == pytest.approx(1 / 17)

    def test_degenerate_and_far_field_markers(self):
        assert RangeRegion(0.0, 0.0).half_width == 0.0
        assert RangeRegion(0.05, 0.05).center == 0.05

    @pytest.mark.parametrize("lo, hi", [(-0.1, 0.1), (0.2, 0.1)])
    def test_rejects_bad_bounds(self, lo, hi):
        with pytest.raises(ValueError):
            RangeRegion(lo, hi)

    def test_from_ranges_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            RangeRegion.from_ranges(0.0, 20.0)


class TestTaylorCoefficients:
    def test_far_field_reference_gives_plain_positions(self, cfg256):
        coeffs = taylor_coeffs(cfg256, 0.3, 0.0)
        np.testing.assert_array_equal(coeffs.zeta_theta, cfg256.positions)

    def test_endfire_kills_range_sensitivity(self, cfg256):
        for theta0 in (1.0, -1.0):
            coeffs = taylor_coeffs(cfg256, theta0, 0.05)
            np.testing.assert_array_equal(coeffs.zeta_xi, np.zeros(256))

    def test_broadside_coefficients(self, cfg256):
        coeffs = taylor_coeffs(cfg256, 0.0, 1 / 15)
        u = cfg256.positions
        np.testing.assert_allclose(coeffs.zeta_xi, -u * u / 2, rtol=0, atol=0)
        np.testing.assert_allclose(coeffs.varphi, -u * u / (2 * 15), rtol=1e-15)


class TestDesignNF:
    def test_reduces_to_far_field_design(self, cfg64):
        ang = AngularRegion(-0.12, 0.2)
        w_nf = design_nf(cfg64, ang, RangeRegion(0.0, 0.0))
        w_ff = rolloff_aware_ff(cfg64, ang)
        np.testing.assert_allclose(w_nf.weights, w_ff.weights, rtol=0, atol=1e-12)

    def test_magnitude_follows_angle_taper(self, cfg256):
        ang = AngularRegion(-0.1, 0.1)
        rng = RangeRegion(1 / 15, 1 / 15)
        w = design_nf(cfg256, ang, rng).weights
        coeffs = taylor_coeffs(cfg256, 0.0, 1 / 15)
        taper = np.abs(np.sinc(2 * ang.protected_half_width(256) * coeffs.zeta_theta / cfg256.wavelength))
        ratio = np.abs(w) / (taper / np.linalg.norm(taper))
        np.testing.assert_allclose(ratio, ratio[0], rtol=1e-9)

    def test_power_budget_exact(self, cfg256):
        w = design_nf(cfg256, AngularRegion(-0.15, 0.15), RangeRegion(1 / 23, 1 / 17))
        assert abs(np.sum(np.abs(w.weights) ** 2) - cfg256.tx_power) <= 1e-9 * cfg256.tx_power

    def test_plateau_gain_shrinks_with_coverage(self, cfg256):
        # widening the angular coverage trades away achievable gain
        xi0 = 1 / 15
        plateaus = []
        for mu in (0.0125, 0.025, 0.05, 0.1):
            w = design_nf(cfg256, AngularRegion(-mu, mu), RangeRegion(xi0, xi0))
            thetas = np.linspace(-mu / 2, mu / 2, 51)
            plateaus.append(pattern_grid(cfg256, w, thetas, [xi0]).gains.mean())
        assert all(a > b for a, b in zip(plateaus, plateaus[1:]))

    def test_wide_region_warns(self, cfg256):
        with pytest.warns(RuntimeWarning, match="theta_th"):
            design_nf(cfg256, AngularRegion(-0.3, 0.3), RangeRegion(1 / 23, 1 / 17))

    def test_out_of_band_ranges_warn(self, cfg256):
        with pytest.warns(RuntimeWarning, match="Fresnel distance"):
            design_nf(cfg256, AngularRegion(-0.1, 0.1), RangeRegion.from_ranges(1.0, 20.0))
        with pytest.warns(RuntimeWarning, match="Rayleigh distance"):
            design_nf(cfg256, AngularRegion(-0.1, 0.1), RangeRegion.from_ranges(20.0, 1e4))

    def test_coverage_over_benchmark_region(self, cfg256):
        ang = AngularRegion(-0.15, 0.15)
        rng = RangeRegion(1 / 23, 1 / 17)
        w = design_nf(cfg256, ang, rng)
        thetas = np.linspace(-0.15, 0.15, 201)
        xis = np.linspace(1 / 23, 1 / 17, 41)
        grid = pattern_grid(cfg256, w, thetas, xis)
        # flat-top coverage: worst point within 2.5 dB of the center gain
        center = grid.gains[100, 20]
        assert grid.gains.min() >= center * 10 ** (-2.5 / 20)


class TestRangeGainClosedForm:
    def test_matches_direct_sum_at_zero_offset(self, cfg256):
        got = range_gain_closed_form(cfg256, 0.0, 1 / 15, 0.05, 0.0)
        want = direct_range_gain(cfg256, 0.0, 1 / 15, 0.05, 0.0)
        assert got == pytest.approx(want, rel=0.05)

    def test_matches_direct_sum_across_range_band(self, cfg256):
        xi0 = 1 / 15
        for mu in (0.0125, 0.1):
            for r in (10.0, 20.0, 60.0, 100.0):
                d_xi = 1 / r - xi0
                got = range_gain_closed_form(cfg256, 0.0, xi0, mu, d_xi)
                want = direct_range_gain(cfg256, 0.0, xi0, mu, d_xi)
                assert got == pytest.approx(want, rel=0.05)

    def test_off_broadside_reference(self, cfg256):
        got = range_gain_closed_form(cfg256, 0.15, 1 / 20, 0.05, 0.01)
        want = direct_range_gain(cfg256, 0.15, 1 / 20, 0.05, 0.01)
        assert got == pytest.approx(want, rel=0.05)

    def test_range_profile_nearly_flat(self, cfg256):
        xi0 = 1 / 15
        vals = [
            range_gain_closed_form(cfg256, 0.0, xi0, 0.05, 1 / r - xi0)
            for r in np.linspace(10, 100, 31)
        ]
        assert max(vals) / min(vals) <= 10 ** (3 / 20)

    def test_rejects_nonpositive_mu(self, cfg256):
        with pytest.raises(ValueError):
            range_gain_closed_form(cfg256, 0.0, 1 / 15, 0.0, 0.01)
