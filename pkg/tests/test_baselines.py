import numpy as np
import pytest

from beamcov import (
    AngularRegion,
    RangeRegion,
    SamplingConfig,
    build_array,
    dft_codewords,
    dft_design,
    ff_csv,
    gain,
    pattern_grid,
    rolloff_aware_ff,
    sampling_design,
)


@pytest.fixture(scope="module")
def verification_grid():
    return np.linspace(-0.3, 0.3, 2001)


class TestSamplingConfig:
    @pytest.mark.parametrize(
        "kwargs",
        [
            {"num_samples": 0},
            {"max_iters": 0},
            {"tolerance": 0.0},
            {"tolerance": -1e-3},
        ],
    )
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            SamplingConfig(**kwargs)


class TestSamplingDesign:
    def test_single_sample_recovers_matched_filter(self, cfg64):
        region = AngularRegion(-0.1, 0.3)
        result = sampling_design(cfg64, region, None, SamplingConfig(num_samples=1, max_iters=20))
        root_p = np.sqrt(cfg64.tx_power)
        assert result.achieved_gamma == pytest.approx(root_p, rel=1e-6)
        assert gain(ff_csv(cfg64, region.center), result.weights) == pytest.approx(root_p, rel=1e-6)
        # matched filter up to a global phase: uniform magnitudes
        np.testing.assert_allclose(np.abs(result.weights.weights), root_p / 8, rtol=1e-6)

    def test_objective_monotone(self, cfg64):
        result = sampling_design(
            cfg64, AngularRegion(-0.3, 0.3), None, SamplingConfig(num_samples=50, max_iters=30)
        )
        hist = np.array(result.gamma_history)
        assert np.all(np.diff(hist) >= -1e-7)
        assert result.converged

    def test_power_constraint_exact(self, cfg64):
        result = sampling_design(
            cfg64, AngularRegion(-0.3, 0.3), None, SamplingConfig(num_samples=20)
        )
        power = np.sum(np.abs(result.weights.weights) ** 2)
        assert abs(power - cfg64.tx_power) <= 1e-9 * cfg64.tx_power

    def test_verification_min_improves_with_samples(self, cfg64, verification_grid):
        region = AngularRegion(-0.3, 0.3)
        mins = []
        for s in (5, 20, 100):
            result = sampling_design(cfg64, region, None, SamplingConfig(num_samples=s))
            grid = pattern_grid(cfg64, result.weights, verification_grid, [0.0])
            mins.append(grid.gains.min())
            # the sampled optimum upper-bounds the continuous minimum
            assert result.achieved_gamma >= mins[-1] - 1e-9
        assert mins[0] < mins[1] < mins[2]
        proposed = pattern_grid(
            cfg64, rolloff_aware_ff(cfg64, region), verification_grid, [0.0]
        ).gains.min()
        assert 20 * np.log10(mins[2] / proposed) >= -1.0

    def test_near_field_sampling_runs(self, cfg256):
        result = sampling_design(
            cfg256,
            AngularRegion(-0.15, 0.15),
            RangeRegion(1 / 23, 1 / 17),
            SamplingConfig(num_samples=5, max_iters=10),
        )
        assert result.iterations >= 1
        assert np.isfinite(result.achieved_gamma)


class TestDftDesign:
    def test_codeword_grid(self):
        directions = dft_codewords(64)
        assert directions[0] == -1 + 1 / 64
        assert directions[-1] == 1 - 1 / 64
        np.testing.assert_allclose(np.diff(directions), 2 / 64)

    def test_codeword_count_for_benchmark_region(self, cfg64):
        # enumeration: odd multiples k/64 with |k| <= 19 -> 20 directions
        directions = dft_codewords(64)
        inside = directions[(directions >= -0.3) & (directions <= 0.3)]
        assert inside.size == 20
        w = dft_design(cfg64, AngularRegion(-0.3, 0.3))
        assert np.sum(np.abs(w.weights) ** 2) == pytest.approx(cfg64.tx_power, rel=1e-12)

    def test_single_direction_region_returns_that_codeword(self, cfg64):
        theta_k = -1 + 63 / 64  # k = 32
        w = dft_design(cfg64, AngularRegion(theta_k - 0.01, theta_k + 0.01))
        expected = np.sqrt(cfg64.tx_power) * ff_csv(cfg64, theta_k)
        np.testing.assert_allclose(w.weights, expected, atol=1e-12)

    def test_empty_region_falls_back_with_diagnostic(self):
        cfg = build_array(8, 30e9)  # directions spaced 0.25 apart
        with pytest.warns(RuntimeWarning, match="nearest codeword"):
            w = dft_design(cfg, AngularRegion(-0.05, 0.05))
        expected = np.sqrt(cfg.tx_power) * ff_csv(cfg, -1 + 7 / 8)
        assert w.weights.shape == (8,)
        assert np.sum(np.abs(w.weights) ** 2) == pytest.approx(cfg.tx_power, rel=1e-12)
        # nearest direction to center 0 is +-1/8; magnitude pattern matches a single codeword
        np.testing.assert_allclose(np.abs(w.weights), np.abs(expected), rtol=1e-12)

    def test_determinism(self, cfg64):
        region = AngularRegion(-0.3, 0.3)
        np.testing.assert_array_equal(
            dft_design(cfg64, region).weights, dft_design(cfg64, region).weights
        )

    def test_worse_boundary_rolloff_than_protected_design(self, cfg64, verification_grid):
        region = AngularRegion(-0.3, 0.3)
        dft_min = pattern_grid(cfg64, dft_design(cfg64, region), verification_grid, [0.0]).gains.min()
        proposed_min = pattern_grid(
            cfg64, rolloff_aware_ff(cfg64, region), verification_grid, [0.0]
        ).gains.min()
        assert dft_min < proposed_min
