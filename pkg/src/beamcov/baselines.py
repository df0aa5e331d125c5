"""Benchmark schemes: sampling-based max-min optimization and DFT-codeword
superposition."""

import warnings
from dataclasses import dataclass

import cvxpy as cp
import numpy as np

from .ff_design import AngularRegion, BeamWeights, _finalize, rolloff_aware_ff
from .geometry import ArrayConfig
from .nf_design import RangeRegion, design_nf
from .steering import SpatialPoint, ff_csv, nf_csv


@dataclass(frozen=True)
class SamplingConfig:
    """Controls for the sampling-based max-min baseline.

    num_samples:            samples per dimension (angle; and inverse range
                            for 2D regions).
    max_iters:              cap on convexification iterations.
    tolerance:              stop once the worst sampled gain improves by less
                            than this; None resolves to 1e-4 * sqrt(tx_power).
    inner_solver_tolerance: accuracy handed to the cone solver.
    """

    num_samples: int = 20
    max_iters: int = 200
    tolerance: float | None = None
    inner_solver_tolerance: float = 1e-8

    def __post_init__(self):
        if self.num_samples < 1:
            raise ValueError(f"num_samples must be >= 1, got {self.num_samples}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.tolerance is not None and not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance}")


@dataclass(frozen=True)
class SamplingResult:
    """Output of sampling_design.

    weights:        power-normalized beamforming vector.
    achieved_gamma: worst gain over the sampled set at the returned iterate.
    converged:      True if the tolerance was met within max_iters.
    iterations:     convexification iterations actually run.
    gamma_history:  worst sampled gain after each iteration (starts at the
                    initialization), non-decreasing up to solver accuracy.
    """

    weights: BeamWeights
    achieved_gamma: float
    converged: bool
    iterations: int
    gamma_history: tuple


def _sample_csvs(cfg, ang, rng, num_samples):
    """Rows a_s^H over the uniform sample grid (angle, or angle x inverse range)."""
    if num_samples == 1:
        thetas = np.array([ang.center])
    else:
        thetas = np.linspace(ang.theta_min, ang.theta_max, num_samples)
    if rng is None:
        return np.array([ff_csv(cfg, t).conj() for t in thetas])
    if num_samples == 1:
        xis = np.array([rng.center])
    else:
        xis = np.linspace(rng.xi_min, rng.xi_max, num_samples)
    return np.array(
        [nf_csv(cfg, SpatialPoint(t, x)).conj() for t in thetas for x in xis]
    )


def sampling_design(
    cfg: ArrayConfig,
    ang: AngularRegion,
    rng: RangeRegion | None,
    sc: SamplingConfig,
) -> SamplingResult:
    """Max-min beamforming over a sampled target region via successive
    convexification.

    Each iteration fixes the phases of the sampled gains at the current
    iterate, which turns every |a_s^H w| >= gamma constraint into the linear
    bound Re{e^{-j arg(a_s^H w_t)} a_s^H w} >= gamma; the resulting
    second-order-cone subproblem (power ball plus linear bounds) is solved by
    an interior-point routine. Initialized at the closed-form design for the
    same region, so the objective starts feasible and the sequence of worst
    sampled gains is non-decreasing.

    Never raises on non-convergence: the best iterate is returned with
    converged=False.
    """
    pt = cfg.tx_power
    tol = sc.tolerance if sc.tolerance is not None else 1e-4 * np.sqrt(pt)

    a_mat = _sample_csvs(cfg, ang, rng, sc.num_samples)
    n_samp, n_ant = a_mat.shape
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        if rng is None:
            w0 = rolloff_aware_ff(cfg, ang).weights
        else:
            w0 = design_nf(cfg, ang, rng).weights

    a_re, a_im = a_mat.real, a_mat.imag
    x_re = cp.Variable(n_ant)
    x_im = cp.Variable(n_ant)
    gamma = cp.Variable()
    cos_p = cp.Parameter(n_samp)
    sin_p = cp.Parameter(n_samp)
    re_aw = a_re @ x_re - a_im @ x_im
    im_aw = a_re @ x_im + a_im @ x_re
    problem = cp.Problem(
        cp.Maximize(gamma),
        [
            cp.multiply(cos_p, re_aw) + cp.multiply(sin_p, im_aw) >= gamma,
            cp.norm(cp.hstack([x_re, x_im])) <= np.sqrt(pt),
        ],
    )
    solver_opts = {
        "tol_gap_abs": sc.inner_solver_tolerance,
        "tol_gap_rel": sc.inner_solver_tolerance,
        "tol_feas": sc.inner_solver_tolerance,
    }

    w_best = w0
    g_best = float(np.min(np.abs(a_mat @ w0)))
    history = [g_best]
    converged = False
    iterations = 0
    for _ in range(sc.max_iters):
        phases = np.angle(a_mat @ w_best)
        cos_p.value = np.cos(phases)
        sin_p.value = np.sin(phases)
        try:
            problem.solve(solver="CLARABEL", warm_start=True, **solver_opts)
        except cp.error.SolverError:
            break
        if x_re.value is None:
            break
        iterations += 1
        w_new = x_re.value + 1j * x_im.value
        g_new = float(np.min(np.abs(a_mat @ w_new)))
        history.append(g_new)
        improvement = g_new - g_best
        if g_new >= g_best:
            w_best, g_best = w_new, g_new
        if improvement < tol:
            converged = True
            break

    weights = _finalize(cfg, w_best, "sampling")
    return SamplingResult(
        weights=weights,
        achieved_gamma=float(np.min(np.abs(a_mat @ weights.weights))),
        converged=converged,
        iterations=iterations,
        gamma_history=tuple(history),
    )


def dft_codewords(num_antennas: int) -> np.ndarray:
    """The N orthogonal steering directions theta_k = -1 + (2k - 1)/N, k = 1..N."""
    k = np.arange(1, num_antennas + 1, dtype=float)
    return -1.0 + (2.0 * k - 1.0) / num_antennas


def dft_design(cfg: ArrayConfig, ang: AngularRegion) -> BeamWeights:
    """Superposition of the DFT codewords whose directions fall inside the
    target interval, power-normalized.

    If no codeword direction lands in the interval, falls back to the single
    codeword nearest the interval center (with a diagnostic).
    """
    directions = dft_codewords(cfg.num_antennas)
    inside = directions[(directions >= ang.theta_min) & (directions <= ang.theta_max)]
    if inside.size == 0:
        nearest = directions[np.argmin(np.abs(directions - ang.center))]
        warnings.warn(
            f"no DFT direction falls in [{ang.theta_min}, {ang.theta_max}]; "
            f"using the nearest codeword at theta={nearest:.4g}",
            RuntimeWarning,
            stacklevel=2,
        )
        inside = np.array([nearest])
    u = cfg.positions
    phases = 2.0 * np.pi / cfg.wavelength * np.outer(u, inside)
    w_raw = np.exp(1j * phases).sum(axis=1)
    return _finalize(cfg, w_raw, "dft")
