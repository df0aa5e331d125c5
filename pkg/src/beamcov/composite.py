"""Composite designs: multi-region superposition, large-angle partitioning,
and the constant-modulus quadratic-phase (chirp) design for analog arrays."""

import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .ff_design import AngularRegion, BeamWeights, _finalize, rolloff_aware_ff
from .geometry import ArrayConfig
from .nf_design import RangeRegion, design_nf


@dataclass(frozen=True)
class MultiRegionSpec:
    """A set of disjoint target regions with superposition coefficients.

    regions holds AngularRegion entries (far field) or
    (AngularRegion, RangeRegion) pairs (near field). coefficients are
    nonnegative per-region scalings; None means equal weighting. The final
    vector is globally rescaled to the power budget either way.
    """

    regions: tuple
    coefficients: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "regions", tuple(self.regions))
        if self.coefficients is not None:
            coeffs = tuple(float(b) for b in self.coefficients)
            if len(coeffs) != len(self.regions):
                raise ValueError(
                    f"{len(coeffs)} coefficients for {len(self.regions)} regions"
                )
            if any(b < 0 for b in coeffs):
                raise ValueError("coefficients must be nonnegative")
            object.__setattr__(self, "coefficients", coeffs)
        if not self.regions:
            raise ValueError("at least one region is required")


@dataclass(frozen=True)
class AnalogParams:
    """Quadratic phase profile parameters of the analog chirp design.

    eta is the quadratic phase coefficient in 1/m controlling the beam
    width; varpi is the effective angular spread mu * sqrt(1 - theta0^2 /
    (1 - mu^2)) it is derived from.
    """

    eta: float
    varpi: float
    theta_th: float = 0.2


def _angular_part(region) -> AngularRegion:
    return region[0] if isinstance(region, tuple) else region


def multi_region_ff(cfg: ArrayConfig, spec: MultiRegionSpec) -> BeamWeights:
    """Weighted superposition of per-region roll-off-aware designs.

    Requires every pair of regions to be separated by at least
    mu_i + mu_j + 8/N in center angle so the roll-off skirts of adjacent
    beams do not overlap. Near-field (AngularRegion, RangeRegion) entries
    use the separable near-field design for that region.
    """
    angs = [_angular_part(r) for r in spec.regions]
    margin = 8.0 / cfg.num_antennas
    for i in range(len(angs)):
        for j in range(i + 1, len(angs)):
            needed = angs[i].half_width + angs[j].half_width + margin
            sep = abs(angs[i].center - angs[j].center)
            if sep < needed:
                raise ValueError(
                    f"regions {i} and {j} are separated by {sep:.4g} "
                    f"but need at least {needed:.4g}"
                )
    betas = spec.coefficients or (1.0,) * len(spec.regions)
    w_sum = np.zeros(cfg.num_antennas, dtype=complex)
    for beta, region in zip(betas, spec.regions):
        if isinstance(region, tuple):
            part = design_nf(cfg, region[0], region[1])
        else:
            part = rolloff_aware_ff(cfg, region)
        w_sum = w_sum + beta * part.weights
    return _finalize(cfg, w_sum, "multi-region")


def partition_large_angle(
    ang: AngularRegion, theta_th: float, num_antennas: int
) -> list[AngularRegion]:
    """Split a wide angular region into equal sub-windows the linearized
    design handles accurately.

    Returns [ang] unchanged when its half-width is within theta_th.
    Otherwise returns the smallest number M of equal-width windows, each of
    half-width at most theta_th, tiling [theta_min, theta_max] with exactly
    4/N between adjacent window edges; each window's 2/N roll-off flank
    bridges half of that gap, so the union of flat tops plus flanks covers
    the full span.
    """
    if theta_th < 2.0 / num_antennas:
        raise ValueError(
            f"theta_th={theta_th:.4g} is below the angular resolution "
            f"2/N={2.0 / num_antennas:.4g}; partition infeasible"
        )
    if ang.half_width <= theta_th:
        return [ang]
    span = ang.theta_max - ang.theta_min
    gap = 4.0 / num_antennas
    m_windows = 2
    while (span - (m_windows - 1) * gap) / (2.0 * m_windows) > theta_th:
        m_windows += 1
    half = (span - (m_windows - 1) * gap) / (2.0 * m_windows)
    windows = []
    left = ang.theta_min
    for _ in range(m_windows):
        windows.append(AngularRegion(left, left + 2.0 * half))
        left += 2.0 * half + gap
    return windows


def large_angle_design(
    cfg: ArrayConfig,
    ang: AngularRegion,
    rng: RangeRegion,
    theta_th: float = 0.2,
    coefficients: Sequence[float] | None = None,
) -> BeamWeights:
    """Near-field coverage for wide angular spans via partitioned sub-beams.

    Each sub-window gets its own near-field design referenced at (window
    center, xi0) with xi0 shared across windows; the sub-beams are summed
    with equal coefficients by default and rescaled to the power budget.
    """
    windows = partition_large_angle(ang, theta_th, cfg.num_antennas)
    if coefficients is None:
        betas = (1.0,) * len(windows)
    else:
        betas = tuple(float(b) for b in coefficients)
        if len(betas) != len(windows):
            raise ValueError(f"{len(betas)} coefficients for {len(windows)} sub-windows")
    w_sum = np.zeros(cfg.num_antennas, dtype=complex)
    for beta, window in zip(betas, windows):
        w_sum = w_sum + beta * design_nf(cfg, window, rng, theta_th=theta_th).weights
    return _finalize(cfg, w_sum, "large-angle")


def analog_params(cfg: ArrayConfig, ang: AngularRegion, theta_th: float = 0.2) -> AnalogParams:
    """Chirp coefficients for an angular region.

    Requires mu < 1 and theta0^2 < 1 - mu^2.
    """
    mu = ang.half_width
    theta0 = ang.center
    if not mu < 1.0:
        raise ValueError(f"analog design requires mu < 1, got {mu}")
    if not theta0 * theta0 < 1.0 - mu * mu:
        raise ValueError(
            f"analog design requires theta0^2 < 1 - mu^2, got theta0={theta0}, mu={mu}"
        )
    varpi = mu * np.sqrt(1.0 - theta0 * theta0 / (1.0 - mu * mu))
    d = cfg.aperture
    lam = cfg.wavelength
    eta = (2.0 * d * varpi + lam + np.sqrt(lam * (4.0 * d * varpi + lam))) / (2.0 * d * d)
    return AnalogParams(eta=float(eta), varpi=float(varpi), theta_th=theta_th)


def analog_lfm_design(cfg: ArrayConfig, ang: AngularRegion) -> BeamWeights:
    """Constant-modulus beam broadening via a quadratic (chirp) phase profile.

    w_n = sqrt(P_t / N) * exp(j (2 pi / lambda)(theta0 u_n + eta u_n^2));
    every element has the same modulus, so the design fits phase-only
    (analog) front ends.
    """
    params = analog_params(cfg, ang)
    u = cfg.positions
    phase = 2.0 * np.pi / cfg.wavelength * (ang.center * u + params.eta * u * u)
    w = np.sqrt(cfg.tx_power / cfg.num_antennas) * np.exp(1j * phase)
    return BeamWeights(weights=w, scheme="analog", power=cfg.tx_power)
