"""Channel steering vectors (exact, Fresnel-approximated, and linearized)
and beamforming-gain evaluation."""

from dataclasses import dataclass

import numpy as np

from .geometry import ArrayConfig


@dataclass(frozen=True)
class SpatialPoint:
    """A target location as (spatial angle, inverse range).

    angle is sin of the physical angle, in [-1, 1]. inv_range is 1/r in 1/m;
    inv_range = 0 encodes the far field.
    """

    angle: float
    inv_range: float = 0.0

    def __post_init__(self):
        if not abs(self.angle) <= 1.0:
            raise ValueError(f"spatial angle must lie in [-1, 1], got {self.angle}")
        if not self.inv_range >= 0.0:
            raise ValueError(f"inverse range must be >= 0, got {self.inv_range}")


@dataclass(frozen=True)
class TaylorCoefficients:
    """First-order phase expansion of the near-field steering vector around a
    reference point (theta0, xi0).

    varphi:     constant term u_n*theta0 - u_n^2 (1 - theta0^2) xi0 / 2, meters.
    zeta_theta: angle sensitivity u_n + u_n^2 theta0 xi0, meters.
    zeta_xi:    inverse-range sensitivity -u_n^2 (1 - theta0^2) / 2, m^2.
    """

    varphi: np.ndarray
    zeta_theta: np.ndarray
    zeta_xi: np.ndarray

    def __post_init__(self):
        for arr in (self.varphi, self.zeta_theta, self.zeta_xi):
            arr.flags.writeable = False


def _fresnel_phase(u: np.ndarray, theta: float, xi: float) -> np.ndarray:
    """Phase path-length u*theta - u^2 (1 - theta^2) xi / 2 in meters."""
    return u * theta - 0.5 * u * u * (1.0 - theta * theta) * xi


def taylor_coeffs(cfg: ArrayConfig, theta0: float, xi0: float) -> TaylorCoefficients:
    """Expansion coefficients of the near-field phase around (theta0, xi0)."""
    if not abs(theta0) <= 1.0:
        raise ValueError(f"spatial angle must lie in [-1, 1], got {theta0}")
    if not xi0 >= 0.0:
        raise ValueError(f"inverse range must be >= 0, got {xi0}")
    u = cfg.positions
    return TaylorCoefficients(
        varphi=_fresnel_phase(u, theta0, xi0),
        zeta_theta=u + u * u * theta0 * xi0,
        zeta_xi=-0.5 * u * u * (1.0 - theta0 * theta0),
    )


def ff_csv(cfg: ArrayConfig, theta: float) -> np.ndarray:
    """Far-field steering vector, element n = exp(j 2 pi u_n theta / lambda)/sqrt(N)."""
    if not abs(theta) <= 1.0:
        raise ValueError(f"spatial angle must lie in [-1, 1], got {theta}")
    u = cfg.positions
    phase = 2.0 * np.pi / cfg.wavelength * _fresnel_phase(u, theta, 0.0)
    return np.exp(1j * phase) / np.sqrt(cfg.num_antennas)


def nf_csv(cfg: ArrayConfig, point: SpatialPoint) -> np.ndarray:
    """Near-field steering vector under the Fresnel phase approximation.

    Element n = exp(j (2 pi / lambda)(u_n theta - u_n^2 (1 - theta^2) xi / 2))
    / sqrt(N). Reduces exactly to ff_csv when point.inv_range = 0.
    """
    u = cfg.positions
    phase = 2.0 * np.pi / cfg.wavelength * _fresnel_phase(u, point.angle, point.inv_range)
    return np.exp(1j * phase) / np.sqrt(cfg.num_antennas)


def nf_csv_exact(cfg: ArrayConfig, theta: float, range_m: float) -> np.ndarray:
    """Near-field steering vector with exact square-root element distances.

    Element n = exp(-j 2 pi (r_n - r) / lambda)/sqrt(N) with
    r_n = sqrt(r^2 + u_n^2 - 2 r u_n theta). Kept separate from nf_csv so the
    Fresnel approximation error is itself measurable.
    """
    if not abs(theta) <= 1.0:
        raise ValueError(f"spatial angle must lie in [-1, 1], got {theta}")
    if not range_m > 0:
        raise ValueError(f"range must be positive, got {range_m}")
    u = cfg.positions
    r_n = np.sqrt(range_m * range_m + u * u - 2.0 * range_m * u * theta)
    phase = -2.0 * np.pi / cfg.wavelength * (r_n - range_m)
    return np.exp(1j * phase) / np.sqrt(cfg.num_antennas)


def nf_csv_approx(
    cfg: ArrayConfig, coeffs: TaylorCoefficients, d_theta: float, d_xi: float
) -> np.ndarray:
    """Linearized near-field steering vector at deviation (d_theta, d_xi)
    from the reference point the coefficients were built for."""
    phase = 2.0 * np.pi / cfg.wavelength * (
        coeffs.varphi + coeffs.zeta_theta * d_theta + coeffs.zeta_xi * d_xi
    )
    return np.exp(1j * phase) / np.sqrt(cfg.num_antennas)


def gain(csv: np.ndarray, weights) -> float:
    """Beamforming gain |a^H w|.

    `weights` may be a complex vector or any object with a `weights`
    attribute (e.g. a design output). Invariant under a global phase
    rotation of w.
    """
    w = np.asarray(getattr(weights, "weights", weights))
    csv = np.asarray(csv)
    if w.shape != csv.shape:
        raise ValueError(f"length mismatch: csv has {csv.shape}, weights have {w.shape}")
    return float(abs(np.vdot(csv, w)))


def gain_loss(cfg: ArrayConfig, ref_point: SpatialPoint, d_theta: float, d_xi: float) -> float:
    """Mismatch 1 - |a^H a_approx| between the Fresnel near-field steering
    vector at (theta0 + d_theta, xi0 + d_xi) and its linearization around
    the reference point. Zero at zero deviation; always in [0, 1]."""
    coeffs = taylor_coeffs(cfg, ref_point.angle, ref_point.inv_range)
    exact = nf_csv(cfg, SpatialPoint(ref_point.angle + d_theta, ref_point.inv_range + d_xi))
    approx = nf_csv_approx(cfg, coeffs, d_theta, d_xi)
    return max(0.0, 1.0 - abs(np.vdot(exact, approx)))
