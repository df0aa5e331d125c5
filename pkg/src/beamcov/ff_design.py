"""Far-field beam coverage synthesis.

The angular gain profile and the per-antenna weights form a Fourier pair, so
a flat target profile over an angular interval maps to a sinc-shaped real
amplitude taper across the aperture. Truncating that ideal taper to N
antennas causes a roll-off of width 4/N at the interval edges; the
roll-off-aware variant widens the design interval by a protective 2/N so the
roll-off lands outside the requested region.
"""

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .geometry import ArrayConfig
from .special import si


@dataclass(frozen=True)
class AngularRegion:
    """Closed spatial-angle interval [theta_min, theta_max] within [-1, 1]."""

    theta_min: float
    theta_max: float

    def __post_init__(self):
        if not (-1.0 <= self.theta_min < self.theta_max <= 1.0):
            raise ValueError(
                "angular region requires -1 <= theta_min < theta_max <= 1, "
                f"got [{self.theta_min}, {self.theta_max}]"
            )

    @property
    def center(self) -> float:
        return 0.5 * (self.theta_min + self.theta_max)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.theta_max - self.theta_min)

    def protected_half_width(self, num_antennas: int) -> float:
        """Half-width enlarged by the protective zoom 2/N."""
        return self.half_width + 2.0 / num_antennas


@dataclass(frozen=True)
class WeightShape:
    """Real shaping sequence across the aperture.

    values is alpha times the ideal infinite sinc sequence truncated by the
    N-element rectangular array mask; alpha normalizes ||values||^2 to the
    power budget.
    """

    values: np.ndarray
    alpha: float
    mask_width: int

    def __post_init__(self):
        self.values.flags.writeable = False


@dataclass(frozen=True)
class BeamWeights:
    """Complex beamforming vector with its scheme tag and power budget.

    Every design in this package returns ||weights||^2 = power exactly
    (within 1e-9 relative).
    """

    weights: np.ndarray
    scheme: str
    power: float

    def __post_init__(self):
        self.weights.flags.writeable = False


def shaping_sequence(cfg: ArrayConfig, half_width: float) -> WeightShape:
    """Truncated sinc amplitude taper for a coverage half-width.

    values_n = alpha * sinc(2 * half_width * u_n / lambda), with alpha chosen
    so ||values||^2 = tx_power.
    """
    if not half_width > 0:
        raise ValueError(f"half_width must be positive, got {half_width}")
    raw = np.sinc(2.0 * half_width * cfg.positions / cfg.wavelength)
    alpha = np.sqrt(cfg.tx_power / np.sum(raw * raw))
    return WeightShape(values=alpha * raw, alpha=float(alpha), mask_width=cfg.num_antennas)


def _finalize(cfg: ArrayConfig, w_raw: np.ndarray, scheme: str) -> BeamWeights:
    """Rescale to the exact power budget and wrap."""
    w = np.sqrt(cfg.tx_power) * w_raw / np.linalg.norm(w_raw)
    return BeamWeights(weights=w, scheme=scheme, power=cfg.tx_power)


def _sinc_taper_design(cfg: ArrayConfig, center: float, half_width: float, scheme: str) -> BeamWeights:
    """Steered truncated-sinc design, single pass over the aperture."""
    u = cfg.positions
    w = np.exp((2j * np.pi / cfg.wavelength * center) * u)
    w *= np.sinc((2.0 * half_width / cfg.wavelength) * u)
    w *= np.sqrt(cfg.tx_power) / np.linalg.norm(w)
    return BeamWeights(weights=w, scheme=scheme, power=cfg.tx_power)


def _warn_if_subresolution(cfg: ArrayConfig, half_width: float) -> None:
    if half_width <= 2.0 / cfg.num_antennas:
        warnings.warn(
            f"target half-width {half_width:.4g} is at or below the array's "
            f"angular resolution 2/N = {2.0 / cfg.num_antennas:.4g}; the flat-top "
            "model does not apply",
            RuntimeWarning,
            stacklevel=3,
        )


def surrogate_ff(cfg: ArrayConfig, region: AngularRegion) -> BeamWeights:
    """Truncated-sinc design for the requested interval, no protective zoom.

    The gain is flat inside the interval but rolls off across the edges,
    dropping about 6 dB at the interval boundary.
    """
    _warn_if_subresolution(cfg, region.half_width)
    return _sinc_taper_design(cfg, region.center, region.half_width, "surrogate")


def rolloff_aware_ff(cfg: ArrayConfig, region: AngularRegion) -> BeamWeights:
    """Truncated-sinc design with the 2/N protective zoom.

    Identical to surrogate_ff but designed for the enlarged half-width
    mu + 2/N, which pushes the edge roll-off outside the target interval.
    """
    _warn_if_subresolution(cfg, region.half_width)
    half = region.protected_half_width(cfg.num_antennas)
    return _sinc_taper_design(cfg, region.center, half, "proposed")


def _dirichlet(num_antennas: int, y: float) -> float:
    """Symmetric Dirichlet kernel sin(N pi y / 2) / sin(pi y / 2)."""
    den = np.sinc(y / 2.0)
    if abs(den) < 1e-14:
        return num_antennas * np.cos(num_antennas * np.pi * y / 2.0) / np.cos(np.pi * y / 2.0)
    return num_antennas * np.sinc(num_antennas * y / 2.0) / den


def unconstrained_gain_ff(cfg: ArrayConfig, mu: float, d_theta: float) -> float:
    """Gain of the truncated-sinc design at angular deviation d_theta, with
    the taper left unnormalized (alpha = 1).

    Computed as the convolution of the flat coverage target with the
    Dirichlet kernel of the N-element array mask,

        (1 / (2 mu N)) | int_{-mu}^{mu} sin(N pi (d_theta - x)/2)
                                        / sin(pi (d_theta - x)/2) dx |,

    by adaptive Gauss-Kronrod quadrature (absolute tolerance 1e-9). Equals
    the direct finite sum |a^H(theta0 + d_theta) (a(theta0) .* v)| to
    quadrature accuracy.
    """
    if not mu > 0:
        raise ValueError(f"mu must be positive, got {mu}")
    n_ant = cfg.num_antennas
    val, _ = quad(lambda x: _dirichlet(n_ant, d_theta - x), -mu, mu, epsabs=1e-9, limit=200)
    return abs(val) / (2.0 * mu * n_ant)


def rolloff_approx(num_antennas: int, mu: float, d_theta: float) -> float:
    """Piecewise sine-integral model of the truncated-sinc gain profile.

    Requires mu > 2/N. Constant 2/(2 mu N) on the plateau |d_theta| <=
    mu - 2/N, the folded sine-integral step |1 - (2/pi) Si(N pi (|d_theta| -
    mu)/2)| / (2 mu N) across the roll-off band, and 0 beyond mu + 2/N. The
    fold keeps the value nonnegative where the raw step crosses zero near
    the outer edge.
    """
    if not mu > 2.0 / num_antennas:
        raise ValueError(
            f"roll-off model needs mu > 2/N, got mu={mu} with 2/N={2.0 / num_antennas:.4g}"
        )
    a = abs(d_theta)
    scale = 1.0 / (2.0 * mu * num_antennas)
    if a <= mu - 2.0 / num_antennas:
        return 2.0 * scale
    if a >= mu + 2.0 / num_antennas:
        return 0.0
    return scale * abs(1.0 - (2.0 / np.pi) * si(num_antennas * np.pi / 2.0 * (a - mu)))
