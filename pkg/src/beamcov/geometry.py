"""Uniform linear array geometry and field-boundary distances."""

from dataclasses import dataclass

import numpy as np

SPEED_OF_LIGHT = 299792458.0
"""Speed of light in m/s (SI exact value)."""


@dataclass(frozen=True)
class ArrayConfig:
    """Half-wavelength ULA centered at the origin.

    All lengths are in meters. The array is immutable after construction
    and safe to share across threads.

    Attributes:
        num_antennas:  number of elements N (>= 2).
        carrier_freq:  carrier frequency in Hz.
        wavelength:    carrier wavelength, c / carrier_freq.
        spacing:       inter-element spacing, exactly wavelength / 2.
        positions:     element coordinates u_n = (2n - N - 1)/2 * spacing,
                       n = 1..N; center-symmetric, sum(u_n) = 0.
        aperture:      physical aperture D = (N - 1) * spacing.
        tx_power:      transmit power budget P_t in watts.
        rayleigh_dist: far-field boundary 2 D^2 / wavelength.
        fresnel_dist:  radiating near-field inner boundary
                       0.5 * sqrt(D^3 / wavelength).
    """

    num_antennas: int
    carrier_freq: float
    wavelength: float
    spacing: float
    positions: np.ndarray
    aperture: float
    tx_power: float
    rayleigh_dist: float
    fresnel_dist: float

    def __post_init__(self):
        self.positions.flags.writeable = False


def build_array(num_antennas: int, carrier_freq: float, tx_power: float = 1.0) -> ArrayConfig:
    """Construct a half-wavelength ULA from physical parameters.

    Args:
        num_antennas: number of elements, at least 2.
        carrier_freq: carrier frequency in Hz, positive.
        tx_power:     transmit power budget in watts, positive.

    Returns:
        ArrayConfig with all derived geometry populated.

    Raises:
        ValueError: on non-positive or degenerate inputs.
    """
    if num_antennas != int(num_antennas) or num_antennas < 2:
        raise ValueError(f"num_antennas must be an integer >= 2, got {num_antennas}")
    if not carrier_freq > 0:
        raise ValueError(f"carrier_freq must be positive, got {carrier_freq}")
    if not tx_power > 0:
        raise ValueError(f"tx_power must be positive, got {tx_power}")

    n_ant = int(num_antennas)
    wavelength = SPEED_OF_LIGHT / carrier_freq
    spacing = wavelength / 2.0
    n = np.arange(1, n_ant + 1, dtype=float)
    positions = (2.0 * n - n_ant - 1) / 2.0 * spacing
    aperture = (n_ant - 1) * spacing
    return ArrayConfig(
        num_antennas=n_ant,
        carrier_freq=float(carrier_freq),
        wavelength=wavelength,
        spacing=spacing,
        positions=positions,
        aperture=aperture,
        tx_power=float(tx_power),
        rayleigh_dist=2.0 * aperture * aperture / wavelength,
        fresnel_dist=0.5 * np.sqrt(aperture**3 / wavelength),
    )
