"""Special functions: sinc, sine integral, Fresnel integrals, and the
quadratic-phase aperture integral used by the range-defocusing model.

All functions are pure and deterministic. Documented tolerances (checked
against adaptive-quadrature oracles in the test suite):

    si, fresnel_c, fresnel_s : <= 1e-8 absolute
    generalized_fresnel_I    : <= 1e-4 relative to the aperture length
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import fresnel as _fresnel
from scipy.special import sici as _sici


def sinc(x):
    """Normalized sinc, sin(pi x) / (pi x), with sinc(0) = 1."""
    return np.sinc(x)


def si(x):
    """Sine integral Si(x) = int_0^x sin(t)/t dt. Odd; -> +-pi/2 as x -> +-inf."""
    return _sici(x)[0]


def fresnel_c(z):
    """Fresnel cosine integral C(z) = int_0^z cos(pi t^2 / 2) dt."""
    return _fresnel(z)[1]


def fresnel_s(z):
    """Fresnel sine integral S(z) = int_0^z sin(pi t^2 / 2) dt."""
    return _fresnel(z)[0]


@dataclass(frozen=True)
class FresnelKernelParams:
    """Parameters of the quadratic-phase aperture integral.

    kappa:    angular-coverage frequency 2*mu/wavelength, in 1/m; >= 0.
    varkappa: angle-range coupling theta0*xi0, in 1/m.
    psi:      quadratic phase rate pi*(1 - theta0^2)*d_xi/wavelength, rad/m^2.
    aperture: integration span D in meters; > 0.
    """

    kappa: float
    varkappa: float
    psi: float
    aperture: float

    def __post_init__(self):
        if self.kappa < 0:
            raise ValueError(f"kappa must be >= 0, got {self.kappa}")
        if not self.aperture > 0:
            raise ValueError(f"aperture must be positive, got {self.aperture}")


def generalized_fresnel_I(t, params: FresnelKernelParams):
    """Aperture integral I(t) = int_{-D/2}^{D/2} exp(j[(psi + pi*kappa*varkappa*t) x^2
    + (pi*kappa*t) x]) dx.

    Evaluated through the Fresnel functions when the quadratic coefficient
    Q(t) = psi + pi*kappa*varkappa*t is away from zero, and through the exact
    linear-phase integral 2 sin(J D/2)/J (with J(t) = pi*kappa*t; D when J = 0)
    when |Q(t)| falls below 1e-9*pi*kappa (1e-12 absolute for kappa = 0),
    where the Fresnel form degenerates.

    Accepts a scalar or an array of t values; returns complex of the same shape.
    """
    t_in = np.asarray(t, dtype=float)
    scalar = t_in.ndim == 0
    t_arr = np.atleast_1d(t_in)

    d = params.aperture
    q = params.psi + np.pi * params.kappa * params.varkappa * t_arr
    j_lin = np.pi * params.kappa * t_arr
    eps_q = 1e-9 * np.pi * params.kappa if params.kappa > 0 else 1e-12

    out = np.empty(t_arr.shape, dtype=complex)

    near = np.abs(q) < eps_q
    if np.any(near):
        jn = j_lin[near]
        safe = np.where(jn == 0.0, 1.0, jn)
        out[near] = np.where(jn == 0.0, d, 2.0 * np.sin(jn * d / 2.0) / safe)

    far = ~near
    if np.any(far):
        qf = q[far]
        jf = j_lin[far]
        root = np.sqrt(2.0 * np.abs(qf) / np.pi)
        shift = jf / (2.0 * qf)
        s1, c1 = _fresnel(root * (-d / 2.0 + shift))
        s2, c2 = _fresnel(root * (d / 2.0 + shift))
        g1 = c1 + 1j * s1
        g2 = c2 + 1j * s2
        diff = np.where(qf > 0, g2 - g1, np.conj(g2) - np.conj(g1))
        out[far] = np.sqrt(np.pi / (2.0 * np.abs(qf))) * np.exp(-1j * jf * jf / (4.0 * qf)) * diff

    return out[0] if scalar else out
