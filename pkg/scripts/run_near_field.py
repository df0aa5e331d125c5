#!/usr/bin/env python3
"""Near-field study: 2D angle-range coverage of the separable design, the
range-defocusing curves, and the wide-angle partitioned pattern.

Writes CSV data under results/near_field/ (no plotting).
"""

import argparse
from pathlib import Path

import numpy as np

from beamcov import (
    AngularRegion,
    RangeRegion,
    SpatialPoint,
    build_array,
    design_nf,
    large_angle_design,
    nf_csv,
    pattern_grid,
    range_gain_closed_form,
    taylor_coeffs,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=256)
    parser.add_argument("--f-ghz", type=float, default=30.0)
    parser.add_argument("--outdir", default="results/near_field")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    cfg = build_array(args.n, args.f_ghz * 1e9)

    # 2D coverage over the 17-23 m band
    ang = AngularRegion(-0.15, 0.15)
    rng = RangeRegion(1 / 23, 1 / 17)
    w = design_nf(cfg, ang, rng)
    thetas = np.linspace(-0.3, 0.3, 241)
    xis = np.linspace(1 / 30, 1 / 12, 61)
    grid = pattern_grid(cfg, w, thetas, xis)
    with open(outdir / "coverage_2d.csv", "w") as fh:
        fh.write("theta,range_m,gain\n")
        for i, theta in enumerate(thetas):
            for j, xi in enumerate(xis):
                fh.write(f"{theta:.6f},{1 / xi:.4f},{grid.gains[i, j]:.8e}\n")

    # range defocusing: model vs direct sum for three angular widths
    theta0, xi0 = 0.0, 1 / 15
    coeffs = taylor_coeffs(cfg, theta0, xi0)
    ranges = np.linspace(10, 100, 91)
    with open(outdir / "range_defocusing.csv", "w") as fh:
        header = ["range_m"]
        for mu in (0.0125, 0.05, 0.1):
            header += [f"model_mu{mu}", f"direct_mu{mu}"]
        fh.write(",".join(header) + "\n")
        columns = []
        for mu in (0.0125, 0.05, 0.1):
            taper = np.sinc(2 * mu * coeffs.zeta_theta / cfg.wavelength)
            w_unit = nf_csv(cfg, SpatialPoint(theta0, xi0)) * taper
            model = [range_gain_closed_form(cfg, theta0, xi0, mu, 1 / r - xi0) for r in ranges]
            direct = [
                abs(np.vdot(nf_csv(cfg, SpatialPoint(theta0, 1 / r)), w_unit)) for r in ranges
            ]
            columns += [model, direct]
        for i, r in enumerate(ranges):
            fh.write(f"{r:.3f}," + ",".join(f"{col[i]:.8e}" for col in columns) + "\n")

    # wide-angle partitioned design
    wide_ang = AngularRegion(-0.3, 0.3)
    wide_rng = RangeRegion(1 / 24, 1 / 16)
    w_wide = large_angle_design(cfg, wide_ang, wide_rng, theta_th=0.2)
    sweep = np.linspace(-0.4, 0.4, 641)
    gains = pattern_grid(cfg, w_wide, sweep, [wide_rng.center]).gains[:, 0]
    with open(outdir / "large_angle_pattern.csv", "w") as fh:
        fh.write("theta,gain\n")
        for theta, g in zip(sweep, gains):
            fh.write(f"{theta:.6f},{g:.8e}\n")
    in_band = gains[(sweep >= -0.3) & (sweep <= 0.3)]
    print(f"large-angle ripple over [-0.3, 0.3]: "
          f"{20 * np.log10(in_band.max() / in_band.min()):.3f} dB")
    print(f"wrote {outdir}/coverage_2d.csv, range_defocusing.csv, large_angle_pattern.csv")


if __name__ == "__main__":
    main()
