#!/usr/bin/env python3
"""Far-field study: beam patterns, weight magnitudes, and worst-case gain
versus the sampling baseline's sample count.

Writes CSV data under results/far_field/ (no plotting).
"""

import argparse
from pathlib import Path

import numpy as np

from beamcov import (
    AngularRegion,
    SamplingConfig,
    build_array,
    dft_design,
    pattern_grid,
    rolloff_aware_ff,
    sampling_design,
    surrogate_ff,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=64)
    parser.add_argument("--f-ghz", type=float, default=30.0)
    parser.add_argument("--theta-min", type=float, default=-0.3)
    parser.add_argument("--theta-max", type=float, default=0.3)
    parser.add_argument("--outdir", default="results/far_field")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    cfg = build_array(args.n, args.f_ghz * 1e9)
    region = AngularRegion(args.theta_min, args.theta_max)

    designs = {
        "proposed": rolloff_aware_ff(cfg, region),
        "surrogate": surrogate_ff(cfg, region),
        "dft": dft_design(cfg, region),
        "sampling_s20": sampling_design(cfg, region, None, SamplingConfig(20)).weights,
    }

    sweep = np.linspace(-0.5, 0.5, 2001)
    with open(outdir / "patterns.csv", "w") as fh:
        fh.write("theta," + ",".join(designs) + "\n")
        columns = [pattern_grid(cfg, w, sweep, [0.0]).gains[:, 0] for w in designs.values()]
        for i, theta in enumerate(sweep):
            fh.write(f"{theta:.6f}," + ",".join(f"{col[i]:.8e}" for col in columns) + "\n")

    with open(outdir / "weight_magnitudes.csv", "w") as fh:
        fh.write("antenna," + ",".join(designs) + "\n")
        for i in range(cfg.num_antennas):
            mags = ",".join(f"{abs(w.weights[i]):.8e}" for w in designs.values())
            fh.write(f"{i + 1},{mags}\n")

    verify = np.linspace(region.theta_min, region.theta_max, 2001)
    proposed_min = pattern_grid(cfg, designs["proposed"], verify, [0.0]).gains.min()
    with open(outdir / "worstcase_vs_samples.csv", "w") as fh:
        fh.write("num_samples,sampling_worst_gain,proposed_worst_gain\n")
        for s in (5, 10, 20, 50, 100, 200):
            result = sampling_design(cfg, region, None, SamplingConfig(s))
            worst = pattern_grid(cfg, result.weights, verify, [0.0]).gains.min()
            fh.write(f"{s},{worst:.8e},{proposed_min:.8e}\n")
            print(f"S={s:4d}: sampling {20 * np.log10(worst):8.3f} dB "
                  f"vs proposed {20 * np.log10(proposed_min):8.3f} dB")
    print(f"wrote {outdir}/patterns.csv, weight_magnitudes.csv, worstcase_vs_samples.csv")


if __name__ == "__main__":
    main()
