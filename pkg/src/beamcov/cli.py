"""Command-line front end: scenario configuration, design execution, and
CSV/report serialization.

Subcommands: design, evaluate, benchmark, rolloff (edge roll-off curves),
defocus (range-defocusing curves). All numeric output is decimal text with
17 significant digits so files round-trip double precision exactly.
"""

import argparse
import json
import os
import sys
import time
import warnings
from dataclasses import asdict, dataclass

import numpy as np

from .baselines import SamplingConfig, dft_design, sampling_design
from .composite import MultiRegionSpec, analog_lfm_design, large_angle_design, multi_region_ff
from .evaluator import benchmark, pattern_grid, worst_case_gain
from .ff_design import AngularRegion, rolloff_aware_ff, surrogate_ff, unconstrained_gain_ff, rolloff_approx
from .geometry import build_array
from .nf_design import RangeRegion, design_nf, range_gain_closed_form, taylor_coeffs
from .steering import SpatialPoint, nf_csv

_FMT = "{:.17g}"

SCHEMES = ("proposed", "surrogate", "sampling", "dft", "multi-region", "large-angle", "analog")


@dataclass
class ScenarioSpec:
    """Fully resolved run configuration, echoed into every report."""

    command: str
    field_mode: str
    num_antennas: int
    carrier_freq_ghz: float
    tx_power_w: float
    theta_min: float | None = None
    theta_max: float | None = None
    xi_min: float | None = None
    xi_max: float | None = None
    scheme: str | None = None
    schemes: str | None = None
    num_samples: int | None = None
    max_iters: int | None = None
    tolerance: float | None = None
    theta_th: float | None = None
    points_per_beamwidth: int | None = None
    degrees_input: bool = False
    regions: str | None = None
    betas: str | None = None
    repeats: int | None = None
    mu: float | None = None
    theta0: float | None = None
    xi0: float | None = None
    out: str | None = None
    report: str | None = None


def _out_path(path):
    """Apply the optional output-directory override to relative paths."""
    base = os.environ.get("BEAMCOV_OUTDIR")
    if base and not os.path.isabs(path):
        os.makedirs(base, exist_ok=True)
        return os.path.join(base, path)
    return path


def write_weights(path, weights):
    w = np.asarray(getattr(weights, "weights", weights))
    with open(_out_path(path), "w") as fh:
        fh.write("index,real,imag\n")
        for i, val in enumerate(w, start=1):
            fh.write(f"{i},{_FMT.format(val.real)},{_FMT.format(val.imag)}\n")


def read_weights(path):
    rows = []
    with open(_out_path(path)) as fh:
        header = fh.readline().strip()
        if header != "index,real,imag":
            raise ValueError(f"unexpected weights header {header!r}")
        for line in fh:
            if not line.strip():
                continue
            idx, re_s, im_s = line.strip().split(",")
            rows.append((int(idx), float(re_s), float(im_s)))
    rows.sort()
    return np.array([re_v + 1j * im_v for _, re_v, im_v in rows])


def write_pattern(path, grid):
    with open(_out_path(path), "w") as fh:
        fh.write("theta,xi,gain_linear,gain_db\n")
        for i, th in enumerate(grid.theta_axis):
            for j, xi in enumerate(grid.xi_axis):
                g = grid.gains[i, j]
                g_db = 20.0 * np.log10(g) if g > 0 else float("-inf")
                fh.write(
                    f"{_FMT.format(th)},{_FMT.format(xi)},{_FMT.format(g)},{_FMT.format(g_db)}\n"
                )


def write_report(path, scenario: ScenarioSpec, results: dict):
    """Flat key = value lines followed by the same content as one JSON line."""
    payload = {k: v for k, v in asdict(scenario).items() if v is not None}
    payload.update(results)
    with open(_out_path(path), "w") as fh:
        for key, value in payload.items():
            fh.write(f"{key} = {value}\n")
        fh.write(json.dumps(payload, default=str) + "\n")


def _angles(args):
    lo, hi = args.theta_min, args.theta_max
    if args.degrees:
        lo = np.sin(np.radians(lo))
        hi = np.sin(np.radians(hi))
    return float(lo), float(hi)


def _range_region(args):
    if args.xi_min is not None or args.xi_max is not None:
        if args.xi_min is None or args.xi_max is None:
            raise ValueError("both --xi-min and --xi-max are required together")
        lo, hi = sorted((args.xi_min, args.xi_max))
        return RangeRegion(lo, hi)
    if args.r_min is None or args.r_max is None:
        raise ValueError("near mode needs --r-min/--r-max or --xi-min/--xi-max")
    if args.r_min <= 0 or args.r_max <= 0:
        raise ValueError(f"ranges must be positive, got [{args.r_min}, {args.r_max}]")
    return RangeRegion.from_ranges(args.r_min, args.r_max)


def _parse_region_list(text):
    regions = []
    for chunk in text.split(","):
        lo_s, _, hi_s = chunk.partition(":")
        if not hi_s:
            raise ValueError(f"region {chunk!r} is not of the form lo:hi")
        regions.append(AngularRegion(float(lo_s), float(hi_s)))
    return regions


def _sampling_config(args):
    return SamplingConfig(
        num_samples=args.s,
        max_iters=args.iters,
        tolerance=args.eps,
        inner_solver_tolerance=1e-8,
    )


def _run_design(args):
    cfg = build_array(args.n, args.f_ghz * 1e9, args.p_t)
    lo, hi = _angles(args)
    ang = AngularRegion(lo, hi)
    rng = _range_region(args) if args.mode == "near" else None
    scheme = args.scheme
    convergence = None

    start = time.perf_counter()
    if scheme == "proposed":
        design = design_nf(cfg, ang, rng, theta_th=args.theta_th) if rng else rolloff_aware_ff(cfg, ang)
    elif scheme == "surrogate":
        design = (
            design_nf(cfg, ang, rng, theta_th=args.theta_th, protective_zoom=False)
            if rng
            else surrogate_ff(cfg, ang)
        )
    elif scheme == "dft":
        design = dft_design(cfg, ang)
    elif scheme == "sampling":
        result = sampling_design(cfg, ang, rng, _sampling_config(args))
        design = result.weights
        convergence = result.converged
    elif scheme == "analog":
        design = analog_lfm_design(cfg, ang)
    elif scheme == "large-angle":
        if rng is None:
            raise ValueError("the large-angle scheme needs a near-field range region")
        design = large_angle_design(cfg, ang, rng, theta_th=args.theta_th)
    elif scheme == "multi-region":
        if not args.regions:
            raise ValueError("the multi-region scheme needs --regions lo:hi,lo:hi,...")
        regions = _parse_region_list(args.regions)
        betas = [float(b) for b in args.betas.split(",")] if args.betas else None
        design = multi_region_ff(cfg, MultiRegionSpec(tuple(regions), tuple(betas) if betas else None))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown scheme {scheme!r}")
    runtime_ms = (time.perf_counter() - start) * 1e3

    if scheme == "multi-region":
        worsts = [worst_case_gain(cfg, design, r, None, args.ppb) for r in _parse_region_list(args.regions)]
        gamma = min(rep.worst_case_gain for rep in worsts)
    else:
        gamma = worst_case_gain(cfg, design, ang, rng, args.ppb).worst_case_gain
    gamma_db = 20.0 * np.log10(gamma) if gamma > 0 else float("-inf")

    write_weights(args.out, design)
    scenario = ScenarioSpec(
        command="design",
        field_mode=args.mode,
        num_antennas=args.n,
        carrier_freq_ghz=args.f_ghz,
        tx_power_w=args.p_t,
        theta_min=lo,
        theta_max=hi,
        xi_min=rng.xi_min if rng else None,
        xi_max=rng.xi_max if rng else None,
        scheme=scheme,
        num_samples=args.s if scheme == "sampling" else None,
        max_iters=args.iters if scheme == "sampling" else None,
        tolerance=args.eps if scheme == "sampling" else None,
        theta_th=args.theta_th,
        points_per_beamwidth=args.ppb,
        degrees_input=args.degrees,
        regions=args.regions,
        betas=args.betas,
        out=args.out,
        report=args.report,
    )
    results = {
        "gamma_linear": gamma,
        "gamma_db": gamma_db,
        "runtime_ms": runtime_ms,
        "power_check": float(np.linalg.norm(design.weights) ** 2),
    }
    if convergence is not None:
        results["converged"] = convergence
    if args.report:
        write_report(args.report, scenario, results)
    print(f"scheme={scheme} gamma_db={gamma_db:.4f} runtime_ms={runtime_ms:.4f}")
    return 0


def _run_evaluate(args):
    cfg = build_array(args.n, args.f_ghz * 1e9, args.p_t)
    lo, hi = _angles(args)
    if not lo < hi:
        raise ValueError(f"theta_min must be below theta_max, got [{lo}, {hi}]")
    weights = read_weights(args.weights)
    theta_axis = np.linspace(lo, hi, args.theta_points)
    if args.mode == "near":
        rng = _range_region(args)
        xi_axis = np.linspace(rng.xi_min, rng.xi_max, args.xi_points)
    else:
        xi_axis = np.array([0.0])
    grid = pattern_grid(cfg, weights, theta_axis, xi_axis)
    write_pattern(args.out, grid)
    gmin = float(grid.gains.min())
    gmin_db = 20.0 * np.log10(gmin) if gmin > 0 else float("-inf")
    scenario = ScenarioSpec(
        command="evaluate",
        field_mode=args.mode,
        num_antennas=args.n,
        carrier_freq_ghz=args.f_ghz,
        tx_power_w=args.p_t,
        theta_min=lo,
        theta_max=hi,
        xi_min=float(xi_axis[0]) if args.mode == "near" else None,
        xi_max=float(xi_axis[-1]) if args.mode == "near" else None,
        degrees_input=args.degrees,
        out=args.out,
        report=args.report,
    )
    if args.report:
        write_report(args.report, scenario, {"grid_min_gain": gmin, "grid_min_gain_db": gmin_db})
    print(f"scheme=evaluate gamma_db={gmin_db:.4f} points={grid.gains.size}")
    return 0


def _run_benchmark(args):
    cfg = build_array(args.n, args.f_ghz * 1e9, args.p_t)
    lo, hi = _angles(args)
    ang = AngularRegion(lo, hi)
    rng = _range_region(args) if args.mode == "near" else None
    schemes = [s.strip() for s in args.schemes.split(",") if s.strip()]
    reports = benchmark(
        cfg,
        ang,
        rng,
        schemes,
        repeats=args.repeats,
        sampling=_sampling_config(args),
        theta_th=args.theta_th,
        points_per_beamwidth=args.ppb,
    )
    scenario = ScenarioSpec(
        command="benchmark",
        field_mode=args.mode,
        num_antennas=args.n,
        carrier_freq_ghz=args.f_ghz,
        tx_power_w=args.p_t,
        theta_min=lo,
        theta_max=hi,
        xi_min=rng.xi_min if rng else None,
        xi_max=rng.xi_max if rng else None,
        schemes=",".join(schemes),
        num_samples=args.s,
        max_iters=args.iters,
        tolerance=args.eps,
        theta_th=args.theta_th,
        points_per_beamwidth=args.ppb,
        degrees_input=args.degrees,
        repeats=args.repeats,
        out=args.out,
        report=args.report,
    )
    results = {}
    for rep in reports:
        results[f"{rep.scheme}.gamma_db"] = rep.worst_case_gain_db
        results[f"{rep.scheme}.runtime_ms"] = rep.runtime_ms
        if rep.convergence_flag is not None:
            results[f"{rep.scheme}.converged"] = rep.convergence_flag
        print(
            f"scheme={rep.scheme} gamma_db={rep.worst_case_gain_db:.4f} "
            f"runtime_ms={rep.runtime_ms:.4f}"
        )
    target = args.report or args.out
    if target:
        write_report(target, scenario, results)
    return 0


def _run_rolloff(args):
    cfg = build_array(args.n, args.f_ghz * 1e9, args.p_t)
    if not args.mu > 2.0 / args.n:
        raise ValueError(f"mu must exceed 2/N = {2.0 / args.n:.4g}, got {args.mu}")
    dthetas = np.linspace(-args.dtheta_max, args.dtheta_max, args.points)
    with open(_out_path(args.out), "w") as fh:
        fh.write("dtheta,gain_quadrature,gain_model\n")
        for dt in dthetas:
            gq = unconstrained_gain_ff(cfg, args.mu, dt)
            gm = rolloff_approx(args.n, args.mu, dt)
            fh.write(f"{_FMT.format(dt)},{_FMT.format(gq)},{_FMT.format(gm)}\n")
    print(f"scheme=rolloff points={args.points} out={args.out}")
    return 0


def _run_defocus(args):
    cfg = build_array(args.n, args.f_ghz * 1e9, args.p_t)
    if args.r_min is None or args.r_max is None or args.r_min <= 0 or args.r_max <= 0:
        raise ValueError("defocus needs positive --r-min/--r-max")
    if not abs(args.theta0) <= 1 or args.xi0 < 0:
        raise ValueError("reference point needs |theta0| <= 1 and xi0 >= 0")
    coeffs = taylor_coeffs(cfg, args.theta0, args.xi0)
    taper = np.sinc(2.0 * args.mu * coeffs.zeta_theta / cfg.wavelength)
    ref = nf_csv(cfg, SpatialPoint(args.theta0, args.xi0))
    w_unit = ref * taper  # alpha = 1 angle-only design
    ranges = np.linspace(args.r_min, args.r_max, args.points)
    with open(_out_path(args.out), "w") as fh:
        fh.write("range_m,xi,gain_closed_form,gain_direct\n")
        for r in ranges:
            xi = 1.0 / r
            d_xi = xi - args.xi0
            gcf = range_gain_closed_form(cfg, args.theta0, args.xi0, args.mu, d_xi)
            gd = abs(np.vdot(nf_csv(cfg, SpatialPoint(args.theta0, xi)), w_unit))
            fh.write(f"{_FMT.format(r)},{_FMT.format(xi)},{_FMT.format(gcf)},{_FMT.format(gd)}\n")
    print(f"scheme=defocus points={args.points} out={args.out}")
    return 0


def _add_array_args(parser):
    parser.add_argument("--n", type=int, required=True, help="number of antennas")
    parser.add_argument("--f-ghz", type=float, default=30.0, help="carrier frequency in GHz")
    parser.add_argument("--p-t", type=float, default=1.0, help="transmit power in watts")


def _add_region_args(parser):
    parser.add_argument("--theta-min", type=float, required=True)
    parser.add_argument("--theta-max", type=float, required=True)
    parser.add_argument(
        "--degrees", action="store_true", help="interpret angle bounds as physical degrees"
    )
    parser.add_argument("--r-min", type=float, default=None, help="nearest target range, m")
    parser.add_argument("--r-max", type=float, default=None, help="farthest target range, m")
    parser.add_argument("--xi-min", type=float, default=None, help="min inverse range, 1/m")
    parser.add_argument("--xi-max", type=float, default=None, help="max inverse range, 1/m")


def _add_scheme_args(parser):
    parser.add_argument("--s", type=int, default=20, help="samples per dimension (sampling)")
    parser.add_argument("--iters", type=int, default=200, help="max iterations (sampling)")
    parser.add_argument("--eps", type=float, default=None, help="convergence tolerance (sampling)")
    parser.add_argument("--theta-th", type=float, default=0.2, help="linearization threshold")
    parser.add_argument("--ppb", type=int, default=8, help="grid points per resolution cell")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="beamcov",
        description="Closed-form beam coverage synthesis for far- and near-field ULAs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_design = sub.add_parser("design", help="synthesize a weight vector")
    p_design.add_argument("--mode", choices=("far", "near"), required=True)
    _add_array_args(p_design)
    _add_region_args(p_design)
    _add_scheme_args(p_design)
    p_design.add_argument("--scheme", choices=SCHEMES, default="proposed")
    p_design.add_argument("--regions", default=None, help="multi-region list lo:hi,lo:hi,...")
    p_design.add_argument("--betas", default=None, help="multi-region coefficients b1,b2,...")
    p_design.add_argument("--out", required=True, help="weights CSV path")
    p_design.add_argument("--report", default=None, help="report path")
    p_design.set_defaults(func=_run_design)

    p_eval = sub.add_parser("evaluate", help="evaluate a weights file on a gain grid")
    p_eval.add_argument("--mode", choices=("far", "near"), required=True)
    _add_array_args(p_eval)
    _add_region_args(p_eval)
    p_eval.add_argument("--weights", required=True, help="weights CSV to evaluate")
    p_eval.add_argument("--theta-points", type=int, default=501)
    p_eval.add_argument("--xi-points", type=int, default=41)
    p_eval.add_argument("--out", required=True, help="pattern CSV path")
    p_eval.add_argument("--report", default=None)
    p_eval.set_defaults(func=_run_evaluate)

    p_bench = sub.add_parser("benchmark", help="compare schemes on one scenario")
    p_bench.add_argument("--mode", choices=("far", "near"), required=True)
    _add_array_args(p_bench)
    _add_region_args(p_bench)
    _add_scheme_args(p_bench)
    p_bench.add_argument("--schemes", default="proposed,sampling,dft")
    p_bench.add_argument("--repeats", type=int, default=5)
    p_bench.add_argument("--out", default=None, help="report path")
    p_bench.add_argument("--report", default=None, help="alias for --out")
    p_bench.set_defaults(func=_run_benchmark)

    p_roll = sub.add_parser("rolloff", help="edge roll-off curves (model vs quadrature)")
    _add_array_args(p_roll)
    p_roll.add_argument("--mu", type=float, required=True, help="angular half-width")
    p_roll.add_argument("--dtheta-max", type=float, default=0.5)
    p_roll.add_argument("--points", type=int, default=501)
    p_roll.add_argument("--out", required=True)
    p_roll.set_defaults(func=_run_rolloff)

    p_def = sub.add_parser("defocus", help="range-defocusing curves (model vs direct sum)")
    _add_array_args(p_def)
    p_def.add_argument("--theta0", type=float, default=0.0)
    p_def.add_argument("--xi0", type=float, required=True, help="reference inverse range, 1/m")
    p_def.add_argument("--mu", type=float, required=True, help="angular half-width")
    p_def.add_argument("--r-min", type=float, required=True)
    p_def.add_argument("--r-max", type=float, required=True)
    p_def.add_argument("--points", type=int, default=121)
    p_def.add_argument("--out", required=True)
    p_def.set_defaults(func=_run_defocus)

    return parser


def run(argv) -> int:
    """Parse and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on malformed arguments
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always", RuntimeWarning)
            return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():  # pragma: no cover - thin wrapper
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":  # pragma: no cover
    main()
