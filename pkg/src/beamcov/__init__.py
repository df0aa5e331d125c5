"""Closed-form beam coverage synthesis for far-field and near-field ULAs."""

from .baselines import SamplingConfig, SamplingResult, dft_codewords, dft_design, sampling_design
from .composite import (
    AnalogParams,
    MultiRegionSpec,
    analog_lfm_design,
    analog_params,
    large_angle_design,
    multi_region_ff,
    partition_large_angle,
)
from .evaluator import DesignReport, GainGrid, benchmark, pattern_grid, worst_case_gain
from .ff_design import (
    AngularRegion,
    BeamWeights,
    WeightShape,
    rolloff_approx,
    rolloff_aware_ff,
    shaping_sequence,
    surrogate_ff,
    unconstrained_gain_ff,
)
from .geometry import SPEED_OF_LIGHT, ArrayConfig, build_array
from .nf_design import RangeRegion, design_nf, range_gain_closed_form
from .special import (
    FresnelKernelParams,
    fresnel_c,
    fresnel_s,
    generalized_fresnel_I,
    si,
    sinc,
)
from .steering import (
    SpatialPoint,
    TaylorCoefficients,
    ff_csv,
    gain,
    gain_loss,
    nf_csv,
    nf_csv_approx,
    nf_csv_exact,
    taylor_coeffs,
)

__all__ = [
    "SPEED_OF_LIGHT",
    "AnalogParams",
    "AngularRegion",
    "ArrayConfig",
    "BeamWeights",
    "DesignReport",
    "FresnelKernelParams",
    "GainGrid",
    "MultiRegionSpec",
    "RangeRegion",
    "SamplingConfig",
    "SamplingResult",
    "SpatialPoint",
    "TaylorCoefficients",
    "WeightShape",
    "analog_lfm_design",
    "analog_params",
    "benchmark",
    "build_array",
    "design_nf",
    "dft_codewords",
    "dft_design",
    "ff_csv",
    "fresnel_c",
    "fresnel_s",
    "gain",
    "gain_loss",
    "generalized_fresnel_I",
    "large_angle_design",
    "multi_region_ff",
    "nf_csv",
    "nf_csv_approx",
    "nf_csv_exact",
    "partition_large_angle",
    "pattern_grid",
    "range_gain_closed_form",
    "rolloff_approx",
    "rolloff_aware_ff",
    "sampling_design",
    "shaping_sequence",
    "si",
    "sinc",
    "surrogate_ff",
    "taylor_coeffs",
    "unconstrained_gain_ff",
    "worst_case_gain",
]

__version__ = "0.1.0"
