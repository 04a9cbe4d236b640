"""Plancherel diagrams, descent kernels and variance experiments."""

from planchlab._core import (  # noqa: F401
    BesselTable,
    ContourGrid,
    DescentWindow,
    DppWindowSampler,
    KernelSpec,
    McReport,
    MomentSummary,
    Partition,
    PatternSpec,
    PlanchError,
    VarianceBreakdown,
    bessel_kernel,
    bessel_row,
    contour_kernel_oracle,
    correlation,
    descent,
    descent_window,
    deviation_F,
    difference_window_variance,
    dimension,
    dpp_window_sample,
    edge_cutoff,
    enumerate_partitions,
    fit_log_slope,
    ks_normal,
    make_partition,
    mc_linear_statistic,
    omega,
    pattern_covariance,
    pattern_expectation,
    pattern_variance_density,
    pattern_window_variance,
    plancherel_prob,
    poissonized_prob,
    poissonized_variance,
    predicted_log_variance,
    profile_phi,
    rsk_shape,
    sample_plancherel,
    sine_kernel,
    summarize,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
