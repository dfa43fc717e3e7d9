"""Intrinsic dimension estimation with curvature-adjusted local PCA."""

from ._core import (
    DegenerateNeighborhood,
    EigenSpectrum,
    Error,
    InvalidArgument,
    IoError,
    Neighborhood,
    ParseError,
    PointCloud,
    ResampleLimitExceeded,
    SweepResult,
    SweepRow,
    analytic,
    capca_estimate,
    capca_objective,
    curvature_coefficients,
    estimate_at_point,
    knn,
    lb_estimate,
    load_csv,
    local_spectrum,
    pca_estimate,
    pca_misfit,
    reference_spectrum,
    run_sweep,
    sample,
    save_csv,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
