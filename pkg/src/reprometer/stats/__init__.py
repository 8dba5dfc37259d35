"""Small-sample precision estimators and the special functions they need."""

from .precision import (
    PrecisionReport,
    Sample,
    cv,
    cv_star,
    mean,
    precision_report,
    sample_stddev,
    stddev_ci,
    stderr_unbiased_stddev,
    stderr_variance,
    unbiased_stddev,
    within_k_stddev,
)
from .special import c4, t_cdf, t_quantile

__all__ = [
    "PrecisionReport",
    "Sample",
    "c4",
    "cv",
    "cv_star",
    "mean",
    "precision_report",
    "sample_stddev",
    "stddev_ci",
    "stderr_unbiased_stddev",
    "stderr_variance",
    "t_cdf",
    "t_quantile",
    "unbiased_stddev",
    "within_k_stddev",
]
