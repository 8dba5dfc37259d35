"""Small-sample precision estimators.

All estimators take a ``Sample`` (or any sequence of floats) and are pure.
The standard-error chain substitutes the Bessel-corrected s for sigma inside
se(s^2) but the unbiased s* in the 1/(2 sigma) factor; this is the pairing
that reproduces the published confidence intervals.
"""

from __future__ import annotations

import logging
import math
import statistics
from collections.abc import Sequence
from dataclasses import dataclass
from decimal import Decimal
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from reprometer import defaults
from reprometer.errors import ErrorCode, Note, NoteCode, Severity, StatsError

from .special import c4, t_quantile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sample:
    """An ordered collection of finite measured quantity values."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        for value in self.values:
            if not math.isfinite(value):
                raise StatsError(ErrorCode.NON_FINITE_VALUE, f"non-finite value {value!r}")

    @classmethod
    def of(cls, values: Sequence[float] | Sample) -> Sample:
        if isinstance(values, Sample):
            return values
        return cls(tuple(float(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.values)

    def decimal_places(self) -> int:
        """Largest number of decimal places among the values."""
        places = 0
        for value in self.values:
            exponent = Decimal(repr(value)).as_tuple().exponent
            if isinstance(exponent, int):
                places = max(places, -exponent)
        return places


class PrecisionReport(BaseModel):
    """Every precision statistic for one sample, at full precision."""

    model_config = ConfigDict(frozen=True)

    n: int
    mean: float
    sample_stddev_s: float
    unbiased_stddev_sstar: float
    stderr_variance: float
    stderr_sstar: float
    ci_level: float
    t_critical: float
    ci_low: float
    ci_high: float
    cv_percent: Optional[float]
    cv_star_percent: Optional[float]
    within_1sd_percent: float
    within_2sd_percent: float
    value_decimals: int = 0
    warnings: list[Note] = Field(default_factory=list)


def _require(sample: Sample, minimum: int) -> None:
    if sample.n == 0:
        raise StatsError(ErrorCode.EMPTY_SAMPLE, "sample is empty")
    if sample.n < minimum:
        raise StatsError(
            ErrorCode.INSUFFICIENT_SAMPLE,
            f"need at least {minimum} values, got {sample.n}",
        )


def _check_level(level: float) -> None:
    if not 0.0 < level < 1.0:
        raise StatsError(ErrorCode.BAD_PROBABILITY, f"level must lie in (0, 1), got {level}")


def mean(sample: Sequence[float] | Sample) -> float:
    """Arithmetic mean."""
    sample = Sample.of(sample)
    _require(sample, 1)
    return statistics.fmean(sample.values)


def sample_stddev(sample: Sequence[float] | Sample) -> float:
    """Bessel-corrected sample standard deviation s."""
    sample = Sample.of(sample)
    _require(sample, 2)
    return statistics.stdev(sample.values)


def unbiased_stddev(sample: Sequence[float] | Sample) -> float:
    """Unbiased standard deviation s* = s / c4(n)."""
    sample = Sample.of(sample)
    return sample_stddev(sample) / c4(sample.n)


def stderr_variance(sample: Sequence[float] | Sample) -> float:
    """Standard error of the sample variance, sqrt(2 s^4 / (n - 1))."""
    sample = Sample.of(sample)
    s = sample_stddev(sample)
    return s * s * math.sqrt(2.0 / (sample.n - 1))


def _stderr_sstar(s: float, sstar: float, n: int) -> float:
    # no s**2 term: finite for every finite s
    return (s / (2.0 * sstar)) * s * math.sqrt(2.0 / (n - 1))


def stderr_unbiased_stddev(sample: Sequence[float] | Sample) -> float:
    """Standard error of s*, se(s^2) / (2 s*).

    Raises:
        StatsError: ZERO_DISPERSION when all values are equal.
    """
    sample = Sample.of(sample)
    sstar = unbiased_stddev(sample)
    if sstar == 0.0:
        raise StatsError(ErrorCode.ZERO_DISPERSION, "standard error undefined for zero dispersion")
    return _stderr_sstar(sample_stddev(sample), sstar, sample.n)


def stddev_ci(
    sample: Sequence[float] | Sample, level: float = defaults.DEFAULT_CI_LEVEL
) -> tuple[float, float]:
    """Two-sided t interval for s*: s* +/- t(n-1, (1+level)/2) * se(s*).

    The lower bound is not clamped at zero. A zero-dispersion sample yields
    the degenerate interval (0, 0).
    """
    sample = Sample.of(sample)
    _check_level(level)
    sstar = unbiased_stddev(sample)
    if sstar == 0.0:
        return (0.0, 0.0)
    half_width = t_quantile(sample.n - 1, 1.0 - (1.0 - level) / 2.0) * stderr_unbiased_stddev(
        sample
    )
    return (sstar - half_width, sstar + half_width)


def cv(sample: Sequence[float] | Sample) -> float:
    """Coefficient of variation as a percentage, 100 * s* / mean.

    Raises:
        StatsError: NONPOSITIVE_MEAN when the mean is <= 0.
    """
    sample = Sample.of(sample)
    sstar = unbiased_stddev(sample)
    m = mean(sample)
    if m <= 0.0:
        raise StatsError(ErrorCode.NONPOSITIVE_MEAN, f"CV undefined for mean {m}")
    return 100.0 * sstar / m


def cv_star(sample: Sequence[float] | Sample) -> float:
    """Small-sample corrected coefficient of variation, (1 + 1/(4n)) * CV."""
    sample = Sample.of(sample)
    return (1.0 + 1.0 / (4.0 * sample.n)) * cv(sample)


def within_k_stddev(sample: Sequence[float] | Sample, k: float) -> float:
    """Percentage of values within k unbiased standard deviations of the mean."""
    sample = Sample.of(sample)
    sstar = unbiased_stddev(sample)
    if sstar == 0.0:
        return 100.0
    m = mean(sample)
    inside = sum(1 for v in sample.values if abs(v - m) <= k * sstar)
    return 100.0 * inside / sample.n


def precision_report(
    sample: Sequence[float] | Sample, level: float = defaults.DEFAULT_CI_LEVEL
) -> PrecisionReport:
    """Assemble all precision statistics for a sample.

    Degenerate situations (n < 3, identical values, negative CI bound,
    non-positive mean) are reported as warnings instead of raising.

    Raises:
        StatsError: For empty or single-value samples and bad levels.
    """
    sample = Sample.of(sample)
    _require(sample, 2)
    _check_level(level)

    warnings: list[Note] = []
    m = mean(sample)
    s = sample_stddev(sample)
    sstar = unbiased_stddev(sample)
    se_var = stderr_variance(sample)
    t_crit = t_quantile(sample.n - 1, 1.0 - (1.0 - level) / 2.0)

    if sample.n < defaults.MIN_RELIABLE_SAMPLE_SIZE:
        warnings.append(
            Note(
                code=NoteCode.SAMPLE_TOO_SMALL,
                message=(
                    f"Sample size {sample.n} is below {defaults.MIN_RELIABLE_SAMPLE_SIZE}; "
                    "CV* still describes the variation in the sample but is a less "
                    "reliable estimate of the population CV."
                ),
            )
        )

    if sstar == 0.0:
        se_sstar = 0.0
        warnings.append(
            Note(
                code=NoteCode.ZERO_DISPERSION,
                message=(
                    "All measured values are identical; the standard deviation is 0 "
                    "and its confidence interval degenerates to (0, 0)."
                ),
            )
        )
    else:
        se_sstar = _stderr_sstar(s, sstar, sample.n)
    ci_low, ci_high = sstar - t_crit * se_sstar, sstar + t_crit * se_sstar
    if sstar == 0.0:
        ci_low, ci_high = 0.0, 0.0

    if ci_low < 0.0:
        warnings.append(
            Note(
                code=NoteCode.NEGATIVE_CI_LOWER,
                message=(
                    f"The lower bound of the {level * 100:g}% CI for the standard deviation "
                    "is negative, an artifact of the normal approximation at very small "
                    "sample sizes."
                ),
            )
        )

    cv_percent: Optional[float] = None
    cv_star_percent: Optional[float] = None
    if m > 0.0:
        cv_percent = 100.0 * sstar / m
        cv_star_percent = (1.0 + 1.0 / (4.0 * sample.n)) * cv_percent
    else:
        warnings.append(
            Note(
                code=NoteCode.NONPOSITIVE_MEAN,
                severity=Severity.ERROR,
                message=f"The mean ({m:g}) is not positive, so CV and CV* are undefined.",
            )
        )

    report = PrecisionReport(
        n=sample.n,
        mean=m,
        sample_stddev_s=s,
        unbiased_stddev_sstar=sstar,
        stderr_variance=se_var,
        stderr_sstar=se_sstar,
        ci_level=level,
        t_critical=t_crit,
        ci_low=ci_low,
        ci_high=ci_high,
        cv_percent=cv_percent,
        cv_star_percent=cv_star_percent,
        within_1sd_percent=within_k_stddev(sample, 1.0),
        within_2sd_percent=within_k_stddev(sample, 2.0),
        value_decimals=sample.decimal_places(),
        warnings=warnings,
    )
    logger.debug("precision report n=%d cv_star=%s", report.n, report.cv_star_percent)
    return report
