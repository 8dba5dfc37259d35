"""Special functions behind the small-sample estimators.

c4(n) is evaluated in log space from the log-gamma function so it stays
finite for very large n. The Student-t CDF is expressed through the
regularized incomplete beta function and inverted by bracketed root finding.
"""

from __future__ import annotations

import math

from scipy import optimize, special

from reprometer.errors import ErrorCode, StatsError

# brentq absolute tolerance on the quantile
T_QUANTILE_XTOL = 1e-12


def c4(n: int) -> float:
    """Bias-correction constant for the sample standard deviation.

    c4(n) = sqrt(2/(n-1)) * Gamma(n/2) / Gamma((n-1)/2), so that
    E[s] = c4(n) * sigma for normal samples of size n.

    Raises:
        StatsError: INSUFFICIENT_SAMPLE if n < 2.
    """
    if n < 2:
        raise StatsError(ErrorCode.INSUFFICIENT_SAMPLE, f"c4 needs n >= 2, got {n}")
    log_c4 = 0.5 * math.log(2.0 / (n - 1)) + special.gammaln(n / 2.0) - special.gammaln(
        (n - 1) / 2.0
    )
    return float(math.exp(log_c4))


def t_cdf(x: float, df: int) -> float:
    """Student-t cumulative distribution function."""
    tail = 0.5 * float(special.betainc(df / 2.0, 0.5, df / (df + x * x)))
    return 1.0 - tail if x >= 0 else tail


def t_quantile(df: int, p: float) -> float:
    """Inverse CDF of Student's t distribution.

    Args:
        df: Degrees of freedom (>= 1).
        p: Probability in (0, 1).

    Returns:
        x such that t_cdf(x, df) == p.

    Raises:
        StatsError: BAD_PROBABILITY if p is outside (0, 1), INSUFFICIENT_SAMPLE
            if df < 1.
    """
    if not 0.0 < p < 1.0:
        raise StatsError(ErrorCode.BAD_PROBABILITY, f"p must lie in (0, 1), got {p}")
    if df < 1:
        raise StatsError(ErrorCode.INSUFFICIENT_SAMPLE, f"df must be >= 1, got {df}")
    if p == 0.5:
        return 0.0
    if p < 0.5:
        return -t_quantile(df, 1.0 - p)

    def func(x: float) -> float:
        return t_cdf(x, df) - p

    lo = 0.0
    hi = 1.0
    while func(hi) < 0:
        lo = hi
        hi *= 8
    return float(optimize.brentq(func, lo, hi, xtol=T_QUANTILE_XTOL))
