import logging
import math
from typing import TypedDict

from ..config import config
from ..corpus import AuthorCountDistribution
from ..errors import InsufficientDataError, InvalidParameterError
from .threshold_report import ThresholdReport

logger = logging.getLogger(__name__)


class CumulativePoint(TypedDict):
    authors: int
    papers: int
    cumulative_fraction: float


def normality_check(
    distribution: AuthorCountDistribution, skew_limit: float | None = None
) -> bool:
    """True when |sample skewness| <= skew_limit (0.5 by default)."""
    if skew_limit is None:
        skew_limit = config.normality_skew_limit
    if distribution.n < 3:
        raise InsufficientDataError(
            f"A normality check needs at least 3 papers, got {distribution.n}."
        )
    return abs(distribution.skewness) <= skew_limit


def empirical_rule_cutoff(distribution: AuthorCountDistribution) -> float:
    """Upper bound two standard deviations above the mean. Degenerates to the mean when sd is 0."""
    return distribution.mean + 2.0 * distribution.sd


def chebyshev_cutoff(distribution: AuthorCountDistribution, k: float | None = None) -> float:
    """One-sided Chebyshev upper bound mean + k * sd."""
    if k is None:
        k = config.chebyshev_k
    if k <= 1:
        raise InvalidParameterError(f"Chebyshev's k must be greater than 1, got {k}.")
    return distribution.mean + k * distribution.sd


def cumulative_cutoff(
    distribution: AuthorCountDistribution, coverage: float | None = None
) -> tuple[int, float]:
    """
    Smallest author count a such that the share of papers with at most a authors reaches coverage.

    Returns the cutoff and the share it actually covers.
    """
    if coverage is None:
        coverage = config.coverage
    if not 0 < coverage < 1:
        raise InvalidParameterError(f"Coverage must lie strictly between 0 and 1, got {coverage}.")

    running = 0
    for authors, papers in distribution.histogram.items():
        running += papers
        achieved = running / distribution.n
        if achieved >= coverage:
            return authors, achieved

    # Unreachable: the last bin always covers every paper.
    return distribution.maximum, 1.0


def cumulative_curve(distribution: AuthorCountDistribution) -> list[CumulativePoint]:
    running = 0
    curve: list[CumulativePoint] = []
    for authors, papers in distribution.histogram.items():
        running += papers
        curve.append(
            CumulativePoint(
                authors=authors, papers=papers, cumulative_fraction=running / distribution.n
            )
        )
    return curve


def reconcile(dispersion_cutoff: float, cumulative: int, tolerance: int | None = None) -> int:
    """
    Cross-validate the two cutoffs: keep the cumulative one when the floored dispersion cutoff is
    within `tolerance` of it, otherwise take the smaller of the two. Never below 1.
    """
    if tolerance is None:
        tolerance = config.reconcile_tolerance
    floored = math.floor(dispersion_cutoff)
    if abs(floored - cumulative) <= tolerance:
        chosen = cumulative
    else:
        chosen = min(floored, cumulative)
    return max(chosen, 1)


def select_threshold(
    distribution: AuthorCountDistribution,
    coverage: float | None = None,
    k: float | None = None,
) -> ThresholdReport:
    """
    Run the cutoff decision procedure: normality check, then the empirical rule for normal data or
    Chebyshev's inequality otherwise, cross-validated against the cumulative frequency cutoff.
    """
    if coverage is None:
        coverage = config.coverage
    if k is None:
        k = config.chebyshev_k

    is_normal = normality_check(distribution)
    empirical = empirical_rule_cutoff(distribution) if is_normal else None
    chebyshev = None if is_normal else chebyshev_cutoff(distribution, k)
    dispersion = empirical if empirical is not None else chebyshev
    assert dispersion is not None

    cumulative, achieved = cumulative_cutoff(distribution, coverage)
    recommended = reconcile(dispersion, cumulative)

    method = "empirical" if is_normal else "chebyshev"
    logger.info(
        "Threshold: %s cutoff %.2f, cumulative cutoff %d (%.3f), recommended %d",
        method,
        dispersion,
        cumulative,
        achieved,
        recommended,
    )

    return ThresholdReport(
        is_normal=is_normal,
        empirical_cutoff=empirical,
        chebyshev_cutoff=chebyshev,
        cumulative_cutoff=cumulative,
        cumulative_coverage=achieved,
        recommended_cutoff=recommended,
        method_used=method,
        coverage_target=coverage,
        k=k,
        skewness=distribution.skewness,
        n=distribution.n,
        mean=distribution.mean,
        median=distribution.median,
        sd=distribution.sd,
        minimum=distribution.minimum,
        maximum=distribution.maximum,
    )
