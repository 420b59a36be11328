from .threshold_report import ThresholdReport, ThresholdMethod
from .rules import (
    CumulativePoint,
    normality_check,
    empirical_rule_cutoff,
    chebyshev_cutoff,
    cumulative_cutoff,
    cumulative_curve,
    reconcile,
    select_threshold,
)

__all__ = [
    "ThresholdReport",
    "ThresholdMethod",
    "CumulativePoint",
    "normality_check",
    "empirical_rule_cutoff",
    "chebyshev_cutoff",
    "cumulative_cutoff",
    "cumulative_curve",
    "reconcile",
    "select_threshold",
]
