import logging
from typing import Iterable, NamedTuple

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import zeta

from ..config import config
from ..errors import FittingError, InsufficientDataError, InvalidParameterError

logger = logging.getLogger(__name__)

MIN_OBSERVATIONS = 10
ALPHA_BOUNDS = (1.0001, 50.0)


class PowerLawFit(NamedTuple):
    alpha: float
    xmin: int
    ks_distance: float
    n_tail: int

    @property
    def is_power_law(self) -> bool:
        """The conventional 2 <= alpha <= 3 band; not a goodness-of-fit test."""
        return 2.0 <= self.alpha <= 3.0


def _as_observations(values: Iterable[int]) -> np.ndarray:
    observations = np.asarray(list(values), dtype=np.int64)
    if observations.size and observations.min() < 1:
        raise InvalidParameterError(
            f"Power-law observations must be positive integers, got {observations.min()}."
        )
    return observations


def discrete_alpha_mle(tail: Iterable[int], xmin: int) -> float:
    """
    Maximum-likelihood exponent of a discrete power law p(x) = x^-alpha / zeta(alpha, xmin)
    for observations x >= xmin.
    """
    x = _as_observations(tail)
    x = x[x >= xmin]
    if x.size < 2:
        raise FittingError(f"Need at least 2 observations >= {xmin}, got {x.size}.")

    n = x.size
    log_sum = float(np.log(x).sum())

    def negative_log_likelihood(alpha: float) -> float:
        return n * np.log(zeta(alpha, xmin)) + alpha * log_sum

    result = minimize_scalar(
        negative_log_likelihood, bounds=ALPHA_BOUNDS, method="bounded", options={"xatol": 1e-7}
    )
    return float(result.x)


def approximate_alpha(tail: Iterable[int], xmin: int) -> float:
    """Closed form 1 + n / sum(ln(x / (xmin - 1/2))); close to the MLE once xmin is above ~6."""
    x = _as_observations(tail)
    x = x[x >= xmin]
    if x.size == 0:
        raise FittingError(f"No observations >= {xmin}.")
    return float(1.0 + x.size / np.log(x / (xmin - 0.5)).sum())


def ks_distance(tail: Iterable[int], xmin: int, alpha: float) -> float:
    """
    Largest gap between the empirical and fitted CDFs over x >= xmin. Both are step functions on
    the integers, so checking each observed value and the integer just before the next one covers
    the supremum.
    """
    x = _as_observations(tail)
    x = x[x >= xmin]
    values, counts = np.unique(x, return_counts=True)
    empirical = np.cumsum(counts) / x.size

    normaliser = zeta(alpha, xmin)

    def model_cdf(points: np.ndarray) -> np.ndarray:
        return 1.0 - zeta(alpha, points + 1.0) / normaliser

    gaps = np.abs(empirical - model_cdf(values.astype(np.float64)))
    if values.size > 1:
        before_next = values[1:].astype(np.float64) - 1.0
        gaps = np.concatenate([gaps, np.abs(empirical[:-1] - model_cdf(before_next))])
    return float(gaps.max())


def powerlaw_alpha(values: Iterable[int], xmin_quantile: float | None = None) -> PowerLawFit:
    """
    Fit a discrete power law to the tail of the observations.

    Every distinct value up to the `xmin_quantile` quantile is tried as xmin; the one whose fitted
    tail has the smallest KS distance wins, ties going to the smaller xmin.
    """
    if xmin_quantile is None:
        xmin_quantile = config.powerlaw_xmin_quantile

    x = _as_observations(values)
    if x.size < MIN_OBSERVATIONS:
        raise InsufficientDataError(
            f"Power-law fitting needs at least {MIN_OBSERVATIONS} observations, got {x.size}."
        )
    if x.min() == x.max():
        raise FittingError(f"All {x.size} observations equal {x.min()}; no exponent can be fitted.")

    x = np.sort(x)
    cap = np.quantile(x, xmin_quantile)
    candidates = np.unique(x[x <= cap])

    best: PowerLawFit | None = None
    for xmin in candidates:
        tail = x[x >= xmin]
        if tail[0] == tail[-1]:
            continue
        alpha = discrete_alpha_mle(tail, int(xmin))
        distance = ks_distance(tail, int(xmin), alpha)
        if best is None or distance < best.ks_distance:
            best = PowerLawFit(alpha, int(xmin), distance, int(tail.size))

    if best is None:
        raise FittingError("No candidate xmin leaves a tail with more than one distinct value.")

    logger.debug("Power-law fit: alpha=%.4f xmin=%d ks=%.4f", best.alpha, best.xmin, best.ks_distance)
    return best
