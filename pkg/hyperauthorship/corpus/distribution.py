import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, TypedDict

import numpy as np
from scipy.stats import skew


class LogBin(TypedDict):
    bin_low: float
    bin_high: float
    count: int
    density: float


@dataclass(frozen=True)
class AuthorCountDistribution:
    histogram: dict[int, int]
    n: int
    mean: float
    median: float
    sd: float
    skewness: float
    minimum: int
    maximum: int

    @classmethod
    def from_counts(cls, counts: Iterable[int]) -> "AuthorCountDistribution":
        """
        Summarise a list of authors-per-paper counts.

        sd uses the n - 1 denominator and is 0 for a single observation. skewness is the sample
        skewness g1, defined as 0 when the variance vanishes.
        """
        tally = Counter(int(c) for c in counts)
        if not tally:
            raise ValueError("Cannot summarise an empty list of author counts.")
        if min(tally) < 1:
            raise ValueError("Author counts must be at least 1.")

        histogram = dict(sorted(tally.items()))
        values = np.repeat(
            np.fromiter(histogram.keys(), dtype=np.float64),
            np.fromiter(histogram.values(), dtype=np.int64),
        )
        n = int(values.size)

        sd = float(np.std(values, ddof=1)) if n > 1 else 0.0
        skewness = float(skew(values, bias=True)) if sd > 0 else 0.0

        return cls(
            histogram=histogram,
            n=n,
            mean=float(np.mean(values)),
            median=float(np.median(values)),
            sd=sd,
            skewness=skewness,
            minimum=min(histogram),
            maximum=max(histogram),
        )

    def values(self) -> np.ndarray:
        """The expanded observations, one entry per paper, in ascending order."""
        return np.repeat(
            np.fromiter(self.histogram.keys(), dtype=np.int64),
            np.fromiter(self.histogram.values(), dtype=np.int64),
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "mean": self.mean,
            "median": self.median,
            "sd": self.sd,
            "skewness": self.skewness,
            "min": self.minimum,
            "max": self.maximum,
        }


def log_binned(values: Iterable[int], n_bins: int = 20) -> list[LogBin]:
    """
    Logarithmically binned counts of positive integers, the data behind a log-log distribution plot.

    Zeros (isolated authors) cannot sit on a log axis and are left out.
    """
    data = np.fromiter((v for v in values if v > 0), dtype=np.float64)
    if data.size == 0:
        return []

    upper = math.log10(float(data.max()) + 1.0)
    edges = np.logspace(0.0, upper, n_bins + 1)
    counts, _ = np.histogram(data, bins=edges)
    widths = np.diff(edges)

    bins: list[LogBin] = []
    for low, high, count, width in zip(edges[:-1], edges[1:], counts, widths):
        bins.append(
            LogBin(
                bin_low=float(low),
                bin_high=float(high),
                count=int(count),
                density=float(count / (width * data.size)),
            )
        )
    return bins
