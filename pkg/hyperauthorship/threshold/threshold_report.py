from dataclasses import asdict, dataclass
from typing import Literal

ThresholdMethod = Literal["empirical", "chebyshev"]


@dataclass(frozen=True)
class ThresholdReport:
    is_normal: bool
    empirical_cutoff: float | None
    chebyshev_cutoff: float | None
    cumulative_cutoff: int
    cumulative_coverage: float
    recommended_cutoff: int
    method_used: ThresholdMethod
    coverage_target: float
    k: float
    skewness: float
    n: int
    mean: float
    median: float
    sd: float
    minimum: int
    maximum: int

    @property
    def dispersion_cutoff(self) -> float:
        """The populated one of empirical_cutoff / chebyshev_cutoff."""
        value = self.empirical_cutoff if self.method_used == "empirical" else self.chebyshev_cutoff
        assert value is not None
        return value

    def to_dict(self) -> dict:
        return asdict(self)

    def summary_lines(self) -> list[str]:
        """Human readable summary table for the terminal."""
        rows = [
            ("papers", f"{self.n}"),
            ("authors per paper", f"{self.minimum}-{self.maximum}"),
            ("mean / median / sd", f"{self.mean:.2f} / {self.median:g} / {self.sd:.2f}"),
            ("skewness", f"{self.skewness:.3f}"),
            ("normal", "yes" if self.is_normal else "no"),
            (f"{self.method_used} cutoff", f"{self.dispersion_cutoff:.2f}"),
            (
                f"cumulative cutoff ({self.coverage_target:.0%})",
                f"{self.cumulative_cutoff} (covers {self.cumulative_coverage:.1%})",
            ),
            ("recommended cutoff", f"{self.recommended_cutoff}"),
        ]
        width = max(len(label) for label, _ in rows)
        return [f"{label.ljust(width)}  {value}" for label, value in rows]
