import math
from dataclasses import dataclass, field
from pathlib import Path

from ..config import config
from ..corpus import CorpusFormat
from ..errors import ConfigurationError
from ..projection import Scheme, SCHEMES


@dataclass(frozen=True)
class RunConfig:
    input: Path | None
    out: Path
    format: CorpusFormat = "long-csv"
    coverage: float = field(default_factory=lambda: config.coverage)
    # math.inf keeps every paper
    cutoff: float | None = None
    schemes: tuple[Scheme, ...] = SCHEMES
    betweenness_sample: int = field(default_factory=lambda: config.betweenness_sample_size)
    omega_niter: int = field(default_factory=lambda: config.omega_niter)
    omega_nrand: int = field(default_factory=lambda: config.omega_nrand)
    omega_max_nodes: int = field(default_factory=lambda: config.omega_max_nodes)
    seed: int | None = None
    jobs: int = field(default_factory=lambda: config.n_jobs)
    quantile: float = field(default_factory=lambda: config.case_study_quantile)
    egos: tuple[str, ...] = ()
    auto_grid: bool = False

    def __post_init__(self):
        if not 0 < self.coverage < 1:
            raise ConfigurationError(f"--coverage must be in (0, 1), got {self.coverage}.")
        if self.cutoff is not None and (math.isnan(self.cutoff) or self.cutoff < 1):
            raise ConfigurationError(f"--cutoff must be at least 1, got {self.cutoff}.")
        if self.cutoff is not None and not math.isinf(self.cutoff) and self.cutoff != int(self.cutoff):
            raise ConfigurationError(f"--cutoff must be an integer or inf, got {self.cutoff}.")
        if not self.schemes:
            raise ConfigurationError("--schemes must name at least one weighting scheme.")
        for scheme in self.schemes:
            if scheme not in SCHEMES:
                raise ConfigurationError(
                    f"Unknown scheme {scheme!r}; choose from {', '.join(SCHEMES)}."
                )
        if len(set(self.schemes)) != len(self.schemes):
            raise ConfigurationError(f"--schemes lists a scheme twice: {','.join(self.schemes)}.")
        for name in ("betweenness_sample", "omega_niter", "omega_nrand", "omega_max_nodes", "jobs"):
            if getattr(self, name) < 1:
                raise ConfigurationError(f"--{name.replace('_', '-')} must be at least 1.")
        if not 0 < self.quantile <= 1:
            raise ConfigurationError(f"--quantile must be in (0, 1], got {self.quantile}.")
        if self.seed is not None and self.seed < 0:
            raise ConfigurationError(f"--seed must be non-negative, got {self.seed}.")

    def require_seed(self) -> int:
        """The master seed; every command that samples or rewires needs one."""
        if self.seed is None:
            raise ConfigurationError("This command samples or rewires; pass --seed.")
        return self.seed

    def require_input(self) -> Path:
        if self.input is None:
            raise ConfigurationError("Pass --input.")
        return self.input

    @property
    def ordered_schemes(self) -> tuple[Scheme, ...]:
        """Requested schemes in canonical order, so output never depends on flag order."""
        return tuple(scheme for scheme in SCHEMES if scheme in self.schemes)

    def parameters(self) -> dict:
        """The settings that shape every metric, recorded with each network's results."""
        return {
            "schemes": list(self.ordered_schemes),
            "betweenness_sample": self.betweenness_sample,
            "omega_niter": self.omega_niter,
            "omega_nrand": self.omega_nrand,
            "omega_max_nodes": self.omega_max_nodes,
            "seed": self.seed,
        }
