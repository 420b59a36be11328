from .small_world import (
    SmallWorldEstimate,
    random_reference,
    lattice_reference,
    small_world,
    omega,
)
from .powerlaw import (
    PowerLawFit,
    powerlaw_alpha,
    discrete_alpha_mle,
    approximate_alpha,
    ks_distance,
)
from .topology_report import TopologyReport, topology_report

__all__ = [
    "SmallWorldEstimate",
    "random_reference",
    "lattice_reference",
    "small_world",
    "omega",
    "PowerLawFit",
    "powerlaw_alpha",
    "discrete_alpha_mle",
    "approximate_alpha",
    "ks_distance",
    "TopologyReport",
    "topology_report",
]
