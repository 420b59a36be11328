import logging
from dataclasses import asdict, dataclass

import numpy as np

from ..config import config
from ..errors import ComputationError
from ..metrics import giant_component
from ..projection import CoauthorGraph
from .powerlaw import powerlaw_alpha
from .small_world import small_world

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TopologyReport:
    omega: float | None
    niter: int
    nrand: int
    seed: int
    clustering: float | None
    path_length: float | None
    random_path_lengths: tuple[float, ...]
    lattice_clusterings: tuple[float, ...]
    omega_note: str | None
    alpha: float | None
    xmin: int | None
    ks_distance: float | None
    n_tail: int
    is_power_law: bool
    alpha_note: str | None = None

    @property
    def omega_params(self) -> tuple[int, int, int]:
        return self.niter, self.nrand, self.seed

    @property
    def random_path_length(self) -> float | None:
        return float(np.mean(self.random_path_lengths)) if self.random_path_lengths else None

    @property
    def lattice_clustering(self) -> float | None:
        return float(np.mean(self.lattice_clusterings)) if self.lattice_clusterings else None

    def to_dict(self) -> dict:
        data = asdict(self)
        data["random_path_lengths"] = list(self.random_path_lengths)
        data["lattice_clusterings"] = list(self.lattice_clusterings)
        data["random_path_length"] = self.random_path_length
        data["lattice_clustering"] = self.lattice_clustering
        return data


def topology_report(
    graph: CoauthorGraph,
    niter: int | None = None,
    nrand: int | None = None,
    seed: int = 0,
    max_nodes: int | None = None,
    n_jobs: int | None = None,
) -> TopologyReport:
    """
    Omega of the giant component and the power-law fit of the degree distribution (authors
    without co-authors left out).

    Omega is skipped when the giant component has more than `max_nodes` nodes or when the
    references degenerate; the reason ends up in `omega_note`.
    """
    if niter is None:
        niter = config.omega_niter
    if nrand is None:
        nrand = config.omega_nrand
    if max_nodes is None:
        max_nodes = config.omega_max_nodes

    degrees = [graph.degree(node) for node in graph.nodes if graph.degree(node) > 0]
    fit = None
    alpha_note = None
    try:
        fit = powerlaw_alpha(degrees)
    except ComputationError as error:
        alpha_note = str(error)
        logger.warning("Power-law fit failed: %s", alpha_note)

    giant = giant_component(graph)
    estimate = None
    note = None
    if giant.n_nodes > max_nodes:
        note = f"giant component of {giant.n_nodes} nodes exceeds omega_max_nodes={max_nodes}"
        logger.info("Skipping omega: %s", note)
    else:
        try:
            estimate = small_world(giant, niter, nrand, seed, n_jobs)
        except ComputationError as error:
            note = str(error)
            logger.warning("Omega not computed: %s", note)

    return TopologyReport(
        omega=estimate.omega if estimate else None,
        niter=niter,
        nrand=nrand,
        seed=seed,
        clustering=estimate.clustering if estimate else None,
        path_length=estimate.path_length if estimate else None,
        random_path_lengths=estimate.random_path_lengths if estimate else (),
        lattice_clusterings=estimate.lattice_clusterings if estimate else (),
        omega_note=note,
        alpha=fit.alpha if fit else None,
        xmin=fit.xmin if fit else None,
        ks_distance=fit.ks_distance if fit else None,
        n_tail=fit.n_tail if fit else 0,
        is_power_law=fit.is_power_law if fit else False,
        alpha_note=alpha_note,
    )
