import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from ..analysis import (
    ComparisonReport,
    NetworkSuite,
    Ranking,
    Side,
    best_weighting,
    compare_networks,
    ego_centrality_suite,
    ego_profile,
    extract_ego,
    rank_by_degree,
    select_case_studies,
)
from ..config import config
from ..corpus import (
    AuthorCountDistribution,
    Corpus,
    author_count_distribution,
    build_bipartite,
    filter_hyperauthored,
    log_binned,
    read_corpus,
    removed_summary,
    save_corpus,
)
from ..errors import InputError, NotFoundError
from ..metrics import MEASURES, CentralityVector, Measure, centrality, cohesion_report
from ..projection import CoauthorGraph, Scheme, project, read_edge_list, write_edge_list
from ..threshold import ThresholdReport, cumulative_curve, select_threshold
from ..topology import topology_report
from ..utils import derive_seed
from .outputs import read_json, write_frame, write_json, write_records
from .run_config import RunConfig
from .synth import SynthParams, generate_corpus

logger = logging.getLogger(__name__)

SIDES: tuple[Side, ...] = ("without", "with")
LOG_BINS = 20


def cmd_synth(params: SynthParams, out: Path, format: str = "long-csv") -> Corpus:
    corpus = generate_corpus(params)
    out.parent.mkdir(parents=True, exist_ok=True)
    save_corpus(corpus, out, format)  # type: ignore[arg-type]
    print(f"wrote {corpus.n_papers} papers by {corpus.n_authors} authors to {out}")
    return corpus


@dataclass(frozen=True)
class CutoffDecision:
    cutoff: float
    report: ThresholdReport | None
    distribution: AuthorCountDistribution

    @property
    def overridden(self) -> bool:
        return self.report is None

    def to_dict(self) -> dict:
        data = self.report.to_dict() if self.report else self.distribution.to_dict()
        data["cutoff"] = self.cutoff
        data["override"] = self.overridden
        return data


def _decide_cutoff(run: RunConfig, corpus: Corpus) -> CutoffDecision:
    distribution = author_count_distribution(corpus)
    if run.cutoff is not None:
        logger.info("Using cutoff %s from the command line", run.cutoff)
        return CutoffDecision(run.cutoff, None, distribution)
    report = select_threshold(distribution, coverage=run.coverage)
    return CutoffDecision(report.recommended_cutoff, report, distribution)


def _histogram_records(distribution: AuthorCountDistribution, cutoff: float) -> list[dict]:
    return [
        {"authors": authors, "papers": papers, "hyperauthored": authors > cutoff}
        for authors, papers in distribution.histogram.items()
    ]


def _write_threshold(run: RunConfig, decision: CutoffDecision):
    write_json(run.out / "threshold.json", decision.to_dict())
    write_records(
        run.out / "plots" / "authors_per_paper_histogram.csv",
        _histogram_records(decision.distribution, decision.cutoff),
        ["authors", "papers", "hyperauthored"],
    )
    write_records(
        run.out / "plots" / "authors_per_paper_cumulative.csv",
        list(cumulative_curve(decision.distribution)),
        ["authors", "papers", "cumulative_fraction"],
    )


def cmd_threshold(run: RunConfig) -> CutoffDecision:
    corpus = read_corpus(run.require_input(), run.format)
    decision = _decide_cutoff(run, corpus)
    _write_threshold(run, decision)

    if decision.report:
        for line in decision.report.summary_lines():
            print(line)
    else:
        print(f"cutoff {decision.cutoff:g} (from --cutoff, detection skipped)")
    print()
    print("authors  papers")
    histogram = decision.distribution.histogram
    last_kept = max((authors for authors in histogram if authors <= decision.cutoff), default=None)
    for authors, papers in histogram.items():
        marker = "  <- cutoff" if authors == last_kept else ""
        print(f"{authors:7d}  {papers:6d}{marker}")
    return decision


def _seeds(run: RunConfig, schemes: tuple[Scheme, ...]) -> dict[str, int]:
    """Per-task seeds; the network side is not part of a task name, so both sides share them."""
    master = run.require_seed()
    tasks = ["path_length", "omega"] + [f"betweenness:{scheme}" for scheme in schemes]
    return {task: derive_seed(master, task) for task in tasks}


def _measure_network(
    run: RunConfig, corpus: Corpus, seeds: Mapping[str, int], side: Side
) -> NetworkSuite:
    directory = run.out / f"network_{side}"
    directory.mkdir(parents=True, exist_ok=True)
    bipartite = build_bipartite(corpus)
    graphs = {scheme: project(bipartite, scheme) for scheme in run.ordered_schemes}
    topology = graphs["unweighted"] if "unweighted" in graphs else project(bipartite, "unweighted")

    cohesion = cohesion_report(topology, seed=seeds["path_length"], n_jobs=run.jobs)
    write_json(directory / "cohesion.json", cohesion.to_dict())

    topo = topology_report(
        topology,
        niter=run.omega_niter,
        nrand=run.omega_nrand,
        seed=seeds["omega"],
        max_nodes=run.omega_max_nodes,
        n_jobs=run.jobs,
    )
    write_json(directory / "topology.json", topo.to_dict())

    centralities: dict[tuple[Measure, Scheme], CentralityVector] = {}
    for scheme, graph in graphs.items():
        write_edge_list(graph, directory / f"edges_{scheme}.csv")
        for measure in MEASURES:
            vector = centrality(
                graph,
                measure,
                sample_size=run.betweenness_sample,
                seed=seeds[f"betweenness:{scheme}"],
                n_jobs=run.jobs,
            )
            centralities[(measure, scheme)] = vector
            write_frame(directory / f"centrality_{measure}_{scheme}.csv", vector.to_frame())

    degrees = [topology.degree(node) for node in topology.nodes]
    write_records(
        run.out / "plots" / f"coauthors_per_author_{side}.csv",
        list(log_binned(degrees, LOG_BINS)),
        ["bin_low", "bin_high", "count", "density"],
    )
    write_records(
        run.out / "plots" / f"authors_per_paper_{side}.csv",
        list(log_binned((paper.n_authors for paper in corpus), LOG_BINS)),
        ["bin_low", "bin_high", "count", "density"],
    )

    return NetworkSuite(
        n_papers=corpus.n_papers,
        cohesion=cohesion,
        topology=topo,
        centralities=centralities,
        parameters=run.parameters(),
    )


def cmd_analyze(run: RunConfig) -> ComparisonReport:
    seeds = _seeds(run, run.ordered_schemes)
    corpus = read_corpus(run.require_input(), run.format)
    decision = _decide_cutoff(run, corpus)
    _write_threshold(run, decision)

    filtered, removed = filter_hyperauthored(corpus, decision.cutoff)
    corpora = {"without": filtered, "with": corpus}

    suites: dict[Side, NetworkSuite] = {}
    for side in SIDES:
        logger.info("Measuring the network %s hyperauthored papers", side)
        suites[side] = _measure_network(run, corpora[side], seeds, side)

    summary = removed_summary(removed)
    report = compare_networks(
        suites["without"],
        suites["with"],
        {
            "cutoff": decision.cutoff,
            "cutoff_override": decision.overridden,
            "schemes": list(run.ordered_schemes),
            "seeds": seeds,
            "removed_papers": len(removed),
            "removed_distribution": summary.to_dict() if summary else None,
        },
    )

    write_frame(run.out / "table1.csv", report.to_frame("table1", config.float_precision))
    write_frame(run.out / "table2.csv", report.to_frame("table2", config.float_precision))
    write_json(run.out / "comparison.json", report.to_dict())
    write_json(run.out / "best_weighting.json", best_weighting(report))
    print(report.to_frame(precision=config.float_precision).to_string(index=False))
    return report


def _load_networks(run: RunConfig) -> dict[Side, dict[Scheme, CoauthorGraph]]:
    networks: dict[Side, dict[Scheme, CoauthorGraph]] = {}
    for side in SIDES:
        networks[side] = {}
        for scheme in run.ordered_schemes:
            path = run.out / f"network_{side}" / f"edges_{scheme}.csv"
            if not path.exists():
                raise InputError(f"{path} is missing; run `analyze` with the same --out first.")
            networks[side][scheme] = read_edge_list(path)
    return networks


def _analyzed_cutoff(run: RunConfig) -> float:
    if run.cutoff is not None:
        return run.cutoff
    path = run.out / "threshold.json"
    if not path.exists():
        raise InputError(f"{path} is missing; run `analyze` with the same --out first.")
    cutoff = read_json(path)["cutoff"]
    return math.inf if cutoff == "inf" else float(cutoff)


def _write_ego(
    run: RunConfig,
    ego: str,
    networks: Mapping[Side, Mapping[Scheme, CoauthorGraph]],
    rankings: Mapping[Side, Ranking],
    corpus: Corpus,
    cutoff: float,
):
    directory = run.out / "ego" / ego
    scheme = run.ordered_schemes[0]

    profile = ego_profile(
        corpus,
        cutoff,
        networks["without"][scheme],
        networks["with"][scheme],
        ego,
        rankings["without"],
        rankings["with"],
    )
    report = ego_centrality_suite(
        networks["without"],
        networks["with"],
        ego,
        seed=run.require_seed(),
        sample_size=run.betweenness_sample,
    )

    directory.mkdir(parents=True, exist_ok=True)
    for side in SIDES:
        parent = networks[side][scheme]
        if ego not in parent:
            logger.info("Author %s is absent from the network %s hyperauthored papers", ego, side)
            continue
        network = extract_ego(parent, ego, side).graph
        write_records(
            directory / f"nodes_{side}.csv",
            [
                {"author_id": node, "degree": network.degree(node), "is_ego": node == ego}
                for node in network.nodes
            ],
            ["author_id", "degree", "is_ego"],
        )
        write_records(
            directory / f"edges_{side}.csv",
            [{"author_i": u, "author_j": v, "weight": w} for u, v, w in network.edges()],
            ["author_i", "author_j", "weight"],
        )
    write_json(directory / "profile.json", profile.to_dict())
    write_frame(directory / "centrality.csv", report.to_frame(precision=config.float_precision))
    return report


def cmd_ego(run: RunConfig) -> dict[str, ComparisonReport]:
    if not run.egos and not run.auto_grid:
        raise InputError("Name at least one --ego or pass --auto-grid.")

    networks = _load_networks(run)
    corpus = read_corpus(run.require_input(), run.format)
    cutoff = _analyzed_cutoff(run)
    scheme = run.ordered_schemes[0]
    rankings = {side: rank_by_degree(networks[side][scheme]) for side in SIDES}

    egos = list(run.egos)
    if run.auto_grid:
        grid = select_case_studies(rankings["without"], rankings["with"], run.quantile)
        write_json(run.out / "ego" / "grid.json", grid.to_dict())
        for quadrant, author in grid.representatives().items():
            if author is None:
                print(f"{quadrant}: empty")
            elif author not in egos:
                print(f"{quadrant}: {author}")
                egos.append(author)

    reports: dict[str, ComparisonReport] = {}
    missing: list[str] = []
    for ego in egos:
        try:
            reports[ego] = _write_ego(run, ego, networks, rankings, corpus, cutoff)
        except NotFoundError as error:
            logger.warning("%s", error)
            print(f"ego {ego}: not found")
            missing.append(ego)

    write_json(run.out / "ego" / "summary.json", {"egos": sorted(reports), "missing": missing})
    return reports
