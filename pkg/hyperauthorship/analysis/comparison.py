import logging
import math
from dataclasses import dataclass, field
from typing import Any, Literal, Mapping

import pandas as pd

from ..config import config
from ..errors import ConfigurationError
from ..metrics import CentralityVector, CohesionReport, Measure, MEASURES
from ..projection import Scheme, SCHEMES
from ..topology import TopologyReport

logger = logging.getLogger(__name__)

Table = Literal["table1", "table2", "ego"]

COLUMNS = ["table", "metric", "scheme", "without", "with", "percent_change"]


def percent_change(v1: float | None, v2: float | None) -> float:
    """(v2 - v1) / |v1| * 100; NaN when v1 is 0 or either value is missing."""
    if v1 is None or v2 is None or math.isnan(v1) or math.isnan(v2) or v1 == 0:
        return math.nan
    return (v2 - v1) / abs(v1) * 100.0


@dataclass(frozen=True)
class ComparisonRow:
    table: Table
    metric: str
    scheme: Scheme | None
    value_without: float
    value_with: float
    percent_change: float

    @classmethod
    def between(
        cls,
        table: Table,
        metric: str,
        value_without: float | None,
        value_with: float | None,
        scheme: Scheme | None = None,
    ) -> "ComparisonRow":
        without = math.nan if value_without is None else float(value_without)
        with_ = math.nan if value_with is None else float(value_with)
        return cls(table, metric, scheme, without, with_, percent_change(without, with_))

    @property
    def is_defined(self) -> bool:
        return not math.isnan(self.percent_change)


def _round_value(value: float, precision: int) -> float | None:
    """
    `precision` decimals for magnitudes of at least 1, `precision` significant digits below that,
    so densities like 0.0004 do not collapse to zero.
    """
    if math.isnan(value):
        return None
    if value == 0 or math.isinf(value) or abs(value) >= 1:
        return round(value, precision)
    return round(value, precision - 1 - math.floor(math.log10(abs(value))))


def _round_change(row: ComparisonRow, precision: int) -> float | None:
    return round(row.percent_change, precision) if row.is_defined else None


@dataclass(frozen=True)
class ComparisonReport:
    rows: tuple[ComparisonRow, ...]
    metadata: Mapping[str, Any] = field(default_factory=dict)

    def table(self, name: Table) -> list[ComparisonRow]:
        return [row for row in self.rows if row.table == name]

    def row(self, metric: str, scheme: Scheme | None = None) -> ComparisonRow:
        for row in self.rows:
            if row.metric == metric and row.scheme == scheme:
                return row
        raise KeyError((metric, scheme))

    def to_frame(self, table: Table | None = None, precision: int | None = None) -> pd.DataFrame:
        """Rows as a frame; values rounded only when a precision is given."""
        rows = self.rows if table is None else self.table(table)

        def rounded(value: float):
            return value if precision is None else _round_value(value, precision)

        return pd.DataFrame(
            [
                (
                    row.table,
                    row.metric,
                    row.scheme or "",
                    rounded(row.value_without),
                    rounded(row.value_with),
                    row.percent_change if precision is None else _round_change(row, precision),
                )
                for row in rows
            ],
            columns=COLUMNS,
        )

    def to_dict(self, precision: int | None = None) -> dict:
        if precision is None:
            precision = config.float_precision
        return {
            "metadata": dict(self.metadata),
            "rows": [
                {
                    "table": row.table,
                    "metric": row.metric,
                    "scheme": row.scheme,
                    "without": _round_value(row.value_without, precision),
                    "with": _round_value(row.value_with, precision),
                    "percent_change": _round_change(row, precision),
                }
                for row in self.rows
            ],
        }


@dataclass(frozen=True)
class NetworkSuite:
    """Everything measured on one co-authorship network, keyed for comparison."""

    n_papers: int
    cohesion: CohesionReport
    topology: TopologyReport | None
    centralities: Mapping[tuple[Measure, Scheme], CentralityVector]
    parameters: Mapping[str, Any] = field(default_factory=dict)


TABLE1_METRICS: tuple[str, ...] = (
    "papers",
    "nodes",
    "edges",
    "density",
    "avg_clustering",
    "avg_path_length",
    "components",
    "giant_component_nodes",
    "giant_component_edges",
    "omega",
    "alpha",
)


def _table1_values(suite: NetworkSuite) -> dict[str, float | None]:
    cohesion = suite.cohesion
    topology = suite.topology
    return {
        "papers": suite.n_papers,
        "nodes": cohesion.n_nodes,
        "edges": cohesion.n_edges,
        "density": cohesion.density,
        "avg_clustering": cohesion.avg_clustering,
        "avg_path_length": cohesion.avg_path_length,
        "components": cohesion.n_components,
        "giant_component_nodes": cohesion.giant_component_nodes,
        "giant_component_edges": cohesion.giant_component_edges,
        "omega": topology.omega if topology else None,
        "alpha": topology.alpha if topology else None,
    }


def centrality_rows(
    table: Table,
    without: Mapping[tuple[Measure, Scheme], CentralityVector | None],
    with_: Mapping[tuple[Measure, Scheme], CentralityVector | None],
) -> list[ComparisonRow]:
    """One row per (measure, scheme) present on either side, measures then schemes in canonical order."""
    keys = set(without) | set(with_)
    rows = []
    for measure in MEASURES:
        for scheme in SCHEMES:
            if (measure, scheme) not in keys:
                continue
            left = without.get((measure, scheme))
            right = with_.get((measure, scheme))
            rows.append(
                ComparisonRow.between(
                    table,
                    f"avg_{measure}",
                    left.average if left else None,
                    right.average if right else None,
                    scheme,
                )
            )
    return rows


def compare_networks(
    without: NetworkSuite, with_: NetworkSuite, metadata: Mapping[str, Any] | None = None
) -> ComparisonReport:
    """`table1` rows (whole-network measures) followed by `table2` rows (average centralities)."""
    if dict(without.parameters) != dict(with_.parameters):
        differing = sorted(
            key
            for key in set(without.parameters) | set(with_.parameters)
            if without.parameters.get(key) != with_.parameters.get(key)
        )
        raise ConfigurationError(
            f"Networks were measured with different parameters: {', '.join(differing)}."
        )

    left = _table1_values(without)
    right = _table1_values(with_)
    rows = [ComparisonRow.between("table1", metric, left[metric], right[metric]) for metric in TABLE1_METRICS]
    rows.extend(centrality_rows("table2", without.centralities, with_.centralities))

    meta = {"parameters": dict(without.parameters)}
    meta.update(metadata or {})
    return ComparisonReport(tuple(rows), meta)


def best_weighting(report: ComparisonReport) -> dict[str, Scheme]:
    """
    For each centrality measure, the scheme whose average moves least between the two networks.
    Rows with an undefined change are ignored; ties go to the earlier scheme in canonical order.
    """
    best: dict[str, tuple[float, int, Scheme]] = {}
    for row in report.rows:
        if row.table == "table1" or row.scheme is None or not row.is_defined:
            continue
        measure = row.metric.removeprefix("avg_")
        candidate = (abs(row.percent_change), SCHEMES.index(row.scheme), row.scheme)
        if measure not in best or candidate < best[measure]:
            best[measure] = candidate
    return {measure: best[measure][2] for measure in MEASURES if measure in best}
