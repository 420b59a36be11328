from .cohesion import (
    CohesionReport,
    PathLengthEstimate,
    density,
    average_clustering,
    connected_components,
    giant_component,
    average_path_length,
    path_length_estimate,
    cohesion_report,
)
from .centrality import (
    CentralityVector,
    Measure,
    MEASURES,
    BetweennessNormalization,
    degree_centrality,
    betweenness_centrality,
    closeness_centrality,
    eigenvector_centrality,
    centrality,
)

__all__ = [
    "CohesionReport",
    "PathLengthEstimate",
    "density",
    "average_clustering",
    "connected_components",
    "giant_component",
    "average_path_length",
    "path_length_estimate",
    "cohesion_report",
    "CentralityVector",
    "Measure",
    "MEASURES",
    "BetweennessNormalization",
    "degree_centrality",
    "betweenness_centrality",
    "closeness_centrality",
    "eigenvector_centrality",
    "centrality",
]
