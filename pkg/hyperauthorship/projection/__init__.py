from .coauthor_graph import CoauthorGraph, CSRView, Scheme, SCHEMES
from .projection import project, project_full, project_newman, reweight_jaccard, strip_weights
from ._edge_list import write_edge_list, read_edge_list, sidecar_path

__all__ = [
    "CoauthorGraph",
    "CSRView",
    "Scheme",
    "SCHEMES",
    "project",
    "project_full",
    "project_newman",
    "reweight_jaccard",
    "strip_weights",
    "write_edge_list",
    "read_edge_list",
    "sidecar_path",
]
