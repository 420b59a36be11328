from .config import config
from .corpus import Corpus, PaperRecord, read_corpus, build_bipartite, filter_hyperauthored
from .threshold import select_threshold
from .projection import CoauthorGraph, project
from .analysis import compare_networks, percent_change

__all__ = [
    "config",
    "Corpus",
    "PaperRecord",
    "read_corpus",
    "build_bipartite",
    "filter_hyperauthored",
    "select_threshold",
    "CoauthorGraph",
    "project",
    "compare_networks",
    "percent_change",
]
