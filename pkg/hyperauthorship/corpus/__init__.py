from .paper_record import PaperRecord
from .corpus import (
    Corpus,
    RejectedRecord,
    author_count_distribution,
    filter_hyperauthored,
    removed_summary,
)
from .distribution import AuthorCountDistribution, LogBin, log_binned
from .bipartite import BipartiteGraph, build_bipartite
from ._parsers import CorpusFormat, parse_corpus, write_corpus, read_corpus, save_corpus

__all__ = [
    "PaperRecord",
    "Corpus",
    "RejectedRecord",
    "author_count_distribution",
    "filter_hyperauthored",
    "removed_summary",
    "AuthorCountDistribution",
    "LogBin",
    "log_binned",
    "BipartiteGraph",
    "build_bipartite",
    "CorpusFormat",
    "parse_corpus",
    "write_corpus",
    "read_corpus",
    "save_corpus",
]
