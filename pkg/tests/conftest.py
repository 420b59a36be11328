import io

import pytest

from hyperauthorship.corpus import Corpus, PaperRecord, parse_corpus
from hyperauthorship.projection import CoauthorGraph

from oracles import graph_of


@pytest.fixture
def star() -> CoauthorGraph:
    return graph_of([("c", "l1"), ("c", "l2"), ("c", "l3")])


@pytest.fixture
def path3() -> CoauthorGraph:
    return graph_of([("a", "b"), ("b", "c")])


@pytest.fixture
def triangle() -> CoauthorGraph:
    return graph_of([("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def small_corpus() -> Corpus:
    """Two ordinary papers and one large paper that ties every author together."""
    return Corpus(
        [
            PaperRecord("p1", ("a", "b", "c")),
            PaperRecord("p2", ("c", "d")),
            PaperRecord("p3", ("e",)),
            PaperRecord("p4", tuple(f"h{i:02d}" for i in range(8)) + ("a",)),
        ]
    )


@pytest.fixture
def parse():
    def parse_text(text: str, format="long-csv") -> Corpus:
        return parse_corpus(io.BytesIO(text.encode("utf-8")), format)

    return parse_text
