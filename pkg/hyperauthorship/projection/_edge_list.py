import json
from os import PathLike
from pathlib import Path

import pandas as pd

from ..errors import InputError
from .coauthor_graph import SCHEMES, CoauthorGraph

EDGE_COLUMNS = ["author_i", "author_j", "weight"]


def _format_weight(weight: float, integral: bool) -> str:
    return str(int(weight)) if integral else repr(float(weight))


def sidecar_path(edge_list_path: str | PathLike) -> Path:
    path = Path(edge_list_path)
    return path.with_name(path.stem.replace("edges", "graph", 1) + ".json")


def write_edge_list(
    graph: CoauthorGraph,
    edge_list_path: str | PathLike,
    sidecar: str | PathLike | None = None,
):
    """
    Write `author_i,author_j,weight` rows (author_i < author_j) plus a JSON sidecar holding the
    scheme, counts and isolated authors so the graph can be read back whole.
    """
    integral = graph.scheme in ("full", "unweighted")
    frame = pd.DataFrame(
        [(u, v, _format_weight(w, integral)) for u, v, w in graph.edges()],
        columns=EDGE_COLUMNS,
    )
    Path(edge_list_path).write_text(frame.to_csv(index=False, lineterminator="\n"), "utf-8")

    meta = {
        "scheme": graph.scheme,
        "n_nodes": graph.n_nodes,
        "n_edges": graph.n_edges,
        "isolated_nodes": graph.isolated_nodes(),
    }
    sidecar = sidecar if sidecar is not None else sidecar_path(edge_list_path)
    Path(sidecar).write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n", "utf-8")


def read_edge_list(
    edge_list_path: str | PathLike, sidecar: str | PathLike | None = None
) -> CoauthorGraph:
    sidecar = sidecar if sidecar is not None else sidecar_path(edge_list_path)
    meta = json.loads(Path(sidecar).read_text("utf-8"))
    scheme = meta.get("scheme")
    if scheme not in SCHEMES:
        raise InputError(f"{sidecar}: unknown scheme {scheme!r}.")

    frame = pd.read_csv(
        edge_list_path,
        dtype={"author_i": str, "author_j": str, "weight": float},
        keep_default_na=False,
    )
    if list(frame.columns) != EDGE_COLUMNS:
        raise InputError(f"{edge_list_path}: expected header {','.join(EDGE_COLUMNS)}.")

    graph = CoauthorGraph.from_edges(
        meta.get("isolated_nodes", []),
        zip(frame["author_i"], frame["author_j"], frame["weight"].astype(float)),
        scheme,
    )
    if graph.n_nodes != meta["n_nodes"] or graph.n_edges != meta["n_edges"]:
        raise InputError(
            f"{edge_list_path}: read {graph.n_nodes} nodes / {graph.n_edges} edges, "
            f"sidecar says {meta['n_nodes']} / {meta['n_edges']}."
        )
    return graph
