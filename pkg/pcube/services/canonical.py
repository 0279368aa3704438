"""
Canonical labeling for small graphs.

Colors start from (degree, sorted distance row), are refined by neighbor
color multisets, and the first non-singleton cell of smallest size is
individualized vertex by vertex. Every discrete coloring is a relabeling;
the one with the smallest sorted edge list wins, and its graph6 string is
the key.
"""

import logging
from typing import Optional

from pcube.codecs.graph6 import write_graph6
from pcube.core.config import settings
from pcube.core.exceptions import CanonicalSizeError
from pcube.models.graph import Edge, Graph, canonical_edge
from pcube.services.graph_service import GraphService

logger = logging.getLogger(__name__)

Coloring = list[int]


def _rank(signatures: list) -> Coloring:
    ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return [ranking[sig] for sig in signatures]


def _refine(adjacency: tuple[tuple[int, ...], ...], colors: Coloring) -> Coloring:
    """Split cells by neighbor colors until the partition is stable."""
    cells = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in adjacency[v])))
            for v in range(len(colors))
        ]
        colors = _rank(signatures)
        refined = len(set(colors))
        if refined == cells:
            return colors
        cells = refined


def _target_cell(colors: Coloring) -> list[int]:
    """Vertices of the smallest non-singleton cell, lowest color on ties."""
    cells: dict[int, list[int]] = {}
    for v, color in enumerate(colors):
        cells.setdefault(color, []).append(v)
    candidates = [cell for cell in cells.values() if len(cell) > 1]
    return min(candidates, key=lambda cell: (len(cell), colors[cell[0]]))


def _are_twins(graph: Graph, u: int, v: int) -> bool:
    neighbors = graph.adjacency_sets
    return neighbors[u] - {v} == neighbors[v] - {u}


class _Search:
    def __init__(self, graph: Graph):
        self.graph = graph
        self.best_code: Optional[tuple[Edge, ...]] = None

    def leaf(self, colors: Coloring) -> None:
        code = tuple(sorted(canonical_edge(colors[u], colors[v]) for u, v in self.graph.edges))
        if self.best_code is None or code < self.best_code:
            self.best_code = code

    def descend(self, colors: Coloring) -> None:
        if len(set(colors)) == len(colors):
            self.leaf(colors)
            return
        tried: list[int] = []
        for v in _target_cell(colors):
            # Swapping twins is an automorphism fixing everything else.
            if any(_are_twins(self.graph, v, u) for u in tried):
                continue
            tried.append(v)
            split = [2 * c if w == v else 2 * c + 1 for w, c in enumerate(colors)]
            self.descend(_refine(self.graph.adjacency, split))


def canonical_form(graph: Graph, max_n: Optional[int] = None) -> Graph:
    """The relabeled copy of graph shared by its whole isomorphism class."""
    max_n = settings.canonical_max_n if max_n is None else max_n
    if graph.n > max_n:
        raise CanonicalSizeError(f"canonical labeling supports n <= {max_n}, got {graph.n}")
    if graph.n <= 1:
        return Graph(n=graph.n)

    dist = GraphService(graph).distances.dist
    initial = _rank(
        [(graph.degree(v), tuple(sorted(int(d) for d in dist[v]))) for v in range(graph.n)]
    )
    search = _Search(graph)
    search.descend(_refine(graph.adjacency, initial))
    assert search.best_code is not None
    return Graph(n=graph.n, edges=search.best_code)


def canonical_key(graph: Graph, max_n: Optional[int] = None) -> str:
    """Isomorphism-invariant string key; equal keys mean isomorphic graphs."""
    return write_graph6(canonical_form(graph, max_n))
